use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qsl2::products::{cap, pair};
use qsl2::solver::{solve_boundary, SolveReport, TruncationBox};
use qsl2::text::{chain_to_json, eval_str, parse, parse_aut, parse_chain, parse_elem, Value};
use qsl2::verify::{e2_table, render_json, render_text, run_suite, E2Report, DEFAULT_SEED};
use qsl2::{Aut, Chain, Error};
use serde_json::json;

#[derive(Parser)]
#[command(name = "qsl2", version, about = "Exact computations in k_q[SL(2)] and its twisted Hochschild and cyclic complexes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// PBW normal form of an expression.
    Nf { expr: String },
    /// Applies an automorphism such as `sigma(q,1)` to an algebra element.
    Aut { aut: String, expr: String },
    /// Hochschild boundary b.
    Boundary {
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        normalize: bool,
        expr: String,
    },
    /// Connes' B on the normalised complex.
    Bop {
        #[arg(long)]
        twist: Option<String>,
        expr: String,
    },
    /// Cap product of a chain with a cochain.
    Cap {
        #[arg(long)]
        twist: Option<String>,
        chain: String,
        cochain: String,
    },
    /// Cup product of two cochains.
    Cup { left: String, right: String },
    /// Pairing of a functional with a chain.
    Pair { functional: String, chain: String },
    /// Looks up a catalog entry such as `omega3(0,0)`, `delH+` or `phi`.
    Catalog { key: String },
    /// Searches the box for a chain whose boundary is TARGET.
    Solve {
        #[arg(long)]
        twist: Option<String>,
        /// I,J,K[,D[,L]]
        #[arg(long = "box", env = "QSL2_BOX", default_value = "2,3,3")]
        bx: TruncationBox,
        target: String,
    },
    /// E² page of the Connes spectral sequence for the twist σ_{q^-N,1}.
    E2 {
        #[arg(long = "N")]
        n: u32,
    },
    /// Runs verification checks; all of them when no suite is given.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Widens each check's own sampling window.
        #[arg(long = "box", env = "QSL2_BOX", default_value = "0,0,0")]
        bx: TruncationBox,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include per-check timings.
        #[arg(long)]
        timings: bool,
    },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn twist(t: &Option<String>) -> qsl2::Result<Option<Aut>> {
    t.as_deref().map(parse_aut).transpose()
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Chain(c) => chain_to_json(c),
        v => json!({"kind": v.kind(), "value": v.to_string()}),
    }
}

fn print_chain(c: &Chain, format: Format) {
    match format {
        Format::Text => println!("{c}"),
        Format::Json => println!("{}", chain_to_json(c)),
    }
}

fn print_value(v: &Value, format: Format) {
    match format {
        Format::Text => println!("{v}"),
        Format::Json => println!("{}", value_json(v)),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON renders"));
}

fn solve_json(r: &SolveReport) -> serde_json::Value {
    json!({
        "status": r.status,
        "witness": r.witness.as_ref().map(chain_to_json),
        "box": r.bx,
        "complex": r.complex,
        "columns": r.columns,
        "rows": r.rows,
        "evidence": r.evidence,
    })
}

fn e2_text(r: &E2Report) -> String {
    let parity = serde_json::to_value(r.parity).expect("parity renders");
    let mut out = format!("N = {} ({})\n", r.n, parity.as_str().unwrap_or_default());
    for e in r.entries.iter().filter(|e| !e.classes.is_empty()) {
        out.push_str(&format!("E2[{},{}]: {}\n", e.p, e.q, e.classes.join(", ")));
    }
    out.push_str(&format!("HP_even: {}\nHP_odd: {}\n", r.hp_even, r.hp_odd));
    for c in &r.certificates {
        out.push_str(&format!("certificate [{}]: {}\n", c.mechanism.tag(), c.claim));
    }
    out
}

fn run(cli: Cli) -> qsl2::Result<Outcome> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Nf { expr } => print_value(&eval_str(&expr)?, format),
        Cmd::Aut { aut, expr } => {
            let s = parse_aut(&aut)?;
            let x = parse_elem(&expr)?;
            print_value(&Value::Tensor(qsl2::tensor::Tensor::from_elem(&s.apply(&x))), format);
        }
        Cmd::Boundary { twist: t, normalize, expr } => {
            let ch = parse_chain(&expr, twist(&t)?.as_ref())?;
            let ch = if normalize { ch.normalize() } else { ch };
            let b = ch.boundary()?;
            print_chain(&if normalize { b.normalize() } else { b }, format);
        }
        Cmd::Bop { twist: t, expr } => {
            let ch = parse_chain(&expr, twist(&t)?.as_ref())?;
            print_chain(&qsl2::cyclic::connes_b(&ch)?, format);
        }
        Cmd::Cap { twist: t, chain, cochain } => {
            let ch = parse_chain(&chain, twist(&t)?.as_ref())?;
            let f = eval_str(&cochain)?.into_cochain()?;
            print_chain(&cap(&ch, &f)?, format);
        }
        Cmd::Cup { left, right } => {
            let f = eval_str(&left)?.into_cochain()?;
            let g = eval_str(&right)?.into_cochain()?;
            print_value(&Value::Cochain(f.cup(&g)), format);
        }
        Cmd::Pair { functional, chain } => {
            let f = eval_str(&functional)?.into_functional()?;
            let ch = parse_chain(&chain, Some(f.chain_twist()))?;
            print_value(&Value::Scalar(pair(&f, &ch)?), format);
        }
        Cmd::Catalog { key } => {
            let e = parse(&key)?;
            let k = e.as_key()?;
            let v = e.eval()?;
            match format {
                Format::Text => println!("{k} = {v}"),
                Format::Json => {
                    let mut j = value_json(&v);
                    j["key"] = json!(k.to_string());
                    println!("{j}");
                }
            }
        }
        Cmd::Solve { twist: t, bx, target } => {
            let ch = parse_chain(&target, twist(&t)?.as_ref())?;
            let r = solve_boundary(&ch, &bx);
            match format {
                Format::Text => match &r.witness {
                    Some(w) => println!("witness: {w}"),
                    None => println!(
                        "no witness in box {},{},{} ({} columns, {} evidence)",
                        bx.max_abs_i,
                        bx.max_j,
                        bx.max_k,
                        r.columns,
                        serde_json::to_value(r.evidence).expect("renders").as_str().unwrap_or_default()
                    ),
                },
                Format::Json => print_json(&solve_json(&r)),
            }
            if !r.found() {
                return Ok(Outcome::CheckFailed);
            }
        }
        Cmd::E2 { n } => {
            let r = e2_table(n)?;
            match format {
                Format::Text => print!("{}", e2_text(&r)),
                Format::Json => print_json(&serde_json::to_value(&r).expect("report renders")),
            }
        }
        Cmd::Verify { suite, bx, seed, timings } => {
            let results = run_suite(&suite, &bx, seed)?;
            match format {
                Format::Text => {
                    print!("{}", render_text(&results, timings));
                    let failed = results.iter().filter(|r| !r.passed()).count();
                    println!("{} passed, {failed} failed", results.len() - failed);
                }
                Format::Json => print_json(&render_json(&results, timings)),
            }
            if results.iter().any(|r| !r.passed()) {
                return Ok(Outcome::CheckFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Parse { .. } = e {
                eprintln!("hint: see `qsl2 --help` for the expression syntax");
            }
            ExitCode::from(2)
        }
    }
}
