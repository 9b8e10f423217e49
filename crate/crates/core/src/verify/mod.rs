//! The reproduction suite: every identity as an executable check, the
//! E²-page builder and the machine-readable report.
//!
//! Each check runs over the generic field and again after specialising `v`
//! to 2 and 5/2. Witnesses found by the solver over the generic field are
//! replayed at the numeric points against targets recomputed there.

mod algebra;
mod complexes;
mod cyclic;
mod detection;
mod e2;
mod functionals;
mod printed;
mod support;

pub use detection::{detect_class, Detection};
pub use e2::{e2_table, E2Report, Parity};
pub use functionals::select_eta_sign;

use crate::catalog::EtaSign;
use crate::error::{Error, Result};
use crate::solver::TruncationBox;
use serde::Serialize;
use std::sync::OnceLock;
use std::time::Instant;
use support::{Ctx, Outcome};

/// The η normalisation selected by testing both printed signs.
pub fn eta_sign() -> EtaSign {
    static SIGN: OnceLock<EtaSign> = OnceLock::new();
    *SIGN.get_or_init(|| select_eta_sign().expect("exactly one eta sign makes xi cyclic"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How a homology-level claim is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mechanism {
    /// An identity of chains, cochains or scalars.
    ExactIdentity,
    /// A chain whose boundary is the difference.
    SolverWitness,
    /// A nonzero value of a cap product paired with a twisted trace.
    PairingCertificate,
}

impl Mechanism {
    pub fn tag(self) -> &'static str {
        match self {
            Mechanism::ExactIdentity => "a",
            Mechanism::SolverWitness => "b",
            Mechanism::PairingCertificate => "c",
        }
    }
}

/// The exact object by which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub subject: String,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    /// The statement being reproduced.
    pub paper_ref: String,
    pub detail: Detail,
    pub mechanisms: Vec<Mechanism>,
    /// Fields in which the check was carried out.
    pub points: Vec<String>,
    pub runtime_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A registered check.
pub struct CheckInfo {
    pub id: &'static str,
    pub criterion: u8,
    pub statement: &'static str,
    pub mechanisms: &'static [Mechanism],
    run: fn(&Ctx) -> Vec<(String, Outcome)>,
}

use Mechanism::*;

macro_rules! check {
    ($id:literal, $crit:literal, $mech:expr, $run:path, $stmt:literal) => {
        CheckInfo { id: $id, criterion: $crit, statement: $stmt, mechanisms: $mech, run: $run }
    };
}

static REGISTRY: &[CheckInfo] = &[
    check!("relations", 1, &[ExactIdentity], algebra::relations, "the seven defining relations hold in the normal form"),
    check!("associativity", 1, &[ExactIdentity], algebra::associativity, "(xy)z = x(yz) on random triples"),
    check!(
        "twisted_commutators",
        1,
        &[ExactIdentity],
        algebra::twisted_commutators,
        "closed forms of e_{i,j,k} x - sigma(x) e_{i,j,k} for x = a, b, c, d"
    ),
    check!("braiding_table", 2, &[ExactIdentity], algebra::braiding_table, "the sixteen values Psi(x (x) y) on generators"),
    check!(
        "wedge3_expansion",
        2,
        &[ExactIdentity],
        algebra::wedge3_expansion,
        "b^a^d = b@a@d - q^-1 a@b@d - b@d@a - (q - q^-1) b@c@b + a@d@b + q d@b@a - d@a@b"
    ),
    check!(
        "complex_axioms",
        3,
        &[ExactIdentity],
        complexes::complex_axioms,
        "bb = 0, b'b' = 0, the relations between b, b', t, s and N, the paracyclic relations, bB + Bb = id - T and B(D) in D"
    ),
    check!("omega_cycles", 4, &[ExactIdentity], complexes::omega_cycles, "omega2(r,i), omega2'(r,i), omega3(r,i) and dA are cycles"),
    check!(
        "cap_list_20",
        5,
        &[ExactIdentity],
        detection::cap_list,
        "omega3(0,0) cap (d1 cup d2 cup d3) for the twenty triples of basic derivations"
    ),
    check!(
        "omega2_caps",
        6,
        &[ExactIdentity, SolverWitness],
        detection::omega2_caps,
        "[omega2(N-2,i)] cap [d] = [omega2'(N-2,i)] cap [d'] = [omega_{N-1,i+1} (x) c] + [omega_{N-1,i} (x) b], [omega2'] cap [d] = [omega2] cap [d'] = 0"
    ),
    check!(
        "omega3_caps",
        6,
        &[ExactIdentity, SolverWitness],
        detection::omega3_caps,
        "[omega3(N-2,i)] cap ([delH+] cup [delH-]) = 2([omega_{N-1,i+1} (x) c] + [omega_{N-1,i} (x) b])"
    ),
    check!(
        "degree_zero_pairings",
        6,
        &[ExactIdentity, SolverWitness, PairingCertificate],
        detection::degree_zero_pairings,
        "dA cap [H+E+F+] = [1], [omega3(r,r)] cap [H+E-E+] = [b^{r+2}], [omega3(r,0)] cap [H-F-F+] = [c^{r+2}], and triple cups kill omega3(r,i) for 0 < i < r"
    ),
    check!("trace_law", 7, &[ExactIdentity], functionals::trace_law, "int(xy) = int(sigma(y) x) for the traces on [1], [bc] and [b]"),
    check!("trace_duality", 7, &[ExactIdentity], functionals::trace_duality, "int_[e] [e'] = delta_{e,e'} on the degree-zero basis"),
    check!("phi_cocycle", 8, &[ExactIdentity], functionals::phi_cocycle, "phi is a Hochschild cocycle"),
    check!(
        "phi_noncyclic",
        8,
        &[ExactIdentity],
        functionals::phi_noncyclic,
        "phi(1, e_{j-i,0,0}, d^j c, a^i b) = q^-i (i - j), so phi(1, a, dc, b) = -1"
    ),
    check!("xi_cyclic", 8, &[ExactIdentity], functionals::xi_cyclic, "xi(a0..a3) = -xi(sigma(a3), a0, a1, a2)"),
    check!("xi_unit_slot", 8, &[ExactIdentity], functionals::xi_unit_slot, "xi(1, x, y, z) = 0"),
    check!("xi_pairs_dA", 8, &[PairingCertificate], functionals::xi_pairs_da, "xi(dA) = 1"),
    check!("phi_pairs_dA", 8, &[PairingCertificate], functionals::phi_pairs_da, "phi(dA) = 1"),
    check!(
        "eta_sign",
        8,
        &[ExactIdentity, PairingCertificate],
        functionals::eta_sign_check,
        "exactly one sign of eta makes phi + eta cyclic with xi(dA) = 1"
    ),
    check!(
        "b_images_degree0",
        9,
        &[ExactIdentity, SolverWitness],
        cyclic::b_images_degree0,
        "B[1] = 0, B[x^i] = i[x^{i-1} (x) x], B[omega_{N,i}] = i[omega_{N-1,i-1} (x) b] + (N-i)[omega_{N-1,i} (x) c]"
    ),
    check!(
        "b_images_degree1",
        9,
        &[ExactIdentity, SolverWitness],
        cyclic::b_images_degree1,
        "B[b^{j-1} (x) b] = B[c^{j-1} (x) c] = 0, B[b (x) c] = [1 (x) (b^c)], B[omega_{N-1,i} (x) b] = -(N-1-i)[omega2'(N-2,i)], B[omega_{N-1,i} (x) c] = i[omega2'(N-2,i-1)]"
    ),
    check!(
        "b_image_omega2",
        9,
        &[ExactIdentity, SolverWitness],
        cyclic::b_image_omega2,
        "B[omega2(r,i)] = (2i - r)[omega3(r,i)]"
    ),
    check!(
        "one_wedge_vanishes",
        9,
        &[ExactIdentity, SolverWitness],
        cyclic::one_wedge_vanishes,
        "[1 (x) (b^c)] = 0 when 0 lies in S(lambda)"
    ),
    check!(
        "e2_tables",
        10,
        &[ExactIdentity, SolverWitness],
        e2::e2_tables,
        "the E2 page and the periodic cyclic homology generators for N = 2, 3, 4, 5"
    ),
    check!("koszul", 11, &[ExactIdentity], algebra::koszul, "consecutive maps of the Koszul resolution compose to zero"),
    check!(
        "specialisation",
        12,
        &[ExactIdentity],
        algebra::specialisation,
        "specialising v commutes with products, automorphisms and boundaries"
    ),
];

pub fn registry() -> &'static [CheckInfo] {
    REGISTRY
}

/// Ids of the checks backing an acceptance criterion.
pub fn checks_for_criterion(n: u8) -> Vec<&'static str> {
    REGISTRY.iter().filter(|c| c.criterion == n).map(|c| c.id).collect()
}

pub const DEFAULT_SEED: u64 = 1;

/// Runs the selected checks (all of them for an empty selection), in
/// registry order. `bx` widens the sampling box of the randomised checks.
pub fn run_suite(selection: &[String], bx: &TruncationBox, seed: u64) -> Result<Vec<CheckResult>> {
    let mut chosen: Vec<&CheckInfo> = Vec::new();
    for id in selection {
        let c = REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.clone()))?;
        if !chosen.iter().any(|x| x.id == c.id) {
            chosen.push(c);
        }
    }
    if selection.is_empty() {
        chosen = REGISTRY.iter().collect();
    }
    chosen.sort_by_key(|c| REGISTRY.iter().position(|x| x.id == c.id));
    let ctx = Ctx { bx: *bx, seed };
    let run_one = |c: &CheckInfo| -> Vec<CheckResult> {
        let start = Instant::now();
        let parts = (c.run)(&ctx);
        let ms = start.elapsed().as_millis() as u64;
        parts
            .into_iter()
            .map(|(id, o)| {
                let (status, detail, points) = match o {
                    Ok(p) => (Status::Pass, Detail { message: p.message, discrepancy: None }, p.points),
                    Err(f) => (Status::Fail, Detail { message: f.message, discrepancy: f.discrepancy }, f.points),
                };
                CheckResult {
                    check_id: id,
                    status,
                    paper_ref: c.statement.to_string(),
                    detail,
                    mechanisms: c.mechanisms.to_vec(),
                    points,
                    runtime_ms: ms,
                }
            })
            .collect()
    };
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(chosen.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Vec<CheckResult>>> = vec![None; chosen.len()];
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if k >= chosen.len() {
                    break;
                }
                let r = run_one(chosen[k]);
                results.lock().unwrap()[k] = Some(r);
            });
        }
    });
    Ok(slots.into_iter().flatten().flatten().collect())
}

/// One line per result; timings only on request so reports are reproducible byte for byte.
pub fn render_text(results: &[CheckResult], timings: bool) -> String {
    let mut out = String::new();
    for r in results {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mech: Vec<&str> = r.mechanisms.iter().map(|m| m.tag()).collect();
        out.push_str(&format!("{status} {} [{}] {}", r.check_id, mech.join(","), r.detail.message));
        if timings {
            out.push_str(&format!(" ({} ms)", r.runtime_ms));
        }
        out.push('\n');
        if let Some(d) = &r.detail.discrepancy {
            out.push_str(&format!("     {}: got {}, expected {}\n", d.subject, d.got, d.expected));
        }
    }
    out
}

pub fn render_json(results: &[CheckResult], timings: bool) -> serde_json::Value {
    let mut v = serde_json::to_value(results).expect("reports serialise");
    if !timings {
        for r in v.as_array_mut().expect("array") {
            r.as_object_mut().expect("object").remove("runtime_ms");
        }
    }
    v
}
