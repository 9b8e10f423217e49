//! Detection of homology classes by cap products with cups of twisted
//! derivations, followed by twisted traces.

use super::printed;
use super::support::*;
use crate::algebra::{Aut, Elem, Gen, Word};
use crate::catalog::{d_a, omega2, omega2p, omega3, trace_of, trace_one, twisted_central, Sign};
use crate::complexes::{Chain, Cochain, Trace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::wedge2;
use crate::products::cap;
use crate::solver::Complex;
use crate::tensor::Tensor;

const LABELS: [&str; 6] = ["H+", "E+", "F+", "H-", "E-", "F-"];

/// Outcome of [`detect_class`].
#[derive(Clone, Debug, PartialEq)]
pub enum Detection<F: Field> {
    /// `∫ (z ⌢ probe)` is nonzero, so `[z] ≠ 0`.
    Detected { probe: String, trace: String, value: F },
    /// Every probe paired to zero; nothing is concluded.
    Undetected { probes: usize },
}

fn probe_order(n: usize) -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&str>> = Vec::new();
    if n == 3 {
        out.extend([vec!["H+", "E+", "F+"], vec!["H+", "E-", "E+"], vec!["H-", "F-", "F+"]]);
    }
    let mut all: Vec<Vec<&str>> = vec![vec![]];
    for _ in 0..n {
        all = all.into_iter().flat_map(|p| LABELS.iter().map(move |l| [p.clone(), vec![*l]].concat())).collect();
    }
    for p in all {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// The traces dual to the degree-zero basis classes with words of length at most `len`.
fn dual_traces<F: Field>(twist: &Aut<F>, len: u32) -> Vec<Trace<F>> {
    let l = len as i32;
    let mut out = Vec::new();
    for i in -l..=l {
        for j in 0..=len {
            for k in 0..=len {
                if let Ok(t) = trace_of(Word::new(i, j, k), twist.clone()) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Caps the cycle `z` down to degree zero with cups of the basic twisted
/// derivations (the priority probes first, then every ordered tuple) and
/// pairs the result with the dual traces of the degree-zero basis.
pub fn detect_class<F: Field>(z: &Chain<F>) -> Result<Detection<F>> {
    let n = z.degree();
    if n > 0 && !z.boundary()?.normalize().is_zero() {
        return Err(Error::Domain("detect_class needs a cycle".into()));
    }
    let probes = probe_order(n);
    for p in &probes {
        let y = if p.is_empty() { z.clone() } else { cap(z, &cup_all::<F>(p))? };
        if y.is_zero() || !y.twist().is_sigma() {
            continue;
        }
        let x = y.body().to_elem();
        for t in dual_traces(y.twist(), y.max_len()) {
            let value = t.eval(&x);
            if !value.is_zero() {
                let probe = if p.is_empty() { "none".into() } else { format!("[{}]", p.join(" ")) };
                return Ok(Detection::Detected { probe, trace: t.to_string(), value });
            }
        }
    }
    Ok(Detection::Undetected { probes: probes.len() })
}

fn cap_entry<F: Exact>(_: &mut Witnesses, k: usize) -> Step<String> {
    let (labels, rhs) = printed::CAP_LIST[k];
    let y = cap(&d_a::<F>(), &cup_all::<F>(&labels))?;
    let got = y.body().to_elem();
    let want = lift::<F>(&printed::elem(rhs))?;
    let name = labels.map(|l| format!("del{l}")).join(" cup ");
    if got != want {
        return Err(mismatch(format!("dA cap ({name})"), &got, &want));
    }
    Ok(format!("dA cap ({name}) = {got}"))
}

pub(crate) fn cap_list(_: &Ctx) -> Vec<(String, Outcome)> {
    (0..printed::CAP_LIST.len()).map(|k| (format!("cap_list_20/{:02}", k + 1), at_points!(cap_entry(k)))).collect()
}

pub(crate) fn half_sum<F: Field>() -> Step<Cochain<F>> {
    let h = F::from_ratio(1, 2);
    Ok(Cochain::combination(vec![(h.clone(), crate::catalog::del_h(Sign::Plus)), (h, crate::catalog::del_h(Sign::Minus))])?)
}

pub(crate) fn minus_h<F: Field>() -> Cochain<F> {
    crate::catalog::del_h(Sign::Minus).scale(-F::one())
}

/// `ω_{N-1,i+1} ⊗ c + ω_{N-1,i} ⊗ b` in the twist `σ_{q^-N,1}`.
pub(crate) fn t_chain<F: Field>(n: u32, i: u32) -> Chain<F> {
    let tw = Aut::sigma_q(-(n as i64), 0);
    let (b, c) = (Elem::gen(Gen::B), Elem::gen(Gen::C));
    chain_of(&tw, &[Elem::omega(n - 1, i + 1), c]).add(&chain_of(&tw, &[Elem::omega(n - 1, i), b]))
}

fn omega2_caps_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let (d, dp) = (half_sum::<F>()?, minus_h::<F>());
    for n in 2..=5u32 {
        let r = n - 2;
        for i in 0..=r {
            let t = t_chain::<F>(n, i);
            let zero = Chain::zero(1, t.twist().clone());
            let (z2, z2p) = (omega2::<F>(r, i)?, omega2p::<F>(r, i)?);
            let cases = [
                ("omega2 cap d", cap(&z2, &d)?, &t),
                ("omega2p cap d'", cap(&z2p, &dp)?, &t),
                ("omega2p cap d", cap(&z2p, &d)?, &zero),
                ("omega2 cap d'", cap(&z2, &dp)?, &zero),
            ];
            for (name, lhs, rhs) in cases {
                tally.note(F::bounds(&lhs.sub(rhs), Complex::Normalised, &format!("{name} at ({r},{i})"), w)?);
            }
        }
    }
    let tw: Aut<F> = Aut::modular();
    for (x, y) in printed::B_IDENTITIES {
        let lhs = Chain::new(tw.clone(), lift_tensor(&printed::tensor(x))?).boundary()?;
        let rhs = Chain::new(tw.clone(), lift_tensor(&printed::tensor(y))?);
        expect_chain_eq(format!("b({x})"), &lhs, &rhs, Complex::Normalised)?;
        tally.note(super::Mechanism::ExactIdentity);
    }
    let z2 = omega2::<F>(0, 0)?;
    let z2p = omega2p::<F>(0, 0)?;
    let hp = crate::catalog::del_h::<F>(Sign::Plus);
    let hm = crate::catalog::del_h::<F>(Sign::Minus);
    let p = Chain::new(tw.clone(), lift_tensor(&printed::tensor(printed::OMEGA2_CAP_H))?);
    let sym = Chain::new(tw.clone(), lift_tensor(&printed::tensor("c@b + b@c"))?);
    let two = F::from_i64(2);
    let cases = [
        ("omega2(0,0) cap delH+ - printed", cap(&z2, &hp)?.sub(&p.scale(&two))),
        ("omega2(0,0) cap delH-", cap(&z2, &hm)?),
        ("omega2p(0,0) cap delH+ - (c@b + b@c)", cap(&z2p, &hp)?.sub(&sym)),
        ("omega2p(0,0) cap delH- + (c@b + b@c)", cap(&z2p, &hm)?.add(&sym)),
    ];
    for (name, x) in cases {
        tally.note(F::bounds(&x, Complex::Normalised, name, w)?);
    }
    Ok(format!("N = 2..5, all i; the four printed boundaries; omega2(0,0), omega2p(0,0) against delH+- {}", tally.summary()))
}

pub(crate) fn omega2_caps(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("omega2_caps".into(), at_points!(omega2_caps_at()))]
}

fn omega3_caps_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let hh = cup_all::<F>(&["H+", "H-"]);
    let two = F::from_i64(2);
    for n in 2..=5u32 {
        let r = n - 2;
        for i in 0..=r {
            let x = cap(&omega3::<F>(r, i)?, &hh)?.sub(&t_chain::<F>(n, i).scale(&two));
            tally.note(F::bounds(&x, Complex::Normalised, &format!("omega3({r},{i}) cap delH+ cup delH-"), w)?);
        }
    }
    let x = cap(&d_a::<F>(), &crate::catalog::del_h(Sign::Minus))?;
    expect_chain_eq("dA cap delH-", &x, &omega2::<F>(0, 0)?.neg(), Complex::Normalised)?;
    tally.note(super::Mechanism::ExactIdentity);
    for r in 0..=3u32 {
        for i in 0..=r {
            let x = cap(&d_a::<F>(), &twisted_central(i, r - i))?;
            expect_chain_eq(format!("dA cap omega({r},{i})"), &x, &omega3::<F>(r, i)?, Complex::Unnormalised)?;
            tally.note(super::Mechanism::ExactIdentity);
        }
    }
    Ok(format!("N = 2..5, all i; dA cap delH- = -omega2(0,0); omega3(r,i) = dA cap omega(r,i) for r <= 3 {}", tally.summary()))
}

pub(crate) fn omega3_caps(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("omega3_caps".into(), at_points!(omega3_caps_at()))]
}

/// `[z ⌢ probe] = [e]` by a degree-zero witness, and `∫_{[e]} (z ⌢ probe) = 1`.
fn pairs_to<F: Exact>(w: &mut Witnesses, tally: &mut Tally, name: &str, z: &Chain<F>, probe: &[&str], e: Word) -> Step {
    let y = cap(z, &cup_all::<F>(probe))?;
    let target = Chain::new(y.twist().clone(), Tensor::from_elem(&Elem::word(e)));
    tally.note(F::bounds(&y.sub(&target), Complex::Normalised, &format!("{name} - [{e}]"), w)?);
    let t = trace_of(e, y.twist().clone())?;
    let v = t.eval(&y.body().to_elem());
    expect_eq(format!("{t} on {name}"), &v, &F::one())?;
    tally.note(super::Mechanism::PairingCertificate);
    Ok(())
}

fn degree_zero_pairings_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let y = cap(&d_a::<F>(), &cup_all::<F>(&["H+", "E+", "F+"]))?;
    expect_eq("twist of dA cap [H+E+F+]", y.twist(), trace_one::<F>().twist())?;
    pairs_to(w, &mut tally, "dA cap [H+E+F+]", &d_a::<F>(), &["H+", "E+", "F+"], Word::ONE)?;
    for r in 0..=3u32 {
        let tw: Aut<F> = Aut::sigma_q(-(r as i64), 0);
        let z = omega3::<F>(r, r)?;
        let y = cap(&z, &cup_all::<F>(&["H+", "E-", "E+"]))?;
        expect_eq(format!("twist of omega3({r},{r}) cap [H+E-E+]"), y.twist(), &tw)?;
        pairs_to(w, &mut tally, &format!("omega3({r},{r}) cap [H+E-E+]"), &z, &["H+", "E-", "E+"], Word::new(0, r + 2, 0))?;
        let z = omega3::<F>(r, 0)?;
        pairs_to(w, &mut tally, &format!("omega3({r},0) cap [H-F-F+]"), &z, &["H-", "F-", "F+"], Word::new(0, 0, r + 2))?;
    }
    let mut triples = 0;
    for (r, i) in [(2u32, 1u32), (3, 1), (3, 2)] {
        let z = omega3::<F>(r, i)?;
        for a in LABELS {
            for b in LABELS {
                for c in LABELS {
                    let y = cap(&z, &cup_all::<F>(&[a, b, c]))?;
                    tally.note(F::bounds(&y, Complex::Normalised, &format!("omega3({r},{i}) cap [{a}{b}{c}]"), w)?);
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("three pairings for r <= 3; {triples} vanishing triple caps for 0 < i < r <= 3 {}", tally.summary()))
}

pub(crate) fn degree_zero_pairings(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("degree_zero_pairings".into(), at_points!(degree_zero_pairings_at()))]
}

/// `1 ⊗ (b ∧ c)` in the twist `σ_{q^-N,1}`.
pub(crate) fn one_wedge<F: Field>(n: u32) -> Chain<F> {
    let (b, c) = (Elem::gen(Gen::B), Elem::gen(Gen::C));
    Chain::new(Aut::sigma_q(-(n as i64), 0), Tensor::from_elem(&Elem::one()).tensor(&wedge2(&b, &c)))
}
