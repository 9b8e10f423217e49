//! Twisted derivations, twisted central elements, traces and the cocycles φ, η, ξ.

use crate::algebra::{Aut, Elem, Gen, Word};
use crate::complexes::{Cochain, Functional, Trace};
use crate::error::{Error, Result};
use crate::field::Field;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

fn der<F: Field>(vals: [Elem<F>; 4], twist: Aut<F>, label: String) -> Cochain<F> {
    Cochain::derivation(vals, twist).expect("catalog derivation violates the relations").with_label(label)
}

fn g<F: Field>(x: Gen) -> Elem<F> {
    Elem::gen(x)
}

fn kg<F: Field>(e: i64, x: Gen) -> Elem<F> {
    Elem::term(F::q_pow(e), x.word())
}

/// `∂^+_H : a,b,c,d ↦ -a, b, -c, d` and `∂^-_H : a,b,c,d ↦ -a, -b, c, d`, untwisted.
pub fn del_h<F: Field>(s: Sign) -> Cochain<F> {
    use Gen::*;
    let vals = match s {
        Sign::Plus => [g(A).neg(), g(B), g(C).neg(), g(D)],
        Sign::Minus => [g(A).neg(), g(B).neg(), g(C), g(D)],
    };
    der(vals, Aut::identity(), format!("delH{s}"))
}

/// `∂^+_E : qb, 0, qd, 0` in `σ_{q,q^-1}`; `∂^-_E : 0, 0, q^-1 a, q^-1 b` in `σ_{q,q}`.
pub fn del_e<F: Field>(s: Sign) -> Cochain<F> {
    use Gen::*;
    let z = Elem::zero;
    match s {
        Sign::Plus => der([kg(1, B), z(), kg(1, D), z()], Aut::sigma_q(1, -1), "delE+".into()),
        Sign::Minus => der([z(), z(), kg(-1, A), kg(-1, B)], Aut::sigma_q(1, 1), "delE-".into()),
    }
}

/// `∂^+_F : 0, a, 0, c` in `σ_{q,q^-1}`; `∂^-_F : c, d, 0, 0` in `σ_{q,q}`.
pub fn del_f<F: Field>(s: Sign) -> Cochain<F> {
    use Gen::*;
    let z = Elem::zero;
    match s {
        Sign::Plus => der([z(), g(A), z(), g(C)], Aut::sigma_q(1, -1), "delF+".into()),
        Sign::Minus => der([g(C), g(D), z(), z()], Aut::sigma_q(1, 1), "delF-".into()),
    }
}

/// The six basic twisted derivations in the order H+, E+, F+, H-, E-, F-.
pub fn basic_derivations<F: Field>() -> [Cochain<F>; 6] {
    [del_h(Sign::Plus), del_e(Sign::Plus), del_f(Sign::Plus), del_h(Sign::Minus), del_e(Sign::Minus), del_f(Sign::Minus)]
}

/// `b^j c^k` as an element of the twisted centre, twist `σ_{q^{-(j+k)},1}`.
pub fn twisted_central<F: Field>(j: u32, k: u32) -> Cochain<F> {
    let w = Word::new(0, j, k);
    Cochain::central(Elem::word(w), Aut::sigma_q(-((j + k) as i64), 0)).with_label(format!("[{w}]"))
}

/// Representatives of `∂_i^±`: `∂^±_H` for `i = 0`, and
/// `∂⁺_E ⌣ d^{i-1}`, `∂⁺_F ⌣ a^{i-1}`, `∂⁻_E ⌣ a^{i-1}`, `∂⁻_F ⌣ d^{i-1}`
/// for `∂_i^+`, `∂_{-i}^+`, `∂_i^-`, `∂_{-i}^-` with `i > 0`.
pub fn del_class<F: Field>(s: Sign, i: i64) -> Cochain<F> {
    if i == 0 {
        return del_h(s);
    }
    let n = i.unsigned_abs() as i32 - 1;
    let (base, w, mu) = match (s, i > 0) {
        (Sign::Plus, true) => (del_e(s), Word::new(-n, 0, 0), -(n as i64)),
        (Sign::Plus, false) => (del_f(s), Word::new(n, 0, 0), -(n as i64)),
        (Sign::Minus, true) => (del_e(s), Word::new(n, 0, 0), n as i64),
        (Sign::Minus, false) => (del_f(s), Word::new(-n, 0, 0), n as i64),
    };
    // The pointwise cup only agrees with a derivation on generators; the
    // class is the twisted derivation extending those values.
    let z = Cochain::central(Elem::word(w), Aut::sigma_q(0, mu));
    let cup = base.cup(&z);
    let vals = cup.generator_values().expect("degree-1 cochain");
    Cochain::derivation(vals, cup.twist().clone()).expect("printed values satisfy the relations").with_label(format!("del{s}({i})"))
}

/// `S(λ)` membership for `λ = q^{le}`.
pub fn in_s(le: i64, j: u32) -> bool {
    let n = -le;
    if n >= 2 {
        let j = j as i64;
        !(j < n && (n - j) % 2 == 0)
    } else {
        true
    }
}

/// Is `[e]` in the basis of `H_0(A, σ_{q^le, q^me} A)`?
pub fn in_h0_basis(e: Word, le: i64, me: i64) -> bool {
    let (i, j, k) = (e.i, e.j, e.k);
    if le == 0 && j == 0 && k == 0 {
        return true;
    }
    if me == 0 && i == 0 && (j == 0 || k == 0) && in_s(le, j + k) {
        return true;
    }
    if me == 0 && i == 0 && le <= -2 && j + k == (-le) as u32 && j >= 1 && k >= 1 {
        return true;
    }
    if le < 0 && me != 0 {
        let (n, m) = ((-le) as u32, me as i32);
        return e == Word::new(m, n, 0) || e == Word::new(-m, 0, n);
    }
    false
}

fn q_exponent<F: Field>(x: &F) -> Option<i64> {
    (-40..=40).find(|e| *x == F::q_pow(*e))
}

/// The twisted trace `∫_{[e]}` for the basis class `[e]` of `H_0(A, σA)`.
pub fn trace_of<F: Field>(e: Word, twist: Aut<F>) -> Result<Trace<F>> {
    if !twist.is_sigma() {
        return Err(Error::InvalidKey("traces are defined for sigma twists".into()));
    }
    let (le, me) = match (q_exponent(&twist.lambda), q_exponent(&twist.mu)) {
        (Some(l), Some(m)) => (l, m),
        _ => return Err(Error::InvalidKey(format!("twist {twist} is not a monomial in q"))),
    };
    if !in_h0_basis(e, le, me) {
        return Err(Error::InvalidKey(format!("[{e}] is not a basis class of H_0 for {twist}")));
    }
    Ok(Trace::new(e, twist))
}

/// `∫_{[1]}`, twisted by `σ_{1,q^-2}`.
pub fn trace_one<F: Field>() -> Trace<F> {
    trace_of(Word::ONE, Aut::sigma_q(0, -2)).unwrap()
}

/// `∫_{[bc]}`, twisted by `σ_{q^-2,1}`.
pub fn trace_bc<F: Field>() -> Trace<F> {
    trace_of(Word::new(0, 1, 1), Aut::modular()).unwrap()
}

/// `∂⁺_H ⌣ ∂⁺_E ⌣ ∂⁺_F`
pub fn top_cup<F: Field>() -> Cochain<F> {
    del_h(Sign::Plus).cup(&del_e(Sign::Plus)).cup(&del_f(Sign::Plus))
}

/// `φ = ∫_{[1]} (· ⌢ (∂⁺_H ⌣ ∂⁺_E ⌣ ∂⁺_F))`
pub fn phi<F: Field>() -> Functional<F> {
    Functional::new(trace_one(), top_cup()).with_label("phi")
}

/// Which printed normalisation of η to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EtaSign {
    /// `-μ₂/(μ₂-1)² ∫_{[bc]}` from the correction-term lemma.
    Lemma,
    /// `+μ₂/(μ₂-1)² ∫_{[bc]}`, the sign printed in the theorem (coefficient 2 at μ₂ = 2).
    Theorem,
}

/// `η = c ∫_{[bc]} (· ⌢ (∂⁺_H ⌣ (σ_{1,1/μ₂} - id) ⌣ (σ_{1,μ₂} - id)))`
pub fn eta<F: Field>(mu2: F, sign: EtaSign) -> Result<Functional<F>> {
    if mu2.is_zero() || mu2.is_one() {
        return Err(Error::Domain("eta needs mu2 outside {0, 1}".into()));
    }
    let m1 = mu2.inverse().unwrap();
    let body = del_h(Sign::Plus)
        .cup(&Cochain::aut_diff(Aut::sigma(F::one(), m1)))
        .cup(&Cochain::aut_diff(Aut::sigma(F::one(), mu2.clone())));
    let d = mu2.clone() - F::one();
    let mut c = mu2.div(&(d.clone() * &d)).unwrap();
    if sign == EtaSign::Lemma {
        c = -c;
    }
    Ok(Functional::combination(vec![(c, Functional::new(trace_bc(), body))])?.with_label("eta"))
}

/// `ξ = φ + η` with `μ₂ = 2`.
pub fn xi<F: Field>(sign: EtaSign) -> Functional<F> {
    let e = eta(F::from_i64(2), sign).unwrap();
    Functional::combination(vec![(F::one(), phi()), (F::one(), e)]).unwrap().with_label("xi")
}
