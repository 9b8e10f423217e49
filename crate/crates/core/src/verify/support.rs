//! Shared machinery: outcomes, evaluation at several fields, witness replay
//! and seeded random data.

use super::{Discrepancy, Mechanism};
use crate::algebra::{Aut, Elem, Word};
use crate::complexes::Chain;
use crate::field::{AtFiveHalves, AtTwo, Field, Specialized};
use crate::scalar::Scalar;
use crate::solver::{independent_mod_boundaries, solve_boundary_in, Complex, Independence, PivotRule, TruncationBox};
use crate::tensor::Tensor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Display;

pub(crate) struct Ctx {
    pub bx: TruncationBox,
    pub seed: u64,
}

impl Ctx {
    /// A generator depending only on the seed and the check id.
    pub fn rng(&self, id: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in id.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }

    /// The sampling window: the requested box, widened to at least `min`.
    pub fn window(&self, min: (u32, u32, u32)) -> (i32, u32, u32) {
        (self.bx.max_abs_i.max(min.0) as i32, self.bx.max_j.max(min.1), self.bx.max_k.max(min.2))
    }
}

pub(crate) struct Pass {
    pub message: String,
    pub points: Vec<String>,
}

pub(crate) struct Fail {
    pub message: String,
    pub discrepancy: Option<Discrepancy>,
    pub points: Vec<String>,
}

pub(crate) type Outcome = Result<Pass, Fail>;

#[derive(Debug)]
pub(crate) struct Failure {
    pub message: String,
    pub discrepancy: Option<Discrepancy>,
}

pub(crate) type Step<T = ()> = Result<T, Failure>;

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure { message: e.to_string(), discrepancy: None }
    }
}

pub(crate) fn fail<T>(message: impl Into<String>) -> Step<T> {
    Err(Failure { message: message.into(), discrepancy: None })
}

pub(crate) fn mismatch(subject: impl Display, got: impl Display, expected: impl Display) -> Failure {
    let subject = subject.to_string();
    Failure {
        message: format!("{subject} differs from the expected value"),
        discrepancy: Some(Discrepancy { subject, got: got.to_string(), expected: expected.to_string() }),
    }
}

pub(crate) fn expect_eq<T: PartialEq + Display>(subject: impl Display, got: &T, expected: &T) -> Step {
    if got == expected {
        Ok(())
    } else {
        Err(mismatch(subject, got, expected))
    }
}

/// Chain identity after projecting to the normalised complex.
pub(crate) fn expect_chain_eq<F: Field>(subject: impl Display, got: &Chain<F>, expected: &Chain<F>, complex: Complex) -> Step {
    let (g, e) = match complex {
        Complex::Normalised => (got.normalize(), expected.normalize()),
        Complex::Unnormalised => (got.clone(), expected.clone()),
    };
    if g.twist() != e.twist() {
        return Err(mismatch(format!("twist of {subject}"), g.twist(), e.twist()));
    }
    if g == e {
        return Ok(());
    }
    Err(mismatch(subject, show(&g), show(&e)))
}

pub(crate) fn show<F: Field>(ch: &Chain<F>) -> String {
    if ch.is_zero() {
        "0".into()
    } else {
        ch.body().to_string()
    }
}

/// Solver results found over `Q(v)`, replayed at the numeric points.
#[derive(Default)]
pub(crate) struct Witnesses {
    bounding: HashMap<String, Chain<Scalar>>,
    relations: HashMap<String, (Vec<Scalar>, Chain<Scalar>)>,
}

pub(crate) type PointFn<'a> = &'a mut dyn FnMut(&mut Witnesses) -> Step<String>;

/// Runs a check over `Q(v)` and then at `v = 2` and `v = 5/2`, sharing witnesses.
pub(crate) fn run_points(runs: &mut [(String, PointFn)]) -> Outcome {
    let mut w = Witnesses::default();
    let mut points = Vec::new();
    let mut first = None;
    for (label, f) in runs.iter_mut() {
        points.push(label.clone());
        match f(&mut w) {
            Ok(m) => {
                first.get_or_insert(m);
            }
            Err(e) => {
                let message = if points.len() == 1 { e.message } else { format!("at {label}: {}", e.message) };
                return Err(Fail { message, discrepancy: e.discrepancy, points });
            }
        }
    }
    Ok(Pass { message: first.unwrap_or_default(), points })
}

/// `at_points!(body(args..))` runs `body::<F>(&mut witnesses, args..)` for
/// every field of the cross-check.
macro_rules! at_points {
    ($f:ident ( $($arg:expr),* )) => {{
        use $crate::verify::support::{run_points, PointFn, Witnesses};
        use $crate::field::{AtFiveHalves, AtTwo, Field, Specialized};
        use $crate::scalar::Scalar;
        run_points(&mut [
            (Scalar::label(), &mut (|w: &mut Witnesses| $f::<Scalar>(w, $($arg),*)) as PointFn),
            (Specialized::<AtTwo>::label(), &mut (|w: &mut Witnesses| $f::<Specialized<AtTwo>>(w, $($arg),*)) as PointFn),
            (Specialized::<AtFiveHalves>::label(), &mut (|w: &mut Witnesses| $f::<Specialized<AtFiveHalves>>(w, $($arg),*)) as PointFn),
        ])
    }};
}
pub(crate) use at_points;

/// Smallest solver window around the words of the given chains.
fn box_around<F: Field>(chains: &[&Chain<F>], slack: u32) -> TruncationBox {
    let (mut i, mut j, mut k) = (1u32, 0u32, 0u32);
    for ch in chains {
        for (t, _) in ch.terms() {
            for w in t {
                i = i.max(w.i.unsigned_abs());
                j = j.max(w.j);
                k = k.max(w.k);
            }
        }
    }
    TruncationBox::new(i, j + slack, k + slack)
}

fn project<F: Field>(ch: &Chain<F>, complex: Complex) -> Chain<F> {
    match complex {
        Complex::Normalised => ch.normalize(),
        Complex::Unnormalised => ch.clone(),
    }
}

/// Fields in which homology-level claims can be certified.
pub(crate) trait Exact: Field {
    /// Certifies that `target` is a boundary: exactly zero, or a solver witness
    /// (found over `Q(v)`, replayed elsewhere).
    fn bounds(target: &Chain<Self>, complex: Complex, key: &str, w: &mut Witnesses) -> Step<Mechanism>;

    /// Coordinates `c` with `target ≐ Σ c_k basis_k` modulo boundaries.
    fn express(target: &Chain<Self>, basis: &[Chain<Self>], complex: Complex, key: &str, w: &mut Witnesses) -> Step<(Vec<Self>, Mechanism)>;
}

impl Exact for Scalar {
    fn bounds(target: &Chain<Self>, complex: Complex, key: &str, w: &mut Witnesses) -> Step<Mechanism> {
        if project(target, complex).is_zero() {
            return Ok(Mechanism::ExactIdentity);
        }
        for slack in 1..=2 {
            let bx = box_around(&[target], slack);
            let rep = solve_boundary_in(target, &bx, complex, PivotRule::LeastWeight);
            if let Some(x) = rep.witness {
                w.bounding.insert(key.to_string(), x);
                return Ok(Mechanism::SolverWitness);
            }
        }
        Err(Failure {
            message: format!("{key}: no bounding chain found"),
            discrepancy: Some(Discrepancy { subject: key.to_string(), got: show(target), expected: "a boundary".into() }),
        })
    }

    fn express(target: &Chain<Self>, basis: &[Chain<Self>], complex: Complex, key: &str, w: &mut Witnesses) -> Step<(Vec<Self>, Mechanism)> {
        if project(target, complex).is_zero() {
            return Ok((vec![Scalar::zero(); basis.len()], Mechanism::ExactIdentity));
        }
        let mut cycles: Vec<Chain> = basis.to_vec();
        cycles.push(target.clone());
        let refs: Vec<&Chain> = cycles.iter().collect();
        for slack in 1..=2 {
            let bx = box_around(&refs, slack);
            if let Independence::Dependent { coefficients, witness } = independent_mod_boundaries(&cycles, &bx, complex)? {
                let at = coefficients.last().unwrap().clone();
                if at.is_zero() {
                    return fail(format!("{key}: the reference classes are dependent"));
                }
                let coords = coefficients[..basis.len()].iter().map(|a| -a.div(&at).unwrap()).collect();
                w.relations.insert(key.to_string(), (coefficients, witness));
                return Ok((coords, Mechanism::SolverWitness));
            }
        }
        Err(Failure {
            message: format!("{key}: not in the span of the reference classes"),
            discrepancy: Some(Discrepancy { subject: key.to_string(), got: show(target), expected: "a combination of the reference classes".into() }),
        })
    }
}

fn replay_bounds<F: Field>(target: &Chain<F>, complex: Complex, key: &str, w: &Witnesses) -> Step<Mechanism> {
    if project(target, complex).is_zero() {
        return Ok(Mechanism::ExactIdentity);
    }
    let Some(x) = w.bounding.get(key) else {
        return fail(format!("{key}: nonzero here but exactly zero over Q(v)"));
    };
    let x: Chain<F> = x.specialize().ok_or_else(|| Failure { message: format!("{key}: witness has a pole"), discrepancy: None })?;
    let lhs = project(&x.boundary()?, complex);
    expect_eq(format!("{key}: boundary of the replayed witness"), &show(&lhs), &show(&project(target, complex)))?;
    Ok(Mechanism::SolverWitness)
}

fn replay_express<F: Field>(target: &Chain<F>, basis: &[Chain<F>], complex: Complex, key: &str, w: &Witnesses) -> Step<(Vec<F>, Mechanism)> {
    if project(target, complex).is_zero() {
        return Ok((vec![F::zero(); basis.len()], Mechanism::ExactIdentity));
    }
    let Some((coeffs, x)) = w.relations.get(key) else {
        return fail(format!("{key}: nonzero here but exactly zero over Q(v)"));
    };
    let pole = || Failure { message: format!("{key}: relation has a pole"), discrepancy: None };
    let cs: Vec<F> = coeffs.iter().map(|c| F::from_scalar(c).ok_or_else(pole)).collect::<Step<_>>()?;
    let x: Chain<F> = x.specialize().ok_or_else(pole)?;
    let mut lhs = target.scale(cs.last().unwrap());
    for (c, z) in cs.iter().zip(basis) {
        lhs = lhs.add(&z.scale(c));
    }
    expect_chain_eq(format!("{key}: replayed relation"), &lhs, &x.boundary()?, complex)?;
    let at = cs.last().unwrap();
    if at.is_zero() {
        return fail(format!("{key}: relation degenerates at {}", F::label()));
    }
    Ok((cs[..basis.len()].iter().map(|a| -a.div(at).unwrap()).collect(), Mechanism::SolverWitness))
}

macro_rules! replaying {
    ($t:ty) => {
        impl Exact for $t {
            fn bounds(target: &Chain<Self>, complex: Complex, key: &str, w: &mut Witnesses) -> Step<Mechanism> {
                replay_bounds(target, complex, key, w)
            }
            fn express(
                target: &Chain<Self>,
                basis: &[Chain<Self>],
                complex: Complex,
                key: &str,
                w: &mut Witnesses,
            ) -> Step<(Vec<Self>, Mechanism)> {
                replay_express(target, basis, complex, key, w)
            }
        }
    };
}

replaying!(Specialized<AtTwo>);
replaying!(Specialized<AtFiveHalves>);

/// `±k q^e` with small `k`, `e`; the same draws give the same structure at every point.
pub(crate) fn random_coeff<F: Field>(r: &mut ChaCha8Rng) -> F {
    let k = r.gen_range(1..=3i64) * if r.gen_bool(0.5) { 1 } else { -1 };
    F::from_i64(k) * F::q_pow(r.gen_range(-2..=2))
}

pub(crate) fn random_word(r: &mut ChaCha8Rng, win: (i32, u32, u32)) -> Word {
    Word::new(r.gen_range(-win.0..=win.0), r.gen_range(0..=win.1), r.gen_range(0..=win.2))
}

pub(crate) fn random_elem<F: Field>(r: &mut ChaCha8Rng, terms: usize, win: (i32, u32, u32)) -> Elem<F> {
    let n = r.gen_range(1..=terms);
    let mut m = BTreeMap::new();
    for _ in 0..n {
        let w = random_word(r, win);
        let c = random_coeff(r);
        m.insert(w, c);
    }
    Elem::from_map(m)
}

pub(crate) fn random_chain<F: Field>(r: &mut ChaCha8Rng, degree: usize, twist: Aut<F>, terms: usize) -> Chain<F> {
    let mut body = Tensor::zero(degree + 1);
    for _ in 0..r.gen_range(1..=terms) {
        let t: Vec<Word> = (0..=degree).map(|_| random_word(r, (1, 1, 1))).collect();
        let c = random_coeff(r);
        body.add_term(t, c);
    }
    Chain::new(twist, body)
}

/// Lifts printed data to the field `F`.
pub(crate) fn lift<F: Field>(x: &Elem) -> Step<Elem<F>> {
    x.specialize().ok_or_else(|| Failure { message: format!("{x} has a pole"), discrepancy: None })
}

pub(crate) fn lift_tensor<F: Field>(x: &Tensor) -> Step<Tensor<F>> {
    x.specialize().ok_or_else(|| Failure { message: format!("{x} has a pole"), discrepancy: None })
}

pub(crate) fn chain_of<F: Field>(twist: &Aut<F>, xs: &[Elem<F>]) -> Chain<F> {
    Chain::from_elems(twist.clone(), xs)
}

/// Counts of the certificates used by a check.
#[derive(Default)]
pub(crate) struct Tally {
    counts: [usize; 3],
}

impl Tally {
    pub fn note(&mut self, m: Mechanism) {
        self.counts[m as usize] += 1;
    }

    pub fn summary(&self) -> String {
        let parts: Vec<String> = [Mechanism::ExactIdentity, Mechanism::SolverWitness, Mechanism::PairingCertificate]
            .iter()
            .filter(|m| self.counts[**m as usize] > 0)
            .map(|m| format!("{}: {}", m.tag(), self.counts[*m as usize]))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// A basic derivation by its short label, e.g. `H+`.
pub(crate) fn basic<F: Field>(label: &str) -> crate::Cochain<F> {
    let i = ["H+", "E+", "F+", "H-", "E-", "F-"].iter().position(|l| *l == label).expect("basic derivation label");
    crate::catalog::basic_derivations::<F>()[i].clone()
}

pub(crate) fn cup_all<F: Field>(labels: &[&str]) -> crate::Cochain<F> {
    let mut it = labels.iter();
    let first = basic::<F>(it.next().expect("at least one derivation"));
    it.fold(first, |acc, l| acc.cup(&basic(l)))
}
