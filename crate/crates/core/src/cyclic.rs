//! Paracyclic operators, Connes' B and twisted cyclicity of functionals.

use crate::algebra::{Elem, Word};
use crate::complexes::{Chain, Functional};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::tensor::Tensor;

/// `t(a_0 ⊗ … ⊗ a_n) = (-1)^n σ(a_n) ⊗ a_0 ⊗ … ⊗ a_{n-1}`
pub fn cyclic_t<F: Field>(ch: &Chain<F>) -> Chain<F> {
    let n = ch.degree();
    let sign = if n % 2 == 0 { F::one() } else { -F::one() };
    let mut body = Tensor::zero(n + 1);
    for (t, c) in ch.terms() {
        let (k, w) = ch.twist().apply_word(t[n]);
        let mut v = Vec::with_capacity(n + 1);
        v.push(w);
        v.extend_from_slice(&t[..n]);
        body.add_term(v, k * c * &sign);
    }
    Chain::new(ch.twist().clone(), body)
}

/// `T = t^{n+1}`
pub fn big_t<F: Field>(ch: &Chain<F>) -> Chain<F> {
    let mut r = ch.clone();
    for _ in 0..=ch.degree() {
        r = cyclic_t(&r);
    }
    r
}

/// `N = Σ_{i=0}^{n} t^i`
pub fn operator_n<F: Field>(ch: &Chain<F>) -> Chain<F> {
    let mut r = ch.clone();
    let mut x = ch.clone();
    for _ in 0..ch.degree() {
        x = cyclic_t(&x);
        r = r.add(&x);
    }
    r
}

/// `s = (-1)^{n+1} t s_n`, which is `x ↦ 1 ⊗ x`.
pub fn extra_degeneracy<F: Field>(ch: &Chain<F>) -> Chain<F> {
    let n = ch.degree();
    let y = cyclic_t(&ch.degeneracy(n).expect("last degeneracy exists"));
    if (n + 1) % 2 == 0 {
        y
    } else {
        y.neg()
    }
}

/// `B = (id - t) s N` on the unnormalised complex.
pub fn connes_b_unnormalized<F: Field>(ch: &Chain<F>) -> Chain<F> {
    let y = extra_degeneracy(&operator_n(ch));
    y.sub(&cyclic_t(&y))
}

/// The closed form of `B` on the normalised complex,
/// `1 ⊗ Σ_i (-1)^{ni} σ(a_{n-i+1}) ⊗ … ⊗ σ(a_n) ⊗ a_0 ⊗ … ⊗ a_{n-i}`.
pub fn connes_b<F: Field>(ch: &Chain<F>) -> Result<Chain<F>> {
    if !ch.is_normalized() {
        return Err(Error::NotNormalised);
    }
    let n = ch.degree();
    let mut body = Tensor::zero(n + 2);
    for (t, c) in ch.terms() {
        for i in 0..=n {
            let mut k = if (n * i) % 2 == 0 { c.clone() } else { -c.clone() };
            let mut v = Vec::with_capacity(n + 2);
            v.push(Word::ONE);
            for w in &t[n + 1 - i..] {
                let (x, w2) = ch.twist().apply_word(*w);
                k *= x;
                v.push(w2);
            }
            v.extend_from_slice(&t[..=n - i]);
            body.add_term(v, k);
        }
    }
    Ok(Chain::new(ch.twist().clone(), body).normalize())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation<F: Field> {
    /// `φ(a_0..a_n) ≠ (-1)^n φ(σ(a_n), a_0, .., a_{n-1})`; carries the difference.
    Rotation { tuple: Vec<Elem<F>>, difference: F },
    /// `φ(1, a_1, .., a_n) ≠ 0`
    UnitSlot { tuple: Vec<Elem<F>>, value: F },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CyclicityReport<F: Field> {
    pub checked: usize,
    pub violation: Option<Violation<F>>,
}

impl<F: Field> CyclicityReport<F> {
    pub fn is_cyclic(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the twisted cyclicity condition on each sample tuple (of length
/// `n + 1`) and, for `n > 0`, the unit-slot criterion on `(1, a_1, …, a_n)`.
pub fn is_twisted_cyclic<F: Field>(f: &Functional<F>, sample: &[Vec<Elem<F>>]) -> Result<CyclicityReport<F>> {
    let n = f.degree();
    let sigma = f.chain_twist();
    let sign = if n % 2 == 0 { F::one() } else { -F::one() };
    let mut checked = 0;
    for tuple in sample {
        if tuple.len() != n + 1 {
            return Err(Error::Arity { expected: n + 1, got: tuple.len() });
        }
        let lhs = f.eval(tuple)?;
        let mut rot = vec![sigma.apply(&tuple[n])];
        rot.extend_from_slice(&tuple[..n]);
        let rhs = f.eval(&rot)? * &sign;
        checked += 1;
        if lhs != rhs {
            return Ok(CyclicityReport { checked, violation: Some(Violation::Rotation { tuple: tuple.clone(), difference: lhs - rhs }) });
        }
        if n == 0 {
            continue;
        }
        let mut unit = vec![Elem::one()];
        unit.extend_from_slice(&tuple[1..]);
        let v = f.eval(&unit)?;
        if !v.is_zero() {
            return Ok(CyclicityReport { checked, violation: Some(Violation::UnitSlot { tuple: unit, value: v }) });
        }
    }
    Ok(CyclicityReport { checked, violation: None })
}
