//! Twisted Hochschild chains `C_n(A, σA) = σA ⊗ A^{⊗n}`.

use crate::algebra::{mul_words_into, Aut, Elem, Word};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use crate::tensor::{Tensor, Tuple};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain<F: Field = Scalar> {
    twist: Aut<F>,
    body: Tensor<F>,
}

impl<F: Field> Chain<F> {
    pub fn new(twist: Aut<F>, body: Tensor<F>) -> Self {
        Chain { twist, body }
    }

    pub fn zero(degree: usize, twist: Aut<F>) -> Self {
        Chain { twist, body: Tensor::zero(degree + 1) }
    }

    pub fn tuple(twist: Aut<F>, t: Tuple) -> Self {
        Chain { twist, body: Tensor::tuple(t) }
    }

    /// `x_0 ⊗ … ⊗ x_n`, expanded.
    pub fn from_elems(twist: Aut<F>, xs: &[Elem<F>]) -> Self {
        Chain { twist, body: Tensor::from_elems(xs) }
    }

    pub fn degree(&self) -> usize {
        self.body.arity() - 1
    }

    pub fn twist(&self) -> &Aut<F> {
        &self.twist
    }

    pub fn body(&self) -> &Tensor<F> {
        &self.body
    }

    pub fn into_body(self) -> Tensor<F> {
        self.body
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, &F)> {
        self.body.terms()
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn coeff(&self, t: &Tuple) -> F {
        self.body.coeff(t)
    }

    pub fn with_twist(&self, twist: Aut<F>) -> Self {
        Chain { twist, body: self.body.clone() }
    }

    fn same(&self, o: &Self) {
        assert_eq!(self.twist, o.twist, "chains live in different twisted complexes");
        assert_eq!(self.degree(), o.degree(), "chain degree mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same(o);
        Chain { twist: self.twist.clone(), body: self.body.add(&o.body) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.same(o);
        Chain { twist: self.twist.clone(), body: self.body.sub(&o.body) }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        self.same(o);
        self.body.add_scaled(&o.body, k);
    }

    pub fn scale(&self, k: &F) -> Self {
        Chain { twist: self.twist.clone(), body: self.body.scale(k) }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// `b_i`: multiplies `a_i a_{i+1}` for `i < n`; `b_n` is `σ(a_n) a_0 ⊗ a_1 ⊗ … ⊗ a_{n-1}`.
    pub fn face(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::Degree("faces need degree at least 1".into()));
        }
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, degree: n });
        }
        let mut r = Tensor::zero(n);
        self.face_into(i, &F::one(), &mut r);
        Ok(Chain { twist: self.twist.clone(), body: r })
    }

    fn face_into(&self, i: usize, k: &F, out: &mut Tensor<F>) {
        let n = self.degree();
        let mut m = BTreeMap::new();
        for (t, c) in self.body.terms() {
            m.clear();
            let (x, y, coef, pos) = if i < n {
                (t[i], t[i + 1], c.clone() * k, i)
            } else {
                let (s, w) = self.twist.apply_word(t[n]);
                (w, t[0], s * c * k, 0)
            };
            mul_words_into(x, y, &coef, &mut m);
            for (w, x) in std::mem::take(&mut m) {
                let mut v = Vec::with_capacity(n);
                if i < n {
                    v.extend_from_slice(&t[..pos]);
                    v.push(w);
                    v.extend_from_slice(&t[pos + 2..]);
                } else {
                    v.push(w);
                    v.extend_from_slice(&t[1..n]);
                }
                out.add_term(v, x);
            }
        }
    }

    fn alternating(&self, top: usize) -> Self {
        let n = self.degree();
        let mut r = Tensor::zero(n);
        let one = F::one();
        let neg = -F::one();
        for i in 0..=top {
            self.face_into(i, if i % 2 == 0 { &one } else { &neg }, &mut r);
        }
        Chain { twist: self.twist.clone(), body: r }
    }

    /// `b = Σ_{i=0}^{n} (-1)^i b_i`
    pub fn boundary(&self) -> Result<Self> {
        match self.degree() {
            0 => Err(Error::Degree("boundary of a degree-0 chain".into())),
            n => Ok(self.alternating(n)),
        }
    }

    /// `b' = Σ_{i=0}^{n-1} (-1)^i b_i`
    pub fn boundary_prime(&self) -> Result<Self> {
        match self.degree() {
            0 => Err(Error::Degree("b' of a degree-0 chain".into())),
            n => Ok(self.alternating(n - 1)),
        }
    }

    /// `s_i`: inserts `1` after position `i`.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, degree: n });
        }
        let body = Tensor::from_terms(
            n + 2,
            self.body.terms().map(|(t, c)| {
                let mut v = t.clone();
                v.insert(i + 1, Word::ONE);
                (v, c.clone())
            }),
        );
        Ok(Chain { twist: self.twist.clone(), body })
    }

    /// Projection onto the normalised complex.
    pub fn normalize(&self) -> Self {
        let mut body = self.body.clone();
        body.retain(|t, _| !t[1..].iter().any(Word::is_one));
        Chain { twist: self.twist.clone(), body }
    }

    pub fn is_normalized(&self) -> bool {
        self.body.terms().all(|(t, _)| !t[1..].iter().any(Word::is_one))
    }

    /// Applies the twist to every factor.
    pub fn map_twist(&self, s: &Aut<F>) -> Self {
        let mut body = Tensor::zero(self.body.arity());
        for (t, c) in self.body.terms() {
            let mut k = c.clone();
            let v = t
                .iter()
                .map(|w| {
                    let (x, w2) = s.apply_word(*w);
                    k *= x;
                    w2
                })
                .collect();
            body.add_term(v, k);
        }
        Chain { twist: self.twist.clone(), body }
    }

    pub fn max_len(&self) -> u32 {
        self.body.max_len()
    }

    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Chain<G>> {
        Some(Chain { twist: self.twist.convert(&f)?, body: self.body.convert(&f)? })
    }
}

impl Chain<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Chain<G>> {
        self.convert(G::from_scalar)
    }
}

impl<F: Field> fmt::Display for Chain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}
