//! Elements of A^{⊗m}: sparse sums of word tuples.

use crate::algebra::{mul_words_into, write_term, Elem, Word};
use crate::field::Field;
use crate::scalar::Scalar;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

pub type Tuple = Vec<Word>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor<F: Field = Scalar> {
    arity: usize,
    terms: BTreeMap<Tuple, F>,
}

impl<F: Field> Tensor<F> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn tuple(t: Tuple) -> Self {
        Self::term(F::one(), t)
    }

    pub fn term(c: F, t: Tuple) -> Self {
        let mut r = Self::zero(t.len());
        r.add_term(t, c);
        r
    }

    pub fn from_elem(x: &Elem<F>) -> Self {
        let mut r = Self::zero(1);
        for (w, c) in x.terms() {
            r.add_term(vec![*w], c.clone());
        }
        r
    }

    /// `x_1 ⊗ … ⊗ x_m`, expanded.
    pub fn from_elems(xs: &[Elem<F>]) -> Self {
        let mut r = Self::from_elem(&xs[0]);
        for x in &xs[1..] {
            r = r.tensor(&Self::from_elem(x));
        }
        r
    }

    pub fn from_terms(arity: usize, it: impl IntoIterator<Item = (Tuple, F)>) -> Self {
        let mut r = Self::zero(arity);
        for (t, c) in it {
            r.add_term(t, c);
        }
        r
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, &F)> {
        self.terms.iter()
    }

    pub fn map(&self) -> &BTreeMap<Tuple, F> {
        &self.terms
    }

    pub fn coeff(&self, t: &Tuple) -> F {
        self.terms.get(t).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, t: Tuple, c: F) {
        assert_eq!(t.len(), self.arity, "tuple length does not match tensor arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.arity, o.arity, "arity mismatch");
        for (t, c) in &o.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        assert_eq!(self.arity, o.arity, "arity mismatch");
        if k.is_zero() {
            return;
        }
        for (t, c) in &o.terms {
            self.add_term(t.clone(), c.clone() * k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &-F::one());
        r
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        Tensor { arity: self.arity, terms: self.terms.iter().map(|(t, c)| (t.clone(), c.clone() * k)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Outer tensor product.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.arity + o.arity);
        for (t, c) in &self.terms {
            for (u, d) in &o.terms {
                let mut v = t.clone();
                v.extend_from_slice(u);
                r.add_term(v, c.clone() * d);
            }
        }
        r
    }

    /// Factorwise product in the algebra A^{⊗m}.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity, "arity mismatch");
        let mut r = Self::zero(self.arity);
        for (t, c) in &self.terms {
            for (u, d) in &o.terms {
                let mut acc: Vec<(Tuple, F)> = vec![(Vec::with_capacity(self.arity), c.clone() * d)];
                for s in 0..self.arity {
                    let mut next = Vec::new();
                    for (pre, k) in acc {
                        let mut m = BTreeMap::new();
                        mul_words_into(t[s], u[s], &k, &mut m);
                        for (w, x) in m {
                            let mut p = pre.clone();
                            p.push(w);
                            next.push((p, x));
                        }
                    }
                    acc = next;
                }
                for (p, x) in acc {
                    r.add_term(p, x);
                }
            }
        }
        r
    }

    /// Replace factor `pos` of every term by `f(word)`, an element of A^{⊗k};
    /// the result has arity `arity - 1 + k`.
    pub fn expand_factor(&self, pos: usize, k: usize, f: impl Fn(Word) -> Tensor<F>) -> Self {
        let mut r = Self::zero(self.arity - 1 + k);
        let mut cache: BTreeMap<Word, Tensor<F>> = BTreeMap::new();
        for (t, c) in &self.terms {
            let img = cache.entry(t[pos]).or_insert_with(|| f(t[pos]));
            assert_eq!(img.arity, k, "factor image has the wrong arity");
            for (u, d) in &img.terms {
                let mut v = t[..pos].to_vec();
                v.extend_from_slice(u);
                v.extend_from_slice(&t[pos + 1..]);
                r.add_term(v, c.clone() * d);
            }
        }
        r
    }

    /// Apply a linear map to factor `pos`.
    pub fn map_factor(&self, pos: usize, f: impl Fn(Word) -> Elem<F>) -> Self {
        self.expand_factor(pos, 1, |w| Tensor::from_elem(&f(w)))
    }

    /// Apply a linear map of A⊗A to the adjacent factors `pos, pos+1`.
    pub fn map_pair(&self, pos: usize, f: impl Fn(Word, Word) -> Tensor<F>) -> Self {
        let mut r = Self::zero(self.arity);
        let mut cache: BTreeMap<(Word, Word), Tensor<F>> = BTreeMap::new();
        for (t, c) in &self.terms {
            let img = cache.entry((t[pos], t[pos + 1])).or_insert_with(|| f(t[pos], t[pos + 1]));
            for (u, d) in &img.terms {
                let mut v = t[..pos].to_vec();
                v.extend_from_slice(u);
                v.extend_from_slice(&t[pos + 2..]);
                r.add_term(v, c.clone() * d);
            }
        }
        r
    }

    /// Multiplication map A^{⊗m} → A.
    pub fn multiply_out(&self) -> Elem<F> {
        let mut r = Elem::zero();
        for (t, c) in &self.terms {
            let mut x = Elem::term(c.clone(), t[0]);
            for w in &t[1..] {
                x = x.mul(&Elem::word(*w));
            }
            r.add_assign(&x);
        }
        r
    }

    /// The arity-one tensor as an algebra element.
    pub fn to_elem(&self) -> Elem<F> {
        assert_eq!(self.arity, 1, "not an arity-one tensor");
        Elem::from_terms(self.terms.iter().map(|(t, c)| (t[0], c.clone())))
    }

    pub fn max_len(&self) -> u32 {
        self.terms.keys().map(|t| t.iter().map(|w| w.len()).sum()).max().unwrap_or(0)
    }

    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Tensor<G>> {
        let mut r = Tensor::zero(self.arity);
        for (t, c) in &self.terms {
            r.add_term(t.clone(), f(c)?);
        }
        Some(r)
    }

    pub fn retain(&mut self, f: impl Fn(&Tuple, &F) -> bool) {
        self.terms.retain(|t, c| f(t, c));
    }
}

impl Tensor<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Tensor<G>> {
        self.convert(G::from_scalar)
    }
}

pub fn tuple_string(t: &[Word]) -> String {
    t.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("@")
}

impl<F: Field> fmt::Display for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (t, c)) in self.terms.iter().enumerate() {
            write_term(f, n == 0, c, &tuple_string(t), false)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gen;

    #[test]
    fn factorwise_product() {
        let [a, b, c, d] = Gen::ALL.map(Elem::<Scalar>::gen);
        let x = Tensor::from_elems(&[a.clone(), b.clone()]);
        let y = Tensor::from_elems(&[d.clone(), c.clone()]);
        assert_eq!(x.mul(&y), Tensor::from_elems(&[a.mul(&d), b.mul(&c)]));
        assert_eq!(x.tensor(&y).arity(), 4);
        assert_eq!(Tensor::from_elems(&[a.clone(), d.clone()]).multiply_out(), a.mul(&d));
    }

    #[test]
    fn display_uses_at_separator() {
        let [_, b, c, _] = Gen::ALL.map(Elem::<Scalar>::gen);
        let t = Tensor::from_elems(&[b.clone(), c.clone()]).sub(&Tensor::from_elems(&[c, b]));
        assert_eq!(t.to_string(), "-c@b + b@c");
    }
}
