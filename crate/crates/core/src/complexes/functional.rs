//! Twisted traces and the scalar-valued cochains built from them.

use super::chain::Chain;
use super::cochain::Cochain;
use crate::algebra::{Aut, Elem, Word};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use std::fmt;

/// The functional `∫_{[e]}` dual to a basis class `[e]` of `H_0(A, σA)`;
/// `twist` is that `σ`, so `∫ xy = ∫ σ(y) x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trace<F: Field = Scalar> {
    base: Word,
    twist: Aut<F>,
}

impl<F: Field> Trace<F> {
    /// No membership check; see `catalog::trace_of`.
    pub fn new(base: Word, twist: Aut<F>) -> Self {
        Trace { base, twist }
    }

    pub fn base(&self) -> Word {
        self.base
    }

    pub fn twist(&self) -> &Aut<F> {
        &self.twist
    }

    pub fn eval_word(&self, w: Word) -> F {
        let e = self.base;
        if w.i != e.i {
            return F::zero();
        }
        if e.i == 0 && (e.j == 0 || e.k == 0) {
            if w.j < e.j || w.k < e.k || w.j - e.j != w.k - e.k {
                return F::zero();
            }
            let n = (w.j - e.j) as i64;
            if n == 0 {
                return F::one();
            }
            let jk = (e.j + e.k) as i64;
            let lambda = &self.twist.lambda;
            let num = F::one() - F::q_pow(jk) * lambda;
            let den = F::one() - F::q_pow(jk + 2 * n) * lambda;
            let sign = if n % 2 == 0 { F::one() } else { -F::one() };
            return sign * F::q_pow(n) * num.div(&den).expect("trace denominator vanishes");
        }
        if w == e {
            F::one()
        } else {
            F::zero()
        }
    }

    pub fn eval(&self, x: &Elem<F>) -> F {
        let mut s = F::zero();
        for (w, c) in x.terms() {
            let v = self.eval_word(*w);
            if !v.is_zero() {
                s += v * c;
            }
        }
        s
    }

    pub fn convert<G: Field>(&self, f: &impl Fn(&F) -> Option<G>) -> Option<Trace<G>> {
        Some(Trace { base: self.base, twist: self.twist.convert(f)? })
    }
}

impl<F: Field> fmt::Display for Trace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_one() {
            write!(f, "trace[1]")
        } else {
            write!(f, "trace[{}]", self.base)
        }
    }
}

/// A scalar-valued n-cochain `(a_0, …, a_n) ↦ Σ c ∫(τ(a_0) f(a_1, …, a_n))`,
/// i.e. a sum of `∫ (· ⌢ f)`. It pairs with chains in twist `τ^{-1} ∘ σ_∫`.
#[derive(Clone, Debug)]
pub struct Functional<F: Field = Scalar> {
    parts: Vec<(F, Trace<F>, Cochain<F>)>,
    degree: usize,
    chain_twist: Aut<F>,
    label: Option<String>,
}

impl<F: Field> Functional<F> {
    pub fn new(trace: Trace<F>, body: Cochain<F>) -> Self {
        let chain_twist = body.twist().inverse().compose(trace.twist());
        Functional { degree: body.degree(), parts: vec![(F::one(), trace, body)], chain_twist, label: None }
    }

    pub fn combination(parts: Vec<(F, Functional<F>)>) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Domain("empty combination".into()))?;
        let (degree, chain_twist) = (first.1.degree, first.1.chain_twist.clone());
        let mut all = Vec::new();
        for (c, f) in parts {
            if f.degree != degree {
                return Err(Error::Degree("functionals of different degrees".into()));
            }
            if f.chain_twist != chain_twist {
                return Err(Error::TwistMismatch { expected: chain_twist.to_string(), got: f.chain_twist.to_string() });
            }
            for (k, t, b) in f.parts {
                all.push((c.clone() * k, t, b));
            }
        }
        Ok(Functional { parts: all, degree, chain_twist, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Twist of the chains this functional pairs with.
    pub fn chain_twist(&self) -> &Aut<F> {
        &self.chain_twist
    }

    pub fn eval_words(&self, ws: &[Word]) -> F {
        assert_eq!(ws.len(), self.degree + 1, "functional arity mismatch");
        let mut s = F::zero();
        for (c, tr, body) in &self.parts {
            let x = body.eval_words(&ws[1..]);
            if x.is_zero() {
                continue;
            }
            let (k, w0) = body.twist().apply_word(ws[0]);
            let y = Elem::term(k, w0).mul(&x);
            s += tr.eval(&y) * c;
        }
        s
    }

    pub fn eval(&self, args: &[Elem<F>]) -> Result<F> {
        if args.len() != self.degree + 1 {
            return Err(Error::Arity { expected: self.degree + 1, got: args.len() });
        }
        let ch = Chain::from_elems(self.chain_twist.clone(), args);
        Ok(self.on_tensor(&ch))
    }

    fn on_tensor(&self, ch: &Chain<F>) -> F {
        let mut s = F::zero();
        for (t, c) in ch.terms() {
            let v = self.eval_words(t);
            if !v.is_zero() {
                s += v * c;
            }
        }
        s
    }

    /// Evaluation on a chain of the matching twist and degree.
    pub fn pair(&self, ch: &Chain<F>) -> Result<F> {
        if ch.degree() != self.degree {
            return Err(Error::Degree(format!("functional of degree {} on a chain of degree {}", self.degree, ch.degree())));
        }
        if *ch.twist() != self.chain_twist {
            return Err(Error::TwistMismatch { expected: self.chain_twist.to_string(), got: ch.twist().to_string() });
        }
        Ok(self.on_tensor(ch))
    }

    /// `(bφ)(a_0, …, a_{n+1}) = φ(b(a_0 ⊗ … ⊗ a_{n+1}))`
    pub fn coboundary_eval(&self, args: &[Elem<F>]) -> Result<F> {
        if args.len() != self.degree + 2 {
            return Err(Error::Arity { expected: self.degree + 2, got: args.len() });
        }
        let ch = Chain::from_elems(self.chain_twist.clone(), args);
        Ok(self.on_tensor(&ch.boundary()?))
    }

    pub fn convert<G: Field>(&self, f: &impl Fn(&F) -> Option<G>) -> Option<Functional<G>> {
        let mut parts = Vec::with_capacity(self.parts.len());
        for (c, t, b) in &self.parts {
            parts.push((f(c)?, t.convert(f)?, b.convert(f)?));
        }
        Some(Functional { parts, degree: self.degree, chain_twist: self.chain_twist.convert(f)?, label: self.label.clone() })
    }
}

impl Functional<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Functional<G>> {
        self.convert(&G::from_scalar)
    }
}

impl<F: Field> fmt::Display for Functional<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            return write!(f, "{l}");
        }
        for (n, (c, t, b)) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c}) ")?;
            }
            write!(f, "{t}(. cap ({b}))")?;
        }
        Ok(())
    }
}
