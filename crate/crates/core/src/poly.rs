//! Dense integer polynomials in one variable, stored low degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(k: BigInt) -> Self {
        Self::from_coeffs(vec![k])
    }

    /// `k * x^n`
    pub fn monomial(k: BigInt, n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = k;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.c.get(i);
            let y = o.c.get(i);
            c.push(match (x, y) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        IntPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly { c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); n];
        c.extend(self.c.iter().cloned());
        IntPoly { c }
    }

    /// Number of zero coefficients at the low end.
    pub fn trailing_zeros(&self) -> usize {
        self.c.iter().take_while(|x| x.is_zero()).count()
    }

    /// Divide by `x^n`; the caller guarantees divisibility.
    pub fn unshift(&self, n: usize) -> Self {
        debug_assert!(n <= self.trailing_zeros());
        IntPoly { c: self.c[n..].to_vec() }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar(&self, k: &BigInt) -> Self {
        IntPoly { c: self.c.iter().map(|x| x / k).collect() }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_scalar(&g)
        }
    }

    /// Pseudo-remainder of `self` by `d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo-remainder by zero polynomial");
        let mut r = self.clone();
        let dl = d.lead();
        let dn = d.degree();
        while !r.is_zero() && r.degree() >= dn {
            let shift = r.degree() - dn;
            let rl = r.lead();
            let mut c: Vec<BigInt> = r.c.iter().map(|x| x * &dl).collect();
            for (i, y) in d.c.iter().enumerate() {
                c[i + shift] -= &rl * y;
            }
            r = Self::from_coeffs(c);
            let g = r.content();
            if !g.is_zero() && !g.is_one() {
                r = r.div_scalar(&g);
            }
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            if b.degree() == 0 {
                return Self::one();
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division; `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.c.clone();
        let dn = d.degree();
        let dl = d.lead();
        let mut qc = vec![BigInt::zero(); self.degree() - dn + 1];
        for s in (0..qc.len()).rev() {
            let top = &r[s + dn];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(&dl);
            if !rem.is_zero() {
                return None;
            }
            for (i, y) in d.c.iter().enumerate() {
                r[s + i] -= &qq * y;
            }
            qc[s] = qq;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Self::from_coeffs(qc))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for k in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(k.clone());
        }
        acc
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u64 = 0;
        for k in self.c.iter().rev() {
            let kr = k.mod_floor(&pb);
            let kr: u64 = kr.try_into().expect("residue fits");
            acc = ((acc as u128 * x as u128 + kr as u128) % p as u128) as u64;
        }
        acc
    }

    pub fn cmp_degree(&self, o: &Self) -> Ordering {
        self.c.len().cmp(&o.c.len())
    }
}
