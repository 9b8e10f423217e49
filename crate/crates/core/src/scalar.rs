//! The coefficient field Q(v), with q = v^2.
//!
//! A nonzero value is stored as `coef * v^exp * num(v) / den(v)` where `num`
//! and `den` are primitive integer polynomials with positive leading
//! coefficient, nonzero constant term and no common factor. Zero is
//! `coef = 0, exp = 0, num = den = 1`. The form is canonical, so structural
//! equality is field equality.

use crate::field::{impl_field_ops, Field};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at v = {0}")]
    Pole(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    coef: BigRational,
    exp: i64,
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    fn raw_zero() -> Self {
        Scalar { coef: BigRational::zero(), exp: 0, num: IntPoly::one(), den: IntPoly::one() }
    }

    /// Canonicalise `coef * v^exp * num / den` for arbitrary integer polynomials.
    pub fn from_parts(coef: BigRational, exp: i64, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if coef.is_zero() || num.is_zero() {
            return Self::raw_zero();
        }
        let tn = num.trailing_zeros();
        let td = den.trailing_zeros();
        let exp = exp + tn as i64 - td as i64;
        let mut num = num.unshift(tn);
        let mut den = den.unshift(td);
        let mut coef = coef;
        for (p, inv) in [(&mut num, false), (&mut den, true)] {
            let mut c = p.content();
            if p.lead().is_negative() {
                c = -c;
            }
            if !c.is_one() {
                *p = p.div_scalar(&c);
                let r = BigRational::from_integer(c);
                coef = if inv { coef / r } else { coef * r };
            }
        }
        if num.degree() > 0 && den.degree() > 0 {
            let g = num.gcd(&den);
            if g.degree() > 0 {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        Scalar { coef, exp, num, den }
    }

    /// `sum_e c_e v^e`
    pub fn laurent(terms: &[(i64, BigRational)]) -> Self {
        let nz: Vec<_> = terms.iter().filter(|(_, c)| !c.is_zero()).collect();
        if nz.is_empty() {
            return Self::raw_zero();
        }
        let lo = nz.iter().map(|(e, _)| *e).min().unwrap();
        let hi = nz.iter().map(|(e, _)| *e).max().unwrap();
        let mut l = BigInt::one();
        for (_, c) in &nz {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &nz {
            coeffs[(e - lo) as usize] += c.numer() * (&l / c.denom());
        }
        Self::from_parts(BigRational::new(BigInt::one(), l), lo, IntPoly::from_coeffs(coeffs), IntPoly::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn rational(r: BigRational) -> Self {
        if r.is_zero() {
            return Self::raw_zero();
        }
        Scalar { coef: r, exp: 0, num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn v() -> Self {
        <Self as Field>::v_pow(1)
    }

    pub fn q() -> Self {
        <Self as Field>::v_pow(2)
    }

    pub fn parts(&self) -> (&BigRational, i64, &IntPoly, &IntPoly) {
        (&self.coef, self.exp, &self.num, &self.den)
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// A single term `c * v^e`.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        if self.num.is_one() && self.den.is_one() && !self.coef.is_zero() {
            Some((self.coef.clone(), self.exp))
        } else {
            None
        }
    }

    /// Exponent `e` if the value is exactly `v^e`.
    pub fn as_v_power(&self) -> Option<i64> {
        self.as_monomial().filter(|(c, _)| c.is_one()).map(|(_, e)| e)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coef.is_zero() {
            return Some(BigRational::zero());
        }
        self.as_monomial().filter(|(_, e)| *e == 0).map(|(c, _)| c)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.coef.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar { coef: self.coef.recip(), exp: -self.exp, num: self.den.clone(), den: self.num.clone() })
    }

    pub fn eval_at(&self, v0: &BigRational) -> Result<BigRational, ScalarError> {
        if self.coef.is_zero() {
            return Ok(BigRational::zero());
        }
        let d = self.den.eval(v0);
        if d.is_zero() || (v0.is_zero() && self.exp < 0) {
            return Err(ScalarError::Pole(v0.to_string()));
        }
        let p = if v0.is_zero() {
            if self.exp == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        } else if self.exp >= 0 {
            v0.pow(self.exp as i32)
        } else {
            v0.pow((-self.exp) as i32).recip()
        };
        Ok(&self.coef * p * self.num.eval(v0) / d)
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.coef.is_zero() {
            return o.clone();
        }
        if o.coef.is_zero() {
            return self.clone();
        }
        let m = self.exp.min(o.exp);
        let (a, b) = (self.coef.numer(), self.coef.denom());
        let (c, d) = (o.coef.numer(), o.coef.denom());
        let ad = a * d;
        let cb = c * b;
        let bd = b * d;
        if self.den.is_one() && o.den.is_one() {
            let x = self.num.scale(&ad).shift((self.exp - m) as usize);
            let y = o.num.scale(&cb).shift((o.exp - m) as usize);
            return Self::from_parts(BigRational::new(BigInt::one(), bd), m, x.add(&y), IntPoly::one());
        }
        let g = if self.den.is_one() || o.den.is_one() { IntPoly::one() } else { self.den.gcd(&o.den) };
        let dx = self.den.div_exact(&g).unwrap();
        let dy = o.den.div_exact(&g).unwrap();
        let x = self.num.mul(&dy).scale(&ad).shift((self.exp - m) as usize);
        let y = o.num.mul(&dx).scale(&cb).shift((o.exp - m) as usize);
        let den = self.den.mul(&dy);
        Self::from_parts(BigRational::new(BigInt::one(), bd), m, x.add(&y), den)
    }

    fn neg_ref(&self) -> Self {
        if self.coef.is_zero() {
            return self.clone();
        }
        Scalar { coef: -&self.coef, exp: self.exp, num: self.num.clone(), den: self.den.clone() }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.coef.is_zero() || o.coef.is_zero() {
            return Self::raw_zero();
        }
        let coef = &self.coef * &o.coef;
        let exp = self.exp + o.exp;
        if self.den.is_one() && o.den.is_one() {
            return Scalar { coef, exp, num: self.num.mul(&o.num), den: IntPoly::one() };
        }
        let g1 = if o.den.is_one() { IntPoly::one() } else { self.num.gcd(&o.den) };
        let g2 = if self.den.is_one() { IntPoly::one() } else { o.num.gcd(&self.den) };
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Scalar { coef, exp, num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    /// Laurent coefficients of the numerator, `(exponent, coefficient)` in
    /// increasing order.
    fn numerator_terms(&self) -> Vec<(i64, BigRational)> {
        self.num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exp + i as i64, &self.coef * BigRational::from_integer(c.clone())))
            .collect()
    }

    fn denominator_terms(&self) -> Vec<(i64, BigRational)> {
        self.den
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, BigRational::from_integer(c.clone())))
            .collect()
    }

    /// True when the printed form needs no grouping as a factor.
    pub fn is_atomic(&self) -> bool {
        self.coef.is_zero() || (self.num.is_one() && self.den.is_one())
    }
}

fn write_laurent(f: &mut fmt::Formatter<'_>, terms: &[(i64, BigRational)], in_q: bool) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let (var, div) = if in_q { ("q", 2) } else { ("v", 1) };
    for (n, (e, c)) in terms.iter().rev().enumerate() {
        let e = e / div;
        let neg = c.is_negative();
        let a = c.abs();
        if n == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        if e == 0 {
            write!(f, "{a}")?;
            continue;
        }
        if !a.is_one() {
            write!(f, "{a}*")?;
        }
        if e == 1 {
            write!(f, "{var}")?;
        } else {
            write!(f, "{var}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "0");
        }
        let nt = self.numerator_terms();
        let dt = self.denominator_terms();
        let in_q = nt.iter().chain(dt.iter()).all(|(e, _)| e % 2 == 0);
        if self.den.is_one() {
            return write_laurent(f, &nt, in_q);
        }
        write!(f, "(")?;
        write_laurent(f, &nt, in_q)?;
        write!(f, ")/(")?;
        write_laurent(f, &dt, in_q)?;
        write!(f, ")")
    }
}

impl_field_ops!([] Scalar);

impl Field for Scalar {
    fn zero() -> Self {
        Self::raw_zero()
    }
    fn one() -> Self {
        Self::integer(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::integer(n)
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::rational(r.clone())
    }
    fn v_pow(e: i64) -> Self {
        Scalar { coef: BigRational::one(), exp: e, num: IntPoly::one(), den: IntPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        Some(s.clone())
    }
    fn label() -> String {
        "Q(v)".into()
    }
    fn weight(&self) -> usize {
        let bits: u64 = self.num.coeffs().iter().chain(self.den.coeffs()).map(|c| c.bits()).sum();
        16 * (self.num.degree() + 4 * self.den.degree()) + bits as usize
    }
    fn pow(&self, e: i64) -> Self {
        if let Some((c, x)) = self.as_monomial() {
            let c = if e < 0 { c.recip().pow((-e) as i32) } else { c.pow(e as i32) };
            return Scalar { coef: c, exp: x * e, num: IntPoly::one(), den: IntPoly::one() };
        }
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        acc
    }
}
