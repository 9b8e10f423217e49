//! Coefficient fields. Every structure in the crate is generic over [`Field`];
//! the symbolic field is [`Scalar`], the others are specialisations of `v`
//! used for numeric cross-checks and for the modular solver prefilter.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    /// `v^e`, where `q = v^2`.
    fn v_pow(e: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Image of a symbolic scalar; `None` at a pole.
    fn from_scalar(s: &Scalar) -> Option<Self>;
    /// Short name used in reports.
    fn label() -> String;
    /// Rough size, used as an elimination pivot heuristic.
    fn weight(&self) -> usize {
        1
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    fn q_pow(e: i64) -> Self {
        Self::v_pow(2 * e)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inverse().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc *= &b;
            }
            n >>= 1;
            if n > 0 {
                b = b.clone() * &b;
            }
        }
        acc
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inverse().map(|i| self.clone() * &i)
    }
}

/// Implements the std operator traits from inherent `add_ref`, `sub_ref`,
/// `mul_ref` and `neg_ref`.
macro_rules! impl_field_ops {
    ([$($g:tt)*] $t:ty) => {
        impl<$($g)*> std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t { self.add_ref(&o) }
        }
        impl<'a, $($g)*> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t { self.add_ref(o) }
        }
        impl<'a, 'b, $($g)*> std::ops::Add<&'b $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &'b $t) -> $t { self.add_ref(o) }
        }
        impl<$($g)*> std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t { self.sub_ref(&o) }
        }
        impl<'a, $($g)*> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t { self.sub_ref(o) }
        }
        impl<'a, 'b, $($g)*> std::ops::Sub<&'b $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &'b $t) -> $t { self.sub_ref(o) }
        }
        impl<$($g)*> std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t { self.mul_ref(&o) }
        }
        impl<'a, $($g)*> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t { self.mul_ref(o) }
        }
        impl<'a, 'b, $($g)*> std::ops::Mul<&'b $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &'b $t) -> $t { self.mul_ref(o) }
        }
        impl<$($g)*> std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { self.neg_ref() }
        }
        impl<'a, $($g)*> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t { self.neg_ref() }
        }
        impl<$($g)*> std::ops::AddAssign for $t {
            fn add_assign(&mut self, o: $t) { *self = self.add_ref(&o); }
        }
        impl<'a, $($g)*> std::ops::AddAssign<&'a $t> for $t {
            fn add_assign(&mut self, o: &'a $t) { *self = self.add_ref(o); }
        }
        impl<$($g)*> std::ops::SubAssign for $t {
            fn sub_assign(&mut self, o: $t) { *self = self.sub_ref(&o); }
        }
        impl<'a, $($g)*> std::ops::SubAssign<&'a $t> for $t {
            fn sub_assign(&mut self, o: &'a $t) { *self = self.sub_ref(o); }
        }
        impl<$($g)*> std::ops::MulAssign for $t {
            fn mul_assign(&mut self, o: $t) { *self = self.mul_ref(&o); }
        }
        impl<'a, $($g)*> std::ops::MulAssign<&'a $t> for $t {
            fn mul_assign(&mut self, o: &'a $t) { *self = self.mul_ref(o); }
        }
    };
}
pub(crate) use impl_field_ops;

/// A rational value for `v`.
pub trait Point: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    fn v() -> BigRational;
    fn name() -> &'static str;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtTwo;

impl Point for AtTwo {
    fn v() -> BigRational {
        BigRational::from_integer(2.into())
    }
    fn name() -> &'static str {
        "2"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtFiveHalves;

impl Point for AtFiveHalves {
    fn v() -> BigRational {
        BigRational::new(5.into(), 2.into())
    }
    fn name() -> &'static str {
        "5/2"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtThree;

impl Point for AtThree {
    fn v() -> BigRational {
        BigRational::from_integer(3.into())
    }
    fn name() -> &'static str {
        "3"
    }
}

/// Exact rationals obtained by fixing `v` to the point `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialized<P: Point> {
    pub value: BigRational,
    _p: PhantomData<P>,
}

impl<P: Point> Specialized<P> {
    pub fn new(value: BigRational) -> Self {
        Specialized { value, _p: PhantomData }
    }
    fn add_ref(&self, o: &Self) -> Self {
        Self::new(&self.value + &o.value)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Self::new(&self.value - &o.value)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Self::new(&self.value * &o.value)
    }
    fn neg_ref(&self) -> Self {
        Self::new(-&self.value)
    }
}

impl_field_ops!([P: Point] Specialized<P>);

impl<P: Point> fmt::Display for Specialized<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl<P: Point> Field for Specialized<P> {
    fn zero() -> Self {
        Self::new(BigRational::zero())
    }
    fn one() -> Self {
        Self::new(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()))
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::new(r.clone())
    }
    fn v_pow(e: i64) -> Self {
        let v = P::v();
        let p = v.pow(e.unsigned_abs() as i32);
        Self::new(if e < 0 { p.recip() } else { p })
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        if self.value.is_zero() {
            None
        } else {
            Some(Self::new(self.value.recip()))
        }
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        s.eval_at(&P::v()).ok().map(Self::new)
    }
    fn label() -> String {
        format!("v={}", P::name())
    }
    fn weight(&self) -> usize {
        (self.value.numer().bits() + self.value.denom().bits()) as usize
    }
}

/// Prime field `Z/P` with `v` fixed to `V`. Used to locate the support of a
/// solution cheaply before the exact solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP<const P: u64, const V: u64>(u64);

/// The modulus and evaluation point used by the solver prefilter.
pub type Fp = ModP<2305843009213693951, 1234567891>;

impl<const P: u64, const V: u64> ModP<P, V> {
    pub fn new(x: u64) -> Self {
        ModP(x % P)
    }
    pub fn value(&self) -> u64 {
        self.0
    }
    fn add_ref(&self, o: &Self) -> Self {
        ModP(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        ModP(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        ModP(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
    fn neg_ref(&self) -> Self {
        ModP((P - self.0) % P)
    }
    fn powu(&self, mut e: u64) -> Self {
        let mut acc = ModP(1 % P);
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        acc
    }
    fn from_bigint(n: &BigInt) -> Self {
        let p = BigInt::from(P);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        ModP(r.to_u64().expect("residue fits"))
    }
}

impl_field_ops!([const P: u64, const V: u64] ModP<P, V>);

impl<const P: u64, const V: u64> fmt::Display for ModP<P, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64, const V: u64> Field for ModP<P, V> {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1 % P)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
    fn from_rational(r: &BigRational) -> Self {
        let n = Self::from_bigint(r.numer());
        let d = Self::from_bigint(r.denom());
        n.mul_ref(&d.inverse().expect("denominator vanishes mod p"))
    }
    fn v_pow(e: i64) -> Self {
        let v = ModP::<P, V>(V % P);
        let p = v.powu(e.unsigned_abs());
        if e < 0 {
            p.inverse().expect("v invertible")
        } else {
            p
        }
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.powu(P - 2))
        }
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        let (coef, exp, num, den) = s.parts();
        let c = Self::from_bigint(coef.numer()).mul_ref(&Self::from_bigint(coef.denom()).inverse()?);
        let n = ModP(num.eval_mod(V % P, P));
        let d = ModP(den.eval_mod(V % P, P)).inverse()?;
        Some(c.mul_ref(&Self::v_pow(exp)).mul_ref(&n).mul_ref(&d))
    }
    fn label() -> String {
        format!("F_{P} at v={V}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S2 = Specialized<AtTwo>;

    #[test]
    fn specialised_powers() {
        assert_eq!(S2::q_pow(1), S2::from_i64(4));
        assert_eq!(S2::v_pow(-2), S2::from_ratio(1, 4));
        assert_eq!(Specialized::<AtFiveHalves>::v_pow(2), Specialized::from_ratio(25, 4));
        assert_eq!(S2::from_i64(3).pow(-2), S2::from_ratio(1, 9));
    }

    #[test]
    fn modp_inverse() {
        let x = Fp::from_i64(-7);
        assert!((x * x.inverse().unwrap()).is_one());
        assert_eq!(Fp::from_ratio(1, 2) * Fp::from_i64(2), Fp::one());
        assert_eq!(Fp::v_pow(3) * Fp::v_pow(-3), Fp::one());
    }
}
