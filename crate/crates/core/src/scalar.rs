//! Exact scalars: arbitrary-precision rationals, split-complex numbers and
//! rational points on the unit hyperbola.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in canonical form (positive denominator, reduced).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics when `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(numer, denom)))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Rational::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::from_big(n, d).ok_or_else(bad)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Lit {
            Str(String),
            Int(i64),
        }
        match Lit::deserialize(de)? {
            Lit::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Lit::Int(n) => Ok(Rational::from_integer(n)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $ty:ty, $body:expr) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                $tr::$m(&self, rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, Rational, |a, b| Rational(&a.0 + &b.0));
forward_binop!(Sub, sub, Rational, |a, b| Rational(&a.0 - &b.0));
forward_binop!(Mul, mul, Rational, |a, b| Rational(&a.0 * &b.0));

/// Panics on division by zero; use [`Rational::recip`] for a checked path.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Split-complex number `re + e·im` with `e² = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SplitComplex {
    pub re: Rational,
    pub im: Rational,
}

impl SplitComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        SplitComplex { re, im }
    }

    pub fn real(re: Rational) -> Self {
        SplitComplex {
            re,
            im: Rational::zero(),
        }
    }

    /// The unit `e`.
    pub fn e() -> Self {
        SplitComplex {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// Idempotent `(1+e)/2`.
    pub fn e_plus() -> Self {
        SplitComplex {
            re: Rational::half(),
            im: Rational::half(),
        }
    }

    /// Idempotent `(1−e)/2`.
    pub fn e_minus() -> Self {
        SplitComplex {
            re: Rational::half(),
            im: -Rational::half(),
        }
    }

    pub fn conjugate(&self) -> Self {
        SplitComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `x·conj(x) = re² − im²`.
    pub fn modulus_sq(&self) -> Rational {
        &self.re * &self.re - &self.im * &self.im
    }

    /// Light-cone components `(re+im, re−im)`, so that `x = e⁺·plus + e⁻·minus`.
    pub fn lightcone(&self) -> (Rational, Rational) {
        (&self.re + &self.im, &self.re - &self.im)
    }

    pub fn from_lightcone(plus: &Rational, minus: &Rational) -> Self {
        let half = Rational::half();
        SplitComplex {
            re: &(plus + minus) * &half,
            im: &(plus - minus) * &half,
        }
    }
}

impl Zero for SplitComplex {
    fn zero() -> Self {
        SplitComplex::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for SplitComplex {
    fn one() -> Self {
        SplitComplex::real(Rational::one())
    }
}

impl From<Rational> for SplitComplex {
    fn from(r: Rational) -> Self {
        SplitComplex::real(r)
    }
}

forward_binop!(Add, add, SplitComplex, |a, b| SplitComplex {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
forward_binop!(Sub, sub, SplitComplex, |a, b| SplitComplex {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
forward_binop!(Mul, mul, SplitComplex, |a, b| SplitComplex {
    re: &a.re * &b.re + &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re
});

impl Neg for SplitComplex {
    type Output = SplitComplex;
    fn neg(self) -> SplitComplex {
        SplitComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &SplitComplex {
    type Output = SplitComplex;
    fn neg(self) -> SplitComplex {
        SplitComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for SplitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = |x: &Rational| -> String {
            if x.is_one() {
                "e".to_string()
            } else if (-x).is_one() {
                "-e".to_string()
            } else {
                format!("{x}e")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", unit(&self.im)),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}", self.re, unit(&self.im.abs()))
            }
            (false, false) => write!(f, "{}+{}", self.re, unit(&self.im)),
        }
    }
}

impl fmt::Debug for SplitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient ring for tensors: the rationals or the split-complex numbers.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + From<Rational>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn scale(&self, r: &Rational) -> Self;

    /// Whether the value needs parentheses when printed as a coefficient.
    fn is_compound(&self) -> bool {
        false
    }

    /// Whether the value prints with a leading minus sign.
    fn is_negative_term(&self) -> bool;
}

impl Scalar for Rational {
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn is_negative_term(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for SplitComplex {
    fn scale(&self, r: &Rational) -> Self {
        SplitComplex {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    fn is_negative_term(&self) -> bool {
        !self.is_compound() && (self.re.is_negative() || self.im.is_negative())
    }
}

/// Exact point `(c, s)` with `c² − s² = 1` and `c ≥ 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HyperbolicPoint {
    pub c: Rational,
    pub s: Rational,
}

impl HyperbolicPoint {
    pub fn new(c: Rational, s: Rational) -> Result<Self> {
        if &c * &c - &s * &s != Rational::one() || c < Rational::one() {
            return Err(Error::DegenerateParameter(format!(
                "({c}, {s}) is not on the branch c ≥ 1 of c² − s² = 1"
            )));
        }
        Ok(HyperbolicPoint { c, s })
    }
}

/// Rational parametrization `c = (1+t²)/(1−t²)`, `s = 2t/(1−t²)`.
///
/// For `t² > 1` the formula lands on `c ≤ −1`; the point is reflected to
/// `(−c, −s)`, which is the value at `1/t`.
pub fn hyperbolic_point(t: &Rational) -> Result<HyperbolicPoint> {
    let t2 = t * t;
    let den = Rational::one() - &t2;
    let inv = den
        .recip()
        .ok_or_else(|| Error::DegenerateParameter(format!("t = {t} has t² = 1")))?;
    let c = (Rational::one() + &t2) * &inv;
    let s = (t + t) * &inv;
    if c.is_negative() {
        Ok(HyperbolicPoint { c: -c, s: -s })
    } else {
        Ok(HyperbolicPoint { c, s })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("-4".parse::<Rational>().unwrap(), q(-4, 1));
        assert_eq!("2/-4".parse::<Rational>().unwrap().to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(q(6, 3).to_string(), "2");
    }

    #[test]
    fn denominator_positive_and_reduced() {
        let x = q(4, -6);
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
    }

    #[test]
    fn hyperbolic_points() {
        let p = hyperbolic_point(&Rational::zero()).unwrap();
        assert_eq!((p.c, p.s), (q(1, 1), q(0, 1)));
        let p = hyperbolic_point(&q(1, 2)).unwrap();
        assert_eq!((p.c.clone(), p.s.clone()), (q(5, 3), q(4, 3)));
        let p = hyperbolic_point(&q(1, 3)).unwrap();
        assert_eq!((p.c, p.s), (q(5, 4), q(3, 4)));
        assert!(matches!(
            hyperbolic_point(&q(-1, 1)),
            Err(Error::DegenerateParameter(_))
        ));
        assert_eq!(
            hyperbolic_point(&q(2, 1)).unwrap(),
            hyperbolic_point(&q(1, 2)).unwrap()
        );
    }

    #[test]
    fn split_complex_units() {
        let e = SplitComplex::e();
        assert_eq!(&e * &e, SplitComplex::one());
        let a = SplitComplex::new(q(1, 1), q(1, 1));
        let b = SplitComplex::new(q(1, 1), q(-1, 1));
        assert!((a * b).is_zero());
        let (p, m) = (SplitComplex::e_plus(), SplitComplex::e_minus());
        assert_eq!(&p * &p, p);
        assert!((&p * &m).is_zero());
        assert_eq!(&p + &m, SplitComplex::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(SplitComplex::new(q(1, 2), q(1, 2)).to_string(), "1/2+1/2e");
        assert_eq!(SplitComplex::new(q(1, 2), q(-1, 2)).to_string(), "1/2-1/2e");
        assert_eq!(SplitComplex::new(q(0, 1), q(-3, 1)).to_string(), "-3e");
        assert_eq!(SplitComplex::zero().to_string(), "0");
        assert_eq!(SplitComplex::e().to_string(), "e");
        assert_eq!(SplitComplex::new(q(2, 1), q(-1, 1)).to_string(), "2-e");
    }
}
