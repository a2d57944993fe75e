//! Rational functions over the rationals in lowest terms.
//!
//! A `RatFunc` is always normalized: the denominator is nonzero and monic,
//! `gcd(num, den) = 1`, and zero is `0/1`. Leading units live in the
//! numerator. With canonical representatives, structural equality is
//! equality of functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{Degree, Poly};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den` and normalizes it.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip().expect("nonzero denominator");
            return RatFunc {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = (exact_div(&num, &g), exact_div(&den, &g));
        let lc_inv = den.leading().unwrap().recip().unwrap();
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_poly().and_then(Poly::as_constant)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    /// `self^k` for any integer `k`; negative powers of zero fail.
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| {
            Error::Precondition(format!("exponent {k} out of range"))
        })?;
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// `g(X - t)`.
    pub fn shift(&self, t: &Rat) -> Self {
        if t.is_zero() {
            return self.clone();
        }
        // A translation keeps both parts coprime and leading coefficients
        // unchanged, so the result is already normalized.
        RatFunc {
            num: self.num.shift(t),
            den: self.den.shift(t),
        }
    }

    /// Value at `x`, or `Indeterminate` if the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Result<Rat, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Indeterminate);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() { Poly::one() } else { self.den.clone() },
        }
    }

    pub fn display_var(&self, var: char) -> RatFuncDisplay<'_> {
        RatFuncDisplay { rf: self, var }
    }

    /// Max of numerator and denominator degrees.
    pub fn height(&self) -> Degree {
        self.num.degree().max(self.den.degree())
    }
}

#[derive(Deserialize)]
struct RawRatFunc {
    num: Poly,
    den: Poly,
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRatFunc::deserialize(deserializer)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

pub struct RatFuncDisplay<'a> {
    rf: &'a RatFunc,
    var: char,
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rf.is_poly() {
            write!(f, "{}", self.rf.num.display_var(self.var))
        } else {
            write!(
                f,
                "({})/({})",
                self.rf.num.display_var(self.var),
                self.rf.den.display_var(self.var)
            )
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var('X').fmt(f)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &-rhs
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_poly() && rhs.is_poly() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Both inputs are in lowest terms, so after cross-cancelling the
        // products are coprime, and monic over monic stays monic.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = exact_div(&self.num, &g1);
        let d2 = exact_div(&rhs.den, &g1);
        let n2 = exact_div(&rhs.num, &g2);
        let d1 = exact_div(&self.den, &g2);
        RatFunc {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }
}

fn exact_div(p: &Poly, g: &Poly) -> Poly {
    if g.is_one() {
        p.clone()
    } else {
        p.div_rem(g).0
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rf(&[-1, 1], &[0, 1]) * rf(&[0, 1], &[-1, 1]), RatFunc::one());
        // (2X^2 + 2X) * 1/(2X) = X + 1
        assert_eq!(rf(&[0, 2, 2], &[1]) * rf(&[1], &[0, 2]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = rf(&[1, 2], &[3, 0, 1]);
        assert_eq!(&f + &RatFunc::zero(), f);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let err = RatFunc::zero().inv().unwrap_err();
        assert_eq!(err.to_string(), "division by zero rational function");
        assert_eq!(RatFunc::new(p(&[1]), Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn shift_examples() {
        let one = Rat::one();
        assert_eq!(RatFunc::x().shift(&one), rf(&[-1, 1], &[1]));
        assert_eq!(rf(&[1], &[0, 1]).shift(&-&one), rf(&[1], &[1, 1]));
        assert_eq!(rf(&[-1, 1], &[0, 1]).shift(&one), rf(&[-2, 1], &[-1, 1]));
    }

    #[test]
    fn normal_form_is_canonical() {
        // (2X - 2) / (4X^2 - 4) = (1/2) / (X + 1)
        let a = rf(&[-2, 2], &[-4, 0, 4]);
        assert_eq!(a.num(), &Poly::constant(Rat::new(1, 2).unwrap()));
        assert_eq!(a.den(), &p(&[1, 1]));
        assert_eq!(RatFunc::new(a.num().clone(), a.den().clone()).unwrap(), a);
    }

    #[test]
    fn eval_at_pole() {
        let f = rf(&[1], &[0, 1]);
        assert_eq!(f.eval(&Rat::zero()), Err(Error::Indeterminate));
        assert_eq!(f.eval(&Rat::from_int(2)).unwrap(), Rat::new(1, 2).unwrap());
    }
}
