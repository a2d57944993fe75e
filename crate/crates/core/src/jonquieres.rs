//! The Jonquières subgroup over the rationals.
//!
//! An element is a triple `(t, g, f)` acting on the plane by
//! `(x, y) -> (x + t, g(x)*y + f(x))`, with `t` rational, `g` a nonzero
//! rational function and `f` a rational function. This family is closed
//! under composition and inversion, so the triple is a normal form and
//! equality of elements is equality of triples.
//!
//! Products read like function composition: `a.compose(&b)` applies `b`
//! first. With that convention
//!
//! ```text
//! (t1, g1, f1) * (t2, g2, f2) = (t1 + t2, g1(X + t2) g2, g1(X + t2) f2 + f1(X + t2))
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{Degree, Poly};
use crate::ratfunc::RatFunc;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JonqElement {
    t: Rat,
    g: RatFunc,
    f: RatFunc,
}

/// Which of the named one-parameter families a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `s_t : (x, y) -> (x + t, y)`
    Translation,
    /// `alpha_f : (x, y) -> (x, y + f(x))`
    Alpha,
    /// `mu_g : (x, y) -> (x, g(x) y)`
    Mu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// Recognized shape of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Identity,
    /// `alpha_P` with `P` a nonzero polynomial of the given degree.
    Alpha(Degree),
    Mu,
    Translation,
    General,
}

impl JonqElement {
    pub fn new(t: Rat, g: RatFunc, f: RatFunc) -> Result<Self, Error> {
        if g.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
        Ok(JonqElement { t, g, f })
    }

    pub fn identity() -> Self {
        JonqElement {
            t: Rat::zero(),
            g: RatFunc::one(),
            f: RatFunc::zero(),
        }
    }

    pub fn translation(t: Rat) -> Self {
        JonqElement {
            t,
            ..Self::identity()
        }
    }

    pub fn alpha(f: RatFunc) -> Self {
        JonqElement {
            f,
            ..Self::identity()
        }
    }

    pub fn alpha_poly(p: Poly) -> Self {
        Self::alpha(RatFunc::from_poly(p))
    }

    pub fn mu(g: RatFunc) -> Result<Self, Error> {
        Self::new(Rat::zero(), g, RatFunc::zero())
    }

    /// Builds a generator from its family and parameter. Translations need
    /// a constant parameter.
    pub fn generator(kind: GeneratorKind, param: RatFunc) -> Result<Self, Error> {
        match kind {
            GeneratorKind::Translation => param
                .as_constant()
                .map(Self::translation)
                .ok_or_else(|| Error::Precondition("translation parameter must be a constant".into())),
            GeneratorKind::Alpha => Ok(Self::alpha(param)),
            GeneratorKind::Mu => Self::mu(param),
        }
    }

    pub fn t(&self) -> &Rat {
        &self.t
    }

    pub fn g(&self) -> &RatFunc {
        &self.g
    }

    pub fn f(&self) -> &RatFunc {
        &self.f
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.g.is_one() && self.f.is_zero()
    }

    pub fn compose(&self, other: &JonqElement) -> JonqElement {
        let back = -&other.t;
        let g1 = self.g.shift(&back);
        let f1 = self.f.shift(&back);
        JonqElement {
            t: &self.t + &other.t,
            g: &g1 * &other.g,
            f: &(&g1 * &other.f) + &f1,
        }
    }

    pub fn inverse(&self) -> JonqElement {
        let g = self.g.shift(&self.t);
        let ginv = g.inv().expect("multiplier is nonzero");
        let f = self.f.shift(&self.t);
        JonqElement {
            t: -&self.t,
            f: -&(&f * &ginv),
            g: ginv,
        }
    }

    pub fn pow(&self, k: i64) -> JonqElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = JonqElement::identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.compose(&sq);
            }
        }
        acc
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, other: &JonqElement) -> JonqElement {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    pub fn apply(&self, (x, y): (&Rat, &Rat)) -> Result<(Rat, Rat), Error> {
        let gx = self.g.eval(x)?;
        let fx = self.f.eval(x)?;
        Ok((x + &self.t, gx * y + fx))
    }

    /// Exact order in the group.
    ///
    /// Powers of `(0, g, f)` have multiplier `g^k`, and the only units of
    /// finite order in Q(X)^x are the constants `1` and `-1`. So:
    /// a nonzero translation part gives infinite order (it adds up);
    /// `g = 1` gives `alpha_f`, whose powers are `alpha_{kf}`;
    /// `g = -1` gives an involution, since `(0,-1,f)^2 = (0, 1, -f + f)`;
    /// any other `g` has infinite multiplicative order.
    pub fn order(&self) -> Order {
        if !self.t.is_zero() {
            return Order::Infinite;
        }
        if self.g.is_one() {
            return if self.f.is_zero() {
                Order::Finite(1)
            } else {
                Order::Infinite
            };
        }
        if self.g.as_constant() == Some(Rat::from_int(-1)) {
            return Order::Finite(2);
        }
        Order::Infinite
    }

    pub fn classify(&self) -> Form {
        if self.is_identity() {
            return Form::Identity;
        }
        let pure_shear = self.t.is_zero() && self.g.is_one();
        if pure_shear {
            return match self.f.as_poly() {
                Some(p) => Form::Alpha(p.degree()),
                None => Form::General,
            };
        }
        if self.t.is_zero() && self.f.is_zero() {
            return Form::Mu;
        }
        if self.g.is_one() && self.f.is_zero() {
            return Form::Translation;
        }
        Form::General
    }

    /// Membership in `A_n`, the shears by polynomials of degree at most `n`.
    pub fn in_a(&self, n: usize) -> bool {
        match self.classify() {
            Form::Identity => true,
            Form::Alpha(d) => d <= Degree::Finite(n),
            _ => false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("element serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, Error> {
        serde_json::from_value(value.clone()).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Deserialize)]
struct RawElement {
    t: Rat,
    g: RatFunc,
    f: RatFunc,
}

impl<'de> Deserialize<'de> for JonqElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawElement::deserialize(deserializer)?;
        JonqElement::new(raw.t, raw.g, raw.f).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for JonqElement {
    /// Recognized forms print by name (`alpha(X)`, `mu(X - 1)`, `s(1)`,
    /// `id`); anything else prints as the raw triple.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.classify() {
            Form::Identity => out.write_str("id"),
            Form::Alpha(_) => write!(out, "alpha({})", self.f),
            Form::Mu => write!(out, "mu({})", self.g),
            Form::Translation => write!(out, "s({})", self.t),
            Form::General if self.t.is_zero() && self.g.is_one() => {
                write!(out, "alpha({})", self.f)
            }
            Form::General => write!(out, "({}, {}, {})", self.t, self.g, self.f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    fn alpha(n: &[i64]) -> JonqElement {
        JonqElement::alpha_poly(Poly::from_ints(n))
    }

    fn s(t: i64) -> JonqElement {
        JonqElement::translation(Rat::from_int(t))
    }

    fn mu_x() -> JonqElement {
        JonqElement::mu(RatFunc::x()).unwrap()
    }

    #[test]
    fn generators() {
        let e = s(1);
        assert_eq!((e.t(), e.g(), e.f()), (&Rat::one(), &RatFunc::one(), &RatFunc::zero()));
        assert_eq!(alpha(&[0, 0, 1]).f(), &rf(&[0, 0, 1], &[1]));
        assert_eq!(mu_x().g(), &RatFunc::x());
        assert_eq!(
            JonqElement::generator(GeneratorKind::Mu, RatFunc::zero()).unwrap_err().to_string(),
            "multiplier must be nonzero"
        );
    }

    #[test]
    fn conjugation_relations() {
        let m = mu_x();
        let c = m.compose(&alpha(&[1])).compose(&m.inverse());
        assert_eq!(c, alpha(&[0, 1]));
        let c = s(1).compose(&alpha(&[0, 1])).compose(&s(1).inverse());
        assert_eq!(c, alpha(&[-1, 1]));
        assert_eq!(c.compose(&JonqElement::identity()), c);
    }

    #[test]
    fn inverse_examples() {
        let f = rf(&[2, 0, 3], &[1, 1]);
        assert_eq!(JonqElement::alpha(f.clone()).inverse(), JonqElement::alpha(-f));
        let e = JonqElement::new(Rat::one(), RatFunc::x(), RatFunc::one()).unwrap();
        let inv = e.inverse();
        assert_eq!(inv.t(), &Rat::from_int(-1));
        assert_eq!(inv.g(), &rf(&[1], &[-1, 1]));
        assert_eq!(inv.f(), &rf(&[-1], &[-1, 1]));
        assert!(e.compose(&inv).is_identity());
        assert_eq!(s(3).inverse(), s(-3));
    }

    #[test]
    fn apply_examples() {
        let pt = |x: i64, y: i64| (Rat::from_int(x), Rat::from_int(y));
        let (x, y) = pt(2, 3);
        assert_eq!(alpha(&[0, 0, 1]).apply((&x, &y)).unwrap(), pt(2, 7));
        let m = JonqElement::mu(rf(&[1], &[0, 1])).unwrap();
        let (x, y) = pt(0, 1);
        assert_eq!(m.apply((&x, &y)), Err(Error::Indeterminate));
        let (x, y) = pt(0, 0);
        assert_eq!(s(1).apply((&x, &y)).unwrap(), pt(1, 0));
    }

    #[test]
    fn order_examples() {
        let minus = JonqElement::mu(RatFunc::constant(Rat::from_int(-1))).unwrap();
        assert_eq!(minus.order(), Order::Finite(2));
        assert!(minus.pow(2).is_identity());
        assert_eq!(s(1).order(), Order::Infinite);
        assert_eq!(alpha(&[0, 1]).order(), Order::Infinite);
        assert_eq!(JonqElement::identity().order(), Order::Finite(1));
        let inv_with_shear =
            JonqElement::new(Rat::zero(), RatFunc::constant(Rat::from_int(-1)), RatFunc::x()).unwrap();
        assert_eq!(inv_with_shear.order(), Order::Finite(2));
        assert!(inv_with_shear.pow(2).is_identity());
    }

    #[test]
    fn classify_examples() {
        let a3 = alpha(&[0, 0, 0, 1]);
        assert_eq!(a3.classify(), Form::Alpha(Degree::Finite(3)));
        assert!(a3.in_a(3));
        assert!(!a3.in_a(2));
        assert_eq!(JonqElement::alpha(rf(&[1], &[0, 1])).classify(), Form::General);
        assert_eq!(JonqElement::identity().classify(), Form::Identity);
        assert!((0..5).all(|n| JonqElement::identity().in_a(n)));
        assert_eq!(mu_x().classify(), Form::Mu);
        assert_eq!(s(2).classify(), Form::Translation);
    }

    #[test]
    fn json_schema_instance() {
        let v = alpha(&[0, 1]).to_json();
        assert_eq!(
            v.to_string(),
            r#"{"f":{"den":["1"],"num":["0","1"]},"g":{"den":["1"],"num":["1"]},"t":"0"}"#
        );
        assert_eq!(JonqElement::from_json(&v).unwrap(), alpha(&[0, 1]));
        let bad = serde_json::json!({"t": "0", "g": {"num": [], "den": ["1"]}, "f": {"num": [], "den": ["1"]}});
        assert!(JonqElement::from_json(&bad).is_err());
    }
}
