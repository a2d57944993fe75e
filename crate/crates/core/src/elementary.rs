//! Elementary automorphisms of the affine plane and an explicit faithful
//! linearization of any finitely generated subgroup.
//!
//! `(alpha, beta, c, P)` acts by `(x, y) -> (alpha x + P(y), beta y + c)`.
//! The subgroup with `deg P <= n` acts on the span of the coordinate
//! functions `x, 1, y, ..., y^(n+1)` by pullback; sending `e` to the pullback by
//! `e^-1` gives a homomorphism into `GL_(n+3)`, and the parameters of `e^-1`
//! can be read back from the first and third columns, so it is faithful.

use std::fmt;
use std::ops::Mul;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::parse::{parse_poly, parse_rat};
use crate::poly::{Degree, Poly};
use crate::rat::Rat;
use crate::sampling;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementaryAut {
    alpha: Rat,
    beta: Rat,
    c: Rat,
    p: Poly,
}

impl ElementaryAut {
    pub fn new(alpha: Rat, beta: Rat, c: Rat, p: Poly) -> Result<Self, Error> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::Precondition("alpha and beta must be nonzero".into()));
        }
        Ok(ElementaryAut { alpha, beta, c, p })
    }

    pub fn identity() -> Self {
        ElementaryAut {
            alpha: Rat::one(),
            beta: Rat::one(),
            c: Rat::zero(),
            p: Poly::zero(),
        }
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn degree(&self) -> Degree {
        self.p.degree()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self o other`, applying `other` first.
    pub fn compose(&self, other: &ElementaryAut) -> ElementaryAut {
        ElementaryAut {
            alpha: &self.alpha * &other.alpha,
            beta: &self.beta * &other.beta,
            c: &(&self.beta * &other.c) + &self.c,
            p: &other.p.scale(&self.alpha) + &self.p.compose_affine(&other.beta, &other.c),
        }
    }

    pub fn inverse(&self) -> ElementaryAut {
        let ai = self.alpha.recip().unwrap();
        let bi = self.beta.recip().unwrap();
        let shift = -(&self.c * &bi);
        ElementaryAut {
            p: self.p.compose_affine(&bi, &shift).scale(&-&ai),
            alpha: ai,
            beta: bi,
            c: shift,
        }
    }

    pub fn pow(&self, k: i64) -> ElementaryAut {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }

    /// The `(alpha, beta, c)` part, i.e. the image in the quotient by the
    /// normal subgroup of shears `(1, 1, 0, P)`.
    pub fn affine_part(&self) -> (Rat, Rat, Rat) {
        (self.alpha.clone(), self.beta.clone(), self.c.clone())
    }

    /// Parses `alpha;beta;c;P(y)`.
    pub fn parse_line(line: &str) -> Result<Self, Error> {
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 4 {
            return Err(Error::syntax(
                0,
                format!("expected `alpha;beta;c;P(y)`, got {} fields", fields.len()),
            ));
        }
        Self::new(
            parse_rat(fields[0])?,
            parse_rat(fields[1])?,
            parse_rat(fields[2])?,
            parse_poly(fields[3], 'y')?,
        )
    }

    /// One element per nonblank line; lines starting with `#` are comments.
    pub fn parse_file(text: &str) -> Result<Vec<Self>, Error> {
        text.lines()
            .enumerate()
            .map(|(i, l)| (i, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| {
                Self::parse_line(l).map_err(|e| Error::Format(format!("line {}: {e}", i + 1)))
            })
            .collect()
    }
}

impl fmt::Display for ElementaryAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{};{}", self.alpha, self.beta, self.c, self.p.display_var('y'))
    }
}

/// Dense square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    size: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(size: usize) -> Self {
        Matrix {
            size,
            entries: vec![Rat::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rat) {
        self.entries[row * self.size + col] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.entries.chunks(self.size).map(<[Rat]>::to_vec).collect()
    }

    /// Rows of `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.rows()).unwrap()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        let n = self.size;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

/// Basis `x, 1, y, ..., y^(n+1)`: index 0 is `x`, index `k + 1` is `y^k`.
/// Matrices have size `n + 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    pub degree: usize,
    pub matrices: Vec<Matrix>,
}

/// Matrix of the pullback by `e^-1` on `span(x, 1, y, ..., y^(n+1))`; column `j`
/// holds the coordinates of the image of basis vector `j`. Needs
/// `deg P <= n`.
pub fn matrix_of(e: &ElementaryAut, n: usize) -> Matrix {
    assert!(e.degree() <= Degree::Finite(n), "degree exceeds representation");
    let inv = e.inverse();
    let mut m = Matrix::zeros(n + 3);
    // x o inv = A x + Q(y)
    m.set(0, 0, inv.alpha.clone());
    for (k, q) in inv.p.coeffs().iter().enumerate() {
        m.set(k + 1, 0, q.clone());
    }
    // y^k o inv = (B y + C)^k
    let lin = Poly::from_coeffs(vec![inv.c.clone(), inv.beta.clone()]);
    let mut power = Poly::one();
    for k in 0..=n + 1 {
        for (i, coef) in power.coeffs().iter().enumerate() {
            m.set(i + 1, k + 1, coef.clone());
        }
        power = &power * &lin;
    }
    m
}

/// Reads the element back from its matrix, or `None` if the matrix is not
/// in the image of [`matrix_of`] for this size.
pub fn recover(m: &Matrix) -> Option<ElementaryAut> {
    let size = m.size();
    if size < 4 {
        return None;
    }
    let n = size - 3;
    let a = m.get(0, 0).clone();
    let b = m.get(2, 2).clone();
    let c = m.get(1, 2).clone();
    let q = Poly::from_coeffs((0..=n).map(|k| m.get(k + 1, 0).clone()).collect());
    let inv = ElementaryAut::new(a, b, c, q).ok()?;
    let e = inv.inverse();
    (matrix_of(&e, n) == *m).then_some(e)
}

/// The representation on `span(x, 1, y, ..., y^(n+1))` with `n` the largest
/// degree among the generators, at least 1.
pub fn linearize(gens: &[ElementaryAut]) -> Result<Linearization, Error> {
    if gens.is_empty() {
        return Err(Error::Precondition("need at least one generator".into()));
    }
    let degree = gens
        .iter()
        .filter_map(|e| e.degree().finite())
        .max()
        .unwrap_or(0)
        .max(1);
    Ok(Linearization {
        degree,
        matrices: gens.iter().map(|e| matrix_of(e, degree)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearizationCheck {
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub homomorphism_ok: bool,
    pub degree_bounded_ok: bool,
    pub recovery_ok: bool,
    pub identity_ok: bool,
}

impl LinearizationCheck {
    pub fn passed(&self) -> bool {
        self.homomorphism_ok && self.degree_bounded_ok && self.recovery_ok && self.identity_ok
    }
}

/// Checks `matrices` as a representation of the group generated by `gens`
/// on `trials` random words: the matrix product along the word must equal
/// `matrix_of` the evaluated element, the element must stay within the
/// degree bound, the element must be recoverable from the product, and a
/// product equal to the identity matrix must come from the identity.
pub fn check_representation(
    gens: &[ElementaryAut],
    lin: &Linearization,
    trials: usize,
    seed: u64,
) -> Result<LinearizationCheck, Error> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    if gens.is_empty() || gens.len() != lin.matrices.len() {
        return Err(Error::Precondition("one matrix per generator required".into()));
    }
    let n = lin.degree;
    let size = n + 3;
    let inverses: Vec<Matrix> = gens.iter().map(|g| matrix_of(&g.inverse(), n)).collect();
    let mut out = LinearizationCheck {
        degree: n,
        trials,
        seed,
        homomorphism_ok: true,
        degree_bounded_ok: true,
        recovery_ok: true,
        identity_ok: true,
    };
    let mut rng = sampling::rng(seed);
    for trial in 0..trials {
        // Every third word is forced to be a commutator-style loop that often
        // collapses to the identity, so the identity branch gets exercised.
        let len = rng.gen_range(1..=8);
        let mut letters: Vec<(usize, i64)> = (0..len)
            .map(|_| (rng.gen_range(0..gens.len()), [-2, -1, 1, 2][rng.gen_range(0..4)]))
            .collect();
        if trial % 3 == 0 {
            let back: Vec<_> = letters.iter().rev().map(|&(g, e)| (g, -e)).collect();
            letters.extend(back);
        }
        let mut elem = ElementaryAut::identity();
        let mut prod = Matrix::identity(size);
        for &(g, e) in &letters {
            elem = elem.compose(&gens[g].pow(e));
            let m = if e > 0 { &lin.matrices[g] } else { &inverses[g] };
            for _ in 0..e.unsigned_abs() {
                prod = &prod * m;
            }
        }
        if elem.degree() > Degree::Finite(n) {
            out.degree_bounded_ok = false;
            continue;
        }
        if prod != matrix_of(&elem, n) {
            out.homomorphism_ok = false;
        }
        if recover(&prod).as_ref() != Some(&elem) {
            out.recovery_ok = false;
        }
        if prod == Matrix::identity(size) && !elem.is_identity() {
            out.identity_ok = false;
        }
    }
    Ok(out)
}

pub fn linearize_check(gens: &[ElementaryAut], trials: usize, seed: u64) -> Result<LinearizationCheck, Error> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let lin = linearize(gens)?;
    check_representation(gens, &lin, trials, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn el(a: i64, b: i64, c: i64, p: &[i64]) -> ElementaryAut {
        ElementaryAut::new(r(a), r(b), r(c), Poly::from_ints(p)).unwrap()
    }

    #[test]
    fn compose_examples() {
        let e = el(2, 3, 1, &[0, 1, 5]);
        assert_eq!(e.compose(&ElementaryAut::identity()), e);
        assert_eq!(el(2, 1, 0, &[]).compose(&el(1, 3, 1, &[0, 0, 1])), el(2, 3, 1, &[0, 0, 2]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ElementaryAut::identity().inverse(), ElementaryAut::identity());
        let half = ElementaryAut::new(Rat::new(1, 2).unwrap(), r(1), r(0), Poly::zero()).unwrap();
        assert_eq!(el(2, 1, 0, &[]).inverse(), half);
        let e = el(1, 2, 1, &[0, 1]);
        assert!(e.compose(&e.inverse()).is_identity());
        assert!(e.inverse().compose(&e).is_identity());
    }

    #[test]
    fn zero_scalars_rejected() {
        assert!(ElementaryAut::new(r(0), r(1), r(0), Poly::zero()).is_err());
        assert!(ElementaryAut::new(r(1), r(0), r(0), Poly::zero()).is_err());
    }

    #[test]
    fn linearize_identity_and_scaling() {
        let lin = linearize(&[ElementaryAut::identity()]).unwrap();
        assert_eq!(lin.degree, 1);
        assert_eq!(lin.matrices[0], Matrix::identity(4));
        let lin = linearize(&[el(2, 1, 0, &[])]).unwrap();
        let mut expected = Matrix::identity(4);
        expected.set(0, 0, Rat::new(1, 2).unwrap());
        assert_eq!(lin.matrices[0], expected);
        assert!(linearize(&[]).is_err());
    }

    #[test]
    fn recovery() {
        let e = el(3, -2, 5, &[1, 0, 4]);
        assert_eq!(recover(&matrix_of(&e, 2)), Some(e.clone()));
        assert_eq!(recover(&matrix_of(&e, 4)), Some(e));
        let mut m = Matrix::identity(4);
        m.set(3, 3, r(7));
        assert_eq!(recover(&m), None);
    }

    #[test]
    fn parse_generator_lines() {
        let gens = ElementaryAut::parse_file("# gens\n2;1;0;0\n1;3;1;y^2\n\n1/2;-1;0;y - 3/2*y^3\n").unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[1], el(1, 3, 1, &[0, 0, 1]));
        assert_eq!(gens[2].to_string(), "1/2;-1;0;-3/2*y^3 + y");
        assert!(ElementaryAut::parse_line("1;2;3").is_err());
        assert!(ElementaryAut::parse_line("0;1;0;y").is_err());
    }

    #[test]
    fn check_passes_and_negative_control_fails() {
        let gens = vec![el(1, 1, 0, &[0, 0, 0, 1]), el(1, 1, 1, &[]), el(2, 1, 0, &[1])];
        let ok = linearize_check(&gens, 40, 3).unwrap();
        assert!(ok.passed(), "{ok:?}");
        let mut lin = linearize(&gens).unwrap();
        let v = lin.matrices[0].get(0, 1) + &Rat::one();
        lin.matrices[0].set(0, 1, v);
        let bad = check_representation(&gens, &lin, 40, 3).unwrap();
        assert!(!bad.passed());
        assert!(linearize_check(&gens, 0, 3).is_err());
    }
}
