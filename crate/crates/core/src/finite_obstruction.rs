//! Finite and monomial models behind the obstruction to nontrivial
//! representations of the Cremona group.
//!
//! The monomial maps `(x1, x2) -> (w^j1 x1, x1^n w^j2 x2)`, with `w` a
//! primitive p-th root of unity, form a copy of `(Z/p)^2 x| Z` inside the
//! Cremona group. Roots of unity are kept symbolic as exponents mod p.
//!
//! The Heisenberg group mod p realizes the relation used in the argument:
//! a commutator that is central of order p. Its profile is computed by
//! brute-force enumeration, and its irreducible dimensions are pinned down
//! by counting constraints alone.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub const SUPPORTED_PRIMES: [u64; 4] = [2, 3, 5, 7];

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(x1, x2) -> (w^j1 x1, x1^n w^j2 x2)` for a fixed primitive p-th root `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialElement {
    p: u64,
    j1: u64,
    j2: u64,
    n: i64,
}

impl MonomialElement {
    pub fn new(p: u64, j1: i64, j2: i64, n: i64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let m = p as i64;
        Ok(MonomialElement {
            p,
            j1: j1.rem_euclid(m) as u64,
            j2: j2.rem_euclid(m) as u64,
            n,
        })
    }

    pub fn identity(p: u64) -> Result<Self, Error> {
        Self::new(p, 0, 0, 0)
    }

    /// `sigma : (x1, x2) -> (x1, x1 x2)`.
    pub fn sigma(p: u64) -> Result<Self, Error> {
        Self::new(p, 0, 0, 1)
    }

    /// `(x1, x2) -> (w x1, w x2)`.
    pub fn alpha(p: u64) -> Result<Self, Error> {
        Self::new(p, 1, 1, 0)
    }

    /// `(x1, x2) -> (x1, w x2)`.
    pub fn beta(p: u64) -> Result<Self, Error> {
        Self::new(p, 0, 1, 0)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn parts(&self) -> (u64, u64, i64) {
        (self.j1, self.j2, self.n)
    }

    pub fn is_identity(&self) -> bool {
        self.j1 == 0 && self.j2 == 0 && self.n == 0
    }

    /// `self . other`, applying `other` first. Substituting
    /// `x1 -> w^j1' x1` into `x1^n` contributes `w^(n j1')`.
    pub fn compose(&self, other: &MonomialElement) -> Result<MonomialElement, Error> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        let m = self.p as i128;
        let j2 = (self.n as i128 * other.j1 as i128 + self.j2 as i128 + other.j2 as i128).rem_euclid(m);
        Ok(MonomialElement {
            p: self.p,
            j1: (self.j1 + other.j1) % self.p,
            j2: j2 as u64,
            n: self.n + other.n,
        })
    }

    pub fn inverse(&self) -> MonomialElement {
        let m = self.p as i128;
        let j2 = (self.n as i128 * self.j1 as i128 - self.j2 as i128).rem_euclid(m);
        MonomialElement {
            p: self.p,
            j1: (self.p - self.j1) % self.p,
            j2: j2 as u64,
            n: -self.n,
        }
    }

    pub fn pow(&self, k: i64) -> MonomialElement {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(MonomialElement { j1: 0, j2: 0, n: 0, ..*self }, |acc, _| {
            acc.compose(&base).unwrap()
        })
    }

    pub fn commutator(&self, other: &MonomialElement) -> Result<MonomialElement, Error> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    /// Projection onto the `Z` factor.
    pub fn degree(&self) -> i64 {
        self.n
    }
}

/// Relation checks for the monomial model at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRelations {
    pub p: u64,
    pub commutator_is_beta: bool,
    pub beta_commutes_with_sigma: bool,
    pub beta_commutes_with_alpha: bool,
    pub alpha_has_order_p: bool,
}

impl MonomialRelations {
    pub fn all_hold(&self) -> bool {
        self.commutator_is_beta
            && self.beta_commutes_with_sigma
            && self.beta_commutes_with_alpha
            && self.alpha_has_order_p
    }
}

pub fn monomial_relations(p: u64) -> Result<MonomialRelations, Error> {
    let sigma = MonomialElement::sigma(p)?;
    let alpha = MonomialElement::alpha(p)?;
    let beta = MonomialElement::beta(p)?;
    let alpha_has_order_p = alpha.pow(p as i64).is_identity()
        && (1..p as i64).all(|k| !alpha.pow(k).is_identity());
    Ok(MonomialRelations {
        p,
        commutator_is_beta: sigma.commutator(&alpha)? == beta,
        beta_commutes_with_sigma: beta.commutator(&sigma)?.is_identity(),
        beta_commutes_with_alpha: beta.commutator(&alpha)?.is_identity(),
        alpha_has_order_p,
    })
}

/// Unitriangular `[[1, a, c], [0, 1, b], [0, 0, 1]]` over `Z/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisenbergElement {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl HeisenbergElement {
    pub fn identity() -> Self {
        HeisenbergElement { a: 0, b: 0, c: 0 }
    }

    pub fn mul(&self, other: &HeisenbergElement, p: u64) -> HeisenbergElement {
        HeisenbergElement {
            a: (self.a + other.a) % p,
            b: (self.b + other.b) % p,
            c: (self.c + other.c + self.a * other.b) % p,
        }
    }

    pub fn inverse(&self, p: u64) -> HeisenbergElement {
        let a = (p - self.a) % p;
        let b = (p - self.b) % p;
        // (a,b,c)(-a,-b,c') = (0,0,c + c' - ab)
        let c = (p * p + self.a * self.b - self.c) % p;
        HeisenbergElement { a, b, c }
    }

    pub fn all(p: u64) -> impl Iterator<Item = HeisenbergElement> {
        (0..p).flat_map(move |a| {
            (0..p).flat_map(move |b| (0..p).map(move |c| HeisenbergElement { a, b, c }))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupProfile {
    pub p: u64,
    pub order: u64,
    pub num_classes: u64,
    pub center_size: u64,
    pub derived_size: u64,
    pub derived_equals_center: bool,
    pub num_linear: u64,
    pub irrep_dims: Vec<u64>,
    /// Number of partial multisets visited by the uniqueness search.
    pub search_transcript_len: u64,
    pub search_solutions: u64,
}

impl GroupProfile {
    pub fn consistent(&self) -> bool {
        self.irrep_dims.iter().map(|d| d * d).sum::<u64>() == self.order
            && self.irrep_dims.len() as u64 == self.num_classes
            && self.irrep_dims.iter().filter(|&&d| d == 1).count() as u64 == self.num_linear
            && self.search_solutions == 1
    }
}

/// Enumerates all multisets (nondecreasing sequences) of `len` values from
/// `candidates` whose squares sum to `target`. Returns the solutions and the
/// number of search nodes visited.
fn square_sum_multisets(candidates: &[u64], len: usize, target: u64) -> (Vec<Vec<u64>>, u64) {
    fn go(
        candidates: &[u64],
        start: usize,
        left: usize,
        target: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        nodes: &mut u64,
    ) {
        *nodes += 1;
        if left == 0 {
            if target == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for (i, &d) in candidates.iter().enumerate().skip(start) {
            if d * d > target {
                break;
            }
            cur.push(d);
            go(candidates, i, left - 1, target - d * d, cur, out, nodes);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut nodes = 0;
    go(candidates, 0, len, target, &mut Vec::new(), &mut out, &mut nodes);
    (out, nodes)
}

pub fn heisenberg_profile(p: u64) -> Result<GroupProfile, Error> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::UnsupportedPrime(p));
    }
    let elems: Vec<HeisenbergElement> = HeisenbergElement::all(p).collect();
    let order = elems.len() as u64;

    let mut seen = HashSet::new();
    let mut num_classes = 0;
    for &x in &elems {
        if seen.contains(&x) {
            continue;
        }
        num_classes += 1;
        for h in &elems {
            seen.insert(h.mul(&x, p).mul(&h.inverse(p), p));
        }
    }

    let center: BTreeSet<_> = elems
        .iter()
        .copied()
        .filter(|x| elems.iter().all(|y| x.mul(y, p) == y.mul(x, p)))
        .collect();

    let mut derived: BTreeSet<_> = elems
        .iter()
        .flat_map(|x| {
            elems
                .iter()
                .map(move |y| x.mul(y, p).mul(&x.inverse(p), p).mul(&y.inverse(p), p))
        })
        .collect();
    loop {
        let products: BTreeSet<_> = derived
            .iter()
            .flat_map(|x| derived.iter().map(move |y| x.mul(y, p)))
            .collect();
        if products.is_subset(&derived) {
            break;
        }
        derived.extend(products);
    }

    let derived_size = derived.len() as u64;
    let num_linear = order / derived_size;
    let candidates: Vec<u64> = (1..)
        .map(|k| p.pow(k))
        .take_while(|d| d * d <= order)
        .collect();
    let (solutions, nodes) = square_sum_multisets(
        &candidates,
        (num_classes - num_linear) as usize,
        order - num_linear,
    );
    let mut irrep_dims = vec![1; num_linear as usize];
    if let Some(sol) = solutions.first() {
        irrep_dims.extend(sol);
    }
    Ok(GroupProfile {
        p,
        order,
        num_classes,
        center_size: center.len() as u64,
        derived_size,
        derived_equals_center: derived == center,
        num_linear,
        irrep_dims,
        search_transcript_len: nodes,
        search_solutions: solutions.len() as u64,
    })
}

/// Minimal dimension of an irreducible representation that is nontrivial on
/// the center. Linear characters kill the derived subgroup, which equals the
/// center, so only the nonlinear irreducibles count, and the profile forces
/// each of them to have dimension `p`.
pub fn birkhoff_min_dim(p: u64) -> Result<u64, Error> {
    let profile = heisenberg_profile(p)?;
    let fail = |why: &str| Err(Error::Precondition(format!("profile for p = {p}: {why}")));
    if !profile.consistent() {
        return fail("inconsistent or non-unique dimension solution");
    }
    if !profile.derived_equals_center {
        return fail("derived subgroup differs from the center");
    }
    let nonlinear: Vec<u64> = profile.irrep_dims.iter().copied().filter(|&d| d > 1).collect();
    match nonlinear.iter().min() {
        Some(&d) if nonlinear.iter().all(|&e| e == d) => Ok(d),
        Some(_) => fail("nonlinear irreducibles of different dimensions"),
        None => fail("no nonlinear irreducible"),
    }
}
