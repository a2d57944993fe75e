//! Seeded random instances for the randomized identity checks.
//!
//! Bounds: polynomial degrees at most [`MAX_DEGREE`], coefficient numerators
//! and denominators at most [`MAX_HEIGHT`] in absolute value, translation
//! amounts in `[-3, 3]` with denominators up to 3. All randomness flows from
//! a `ChaCha8Rng` seeded with the caller's `u64`, so every check is
//! reproducible from its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elementary::ElementaryAut;
use crate::jonquieres::JonqElement;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;

pub const DEFAULT_SEED: u64 = 42;
pub const MAX_DEGREE: usize = 4;
pub const MAX_HEIGHT: i64 = 20;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(rng: &mut Rng64) -> Rat {
    let num = rng.gen_range(-MAX_HEIGHT..=MAX_HEIGHT);
    let den = rng.gen_range(1..=MAX_HEIGHT);
    Rat::new(num, den).unwrap()
}

pub fn nonzero_rat(rng: &mut Rng64) -> Rat {
    loop {
        let r = rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A small translation amount: `p/q` with `|p| <= 3q`, `q <= 3`.
pub fn small_rat(rng: &mut Rng64) -> Rat {
    let den = rng.gen_range(1..=3);
    let num = rng.gen_range(-3 * den..=3 * den);
    Rat::new(num, den).unwrap()
}

pub fn poly(rng: &mut Rng64, max_degree: usize) -> Poly {
    let deg = rng.gen_range(0..=max_degree);
    Poly::from_coeffs((0..=deg).map(|_| rat(rng)).collect())
}

pub fn nonzero_poly(rng: &mut Rng64, max_degree: usize) -> Poly {
    loop {
        let p = poly(rng, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial, or with probability one half a proper quotient.
pub fn ratfunc(rng: &mut Rng64) -> RatFunc {
    let num = poly(rng, MAX_DEGREE);
    if rng.gen_bool(0.5) {
        RatFunc::from_poly(num)
    } else {
        let den = nonzero_poly(rng, 2);
        RatFunc::new(num, den).unwrap()
    }
}

pub fn nonzero_ratfunc(rng: &mut Rng64) -> RatFunc {
    loop {
        let f = ratfunc(rng);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn jonq_element(rng: &mut Rng64) -> JonqElement {
    JonqElement::new(small_rat(rng), nonzero_ratfunc(rng), ratfunc(rng)).unwrap()
}

/// `prod (X - i)^{k_i}` over a few integer roots `i in [-4, 4]`,
/// exponents in `[-2, 2]`, with at least one nonzero exponent.
pub fn integer_root_product(rng: &mut Rng64) -> RatFunc {
    loop {
        let mut num = Poly::one();
        let mut den = Poly::one();
        let mut roots: Vec<i64> = (-4..=4).collect();
        roots.shuffle(rng);
        let count = rng.gen_range(1..=3);
        for &r in &roots[..count] {
            let k = rng.gen_range(-2i32..=2);
            let lin = Poly::linear_root(Rat::from_int(r));
            if k > 0 {
                num = &num * &lin.pow(k as u32);
            } else if k < 0 {
                den = &den * &lin.pow((-k) as u32);
            }
        }
        let g = RatFunc::new(num, den).unwrap();
        if !g.is_one() {
            return g;
        }
    }
}

pub fn elementary(rng: &mut Rng64, max_degree: usize) -> ElementaryAut {
    ElementaryAut::new(
        nonzero_rat(rng),
        nonzero_rat(rng),
        rat(rng),
        poly(rng, max_degree),
    )
    .unwrap()
}
