//! The verification suites behind `verify-all`, one per criterion.
//!
//! Every suite is deterministic given the seed. Suites that need several
//! independent streams derive them as `seed + k`.

use std::time::Instant;

use cremona_core::certificates::gamma_class_with;
use cremona_core::elementary::{check_representation, matrix_of, recover};
use cremona_core::finite_obstruction::monomial_relations;
use cremona_core::sampling::{self, Rng64};
use cremona_core::{
    birkhoff_min_dim, derived_length_g, heisenberg_profile, linearize, min_dim_lower_bound,
    ElementaryAut, JonqElement, Order, Poly, Rat, RatFunc,
};
use num_bigint::BigInt;
use rand::Rng;

pub const RANDOM_INSTANCES: usize = 1000;

#[derive(Clone, Debug)]
pub struct Criterion {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn finish(name: &'static str, failures: Vec<String>, start: Instant, summary: String) -> Criterion {
    let ms = start.elapsed().as_millis();
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{summary} ({ms} ms)")
    } else {
        format!("{} ({ms} ms)", failures.join("; "))
    };
    Criterion { name, passed, detail }
}

pub fn nilpotency(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut factorial = BigInt::from(1);
    for n in 1..=8usize {
        factorial *= n;
        let sign: i32 = if n % 2 == 0 { 1 } else { -1 };
        let expected = JonqElement::alpha_poly(Poly::constant(Rat::from_bigint(&factorial * sign)));
        match gamma_class_with(n, seed, 100) {
            Ok(cert) => {
                if cert.claimed_class != n + 1 {
                    failures.push(format!("n={n}: class {}", cert.claimed_class));
                }
                if cert.lower_witness.value != expected {
                    failures.push(format!("n={n}: lower witness {}", cert.lower_witness.value));
                }
                if !cert.vanishing_witness.value.is_identity() {
                    failures.push(format!("n={n}: vanishing witness {}", cert.vanishing_witness.value));
                }
                let outcome = cert.check();
                failures.extend(outcome.failures.into_iter().map(|f| format!("n={n}: {f}")));
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    finish("nilpotency certificates n=1..8", failures, start, "classes 2..9, witnesses exact".into())
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Delta^k X^n` expanded directly as
/// `(-1)^k sum_i (-1)^i C(k, i) (X - i)^n`, with `(X - i)^n` itself expanded
/// by the binomial theorem. Shares no code with the polynomial kernel.
pub fn delta_power_oracle(n: usize, k: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for i in 0..=k {
        let outer = binomial(k, i) * if (k + i).is_multiple_of(2) { 1 } else { -1 };
        // (X - i)^n = sum_j C(n, j) X^j (-i)^(n - j)
        for (j, c) in coeffs.iter_mut().enumerate() {
            let base = BigInt::from(-(i as i64));
            *c += &outer * binomial(n, j) * num_traits::pow(base, n - j);
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == BigInt::from(0)) {
        coeffs.pop();
    }
    coeffs
}

pub fn delta_oracle() -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut factorial = BigInt::from(1);
    for n in 0..=20usize {
        if n > 0 {
            factorial *= n;
        }
        let kernel = Poly::monomial(Rat::one(), n).delta_iter(n);
        let oracle = delta_power_oracle(n, n);
        let expected: BigInt = &factorial * if n % 2 == 0 { 1 } else { -1 };
        if oracle != vec![expected.clone()] || kernel != Poly::constant(Rat::from_bigint(expected)) {
            failures.push(format!("n={n}: kernel {kernel}"));
        }
    }
    finish("delta operator oracle n<=20", failures, start, "kernel matches binomial expansion".into())
}

pub fn relations(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut rng = sampling::rng(seed);
    let mut bad = [0usize; 5];
    for _ in 0..RANDOM_INSTANCES {
        let (f, f2) = (sampling::ratfunc(&mut rng), sampling::ratfunc(&mut rng));
        let (g, g2) = (sampling::nonzero_ratfunc(&mut rng), sampling::nonzero_ratfunc(&mut rng));
        let t = sampling::small_rat(&mut rng);
        let alpha = JonqElement::alpha;
        let mu = |g: &RatFunc| JonqElement::mu(g.clone()).unwrap();
        let s = JonqElement::translation(t.clone());
        let checks = [
            alpha(&f + &f2) == alpha(f.clone()).compose(&alpha(f2.clone())),
            mu(&(&g * &g2)) == mu(&g).compose(&mu(&g2)),
            mu(&g).compose(&alpha(f.clone())).compose(&mu(&g).inverse()) == alpha(&f * &g),
            s.compose(&alpha(f.clone())).compose(&s.inverse()) == alpha(f.shift(&t)),
            s.compose(&mu(&g)).compose(&s.inverse()) == mu(&g.shift(&t)),
        ];
        for (b, ok) in bad.iter_mut().zip(checks) {
            *b += usize::from(!ok);
        }
    }
    let names = ["alpha additivity", "mu multiplicativity", "mu-alpha conjugation", "s-alpha shift", "s-mu shift"];
    let failures = names
        .iter()
        .zip(bad)
        .filter(|(_, b)| *b > 0)
        .map(|(n, b)| format!("{n}: {b} failures"))
        .collect();
    finish("five relations x1000", failures, start, format!("{} instances each", RANDOM_INSTANCES))
}

pub fn group_axioms(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = sampling::rng(seed);
    let id = JonqElement::identity();
    let mut bad = 0;
    for _ in 0..RANDOM_INSTANCES {
        let (a, b, c) = (
            sampling::jonq_element(&mut rng),
            sampling::jonq_element(&mut rng),
            sampling::jonq_element(&mut rng),
        );
        let ok = a.compose(&b).compose(&c) == a.compose(&b.compose(&c))
            && a.compose(&id) == a
            && id.compose(&a) == a
            && a.compose(&a.inverse()).is_identity()
            && a.inverse().compose(&a).is_identity();
        bad += usize::from(!ok);
    }
    if bad > 0 {
        failures.push(format!("jonquieres: {bad} failing triples"));
    }
    let mut rng = sampling::rng(seed + 1);
    let id = ElementaryAut::identity();
    let mut bad = 0;
    for _ in 0..RANDOM_INSTANCES {
        let (a, b, c) = (
            sampling::elementary(&mut rng, 5),
            sampling::elementary(&mut rng, 5),
            sampling::elementary(&mut rng, 5),
        );
        let ok = a.compose(&b).compose(&c) == a.compose(&b.compose(&c))
            && a.compose(&id) == a
            && id.compose(&a) == a
            && a.compose(&a.inverse()).is_identity()
            && a.inverse().compose(&a).is_identity();
        bad += usize::from(!ok);
    }
    if bad > 0 {
        failures.push(format!("elementary: {bad} failing triples"));
    }
    finish("group axioms x1000", failures, start, "jonquieres and elementary triples".into())
}

pub fn derived_length(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    match derived_length_g(seed, RANDOM_INSTANCES) {
        Ok(cert) => {
            let expected = RatFunc::new(Poly::from_ints(&[1, -1]), Poly::x()).unwrap();
            let v = &cert.lower_witness.value;
            if cert.claimed_length != 3 {
                failures.push(format!("claimed length {}", cert.claimed_length));
            }
            if *v != JonqElement::alpha(expected) || v.is_identity() {
                failures.push(format!("witness {v}"));
            }
            if cert.upper_checks.len() != 3 || !cert.upper_checks.iter().all(|c| c.all_passed) {
                failures.push("layer checks".into());
            }
            failures.extend(cert.check().failures);
        }
        Err(e) => failures.push(e.to_string()),
    }
    finish(
        "derived length 3",
        failures,
        start,
        "[[s(1),m(X)],[m(X),a(1)]] = alpha(-(X - 1)/X), 3 layers x1000".into(),
    )
}

fn torsion_sample(rng: &mut Rng64) -> JonqElement {
    let t = Rat::from_int(rng.gen_range(-3..=3));
    JonqElement::new(t, sampling::integer_root_product(rng), sampling::ratfunc(rng)).unwrap()
}

pub fn torsion(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    let minus_one = JonqElement::mu(RatFunc::constant(Rat::from_int(-1))).unwrap();
    if minus_one.order() != Order::Finite(2) {
        failures.push(format!("order(mu(-1)) = {}", minus_one.order()));
    }
    if JonqElement::translation(Rat::one()).order() != Order::Infinite {
        failures.push("order(s(1)) finite".into());
    }
    let mut rng = sampling::rng(seed);
    for _ in 0..200 {
        let f = sampling::ratfunc(&mut rng);
        if !f.is_zero() && JonqElement::alpha(f.clone()).order() != Order::Infinite {
            failures.push(format!("order(alpha({f})) finite"));
        }
        let e = torsion_sample(&mut rng);
        if e.order() != Order::Infinite {
            failures.push(format!("{e} has order {}", e.order()));
        }
    }
    finish("torsion procedure", failures, start, "mu(-1) order 2, 200 samples infinite".into())
}

pub fn finite_obstruction() -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    for p in [2u64, 3, 5] {
        match heisenberg_profile(p) {
            Ok(prof) => {
                let mut dims = vec![1; (p * p) as usize];
                dims.extend(vec![p; (p - 1) as usize]);
                if prof.num_classes != p * p + p - 1 || prof.irrep_dims != dims || prof.search_solutions != 1 {
                    failures.push(format!("p={p}: profile {prof:?}"));
                }
                if !prof.consistent() {
                    failures.push(format!("p={p}: inconsistent profile"));
                }
            }
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
        if birkhoff_min_dim(p).ok() != Some(p) {
            failures.push(format!("p={p}: birkhoff_min_dim"));
        }
    }
    for p in (2..=97u64).filter(|&p| (2..p).all(|d| p % d != 0)) {
        match monomial_relations(p) {
            Ok(r) if r.all_hold() => {}
            Ok(r) => failures.push(format!("p={p}: {r:?}")),
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
    }
    finish(
        "finite obstruction",
        failures,
        start,
        "Heisenberg p=2,3,5 profiles, monomial relations p<=97".into(),
    )
}

pub fn linearization(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = sampling::rng(seed);
    let (mut hom_bad, mut rec_bad, mut distinct) = (0, 0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let a = sampling::elementary(&mut rng, n);
        let b = sampling::elementary(&mut rng, n);
        let (ma, mb) = (matrix_of(&a, n), matrix_of(&b, n));
        if matrix_of(&a.compose(&b), n) != &ma * &mb {
            hom_bad += 1;
        }
        if a != b {
            distinct += 1;
            if ma == mb || recover(&ma).as_ref() != Some(&a) || recover(&mb).as_ref() != Some(&b) {
                rec_bad += 1;
            }
        }
    }
    if hom_bad > 0 {
        failures.push(format!("homomorphism: {hom_bad} failing pairs"));
    }
    if rec_bad > 0 || distinct < 500 {
        failures.push(format!("recovery: {rec_bad} failures over {distinct} distinct pairs"));
    }

    // negative control: one corrupted generator matrix must be caught
    let gens = vec![
        ElementaryAut::new(Rat::one(), Rat::one(), Rat::zero(), Poly::monomial(Rat::one(), 2)).unwrap(),
        ElementaryAut::new(Rat::from_int(2), Rat::one(), Rat::one(), Poly::zero()).unwrap(),
    ];
    match linearize(&gens) {
        Ok(mut lin) => {
            let honest = check_representation(&gens, &lin, 50, seed).map(|c| c.passed());
            let entry = lin.matrices[0].get(1, 0) + &Rat::one();
            lin.matrices[0].set(1, 0, entry);
            let corrupted = check_representation(&gens, &lin, 50, seed).map(|c| c.passed());
            if honest != Ok(true) {
                failures.push("honest linearization rejected".into());
            }
            if corrupted != Ok(false) {
                failures.push("corrupted matrix accepted".into());
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    finish(
        "linearization",
        failures,
        start,
        "500 pairs homomorphic and recoverable, negative control rejected".into(),
    )
}

pub fn dimension_bound() -> Criterion {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in 1..=100u64 {
        let brute = (1..=c).find(|d| d * d >= c);
        if min_dim_lower_bound(c).ok() != brute {
            failures.push(format!("c={c}"));
        }
    }
    finish("dimension bound c<=100", failures, start, "matches brute force".into())
}

/// Criteria 1 to 9, run concurrently and reported in order. The CLI
/// exit-code criterion is exercised from outside.
pub fn run_all(seed: u64) -> Vec<Criterion> {
    let suites: Vec<Box<dyn Fn() -> Criterion + Send + Sync>> = vec![
        Box::new(move || nilpotency(seed)),
        Box::new(delta_oracle),
        Box::new(move || relations(seed)),
        Box::new(move || group_axioms(seed)),
        Box::new(move || derived_length(seed)),
        Box::new(move || torsion(seed)),
        Box::new(finite_obstruction),
        Box::new(move || linearization(seed)),
        Box::new(dimension_bound),
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|f| scope.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    })
}
