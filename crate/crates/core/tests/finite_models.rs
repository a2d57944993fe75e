use cremona_core::finite_obstruction::monomial_relations;
use cremona_core::{birkhoff_min_dim, heisenberg_profile, MonomialElement};
use rand::Rng;

fn all_slice(p: u64) -> Vec<MonomialElement> {
    let mut out = Vec::new();
    for j1 in 0..p as i64 {
        for j2 in 0..p as i64 {
            for n in -3..=3 {
                out.push(MonomialElement::new(p, j1, j2, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn monomial_group_axioms_exhaustive() {
    for p in [2, 3, 5, 7] {
        let elems = all_slice(p);
        let id = MonomialElement::identity(p).unwrap();
        // associativity on the full slice for p <= 3, on a stride for larger p
        let stride = if p <= 3 { 1 } else { 7 };
        for a in elems.iter().step_by(stride) {
            assert_eq!(a.compose(&id).unwrap(), *a);
            assert_eq!(id.compose(a).unwrap(), *a);
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            assert!(a.inverse().compose(a).unwrap().is_identity());
            for b in elems.iter().step_by(stride) {
                for c in elems.iter().step_by(stride * 3) {
                    let l = a.compose(b).unwrap().compose(c).unwrap();
                    let r = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn monomial_random_checks_large_primes() {
    let primes: Vec<u64> = (2..=97u64).filter(|&p| (2..p).all(|d| p % d != 0)).collect();
    let mut rng = cremona_core::sampling::rng(31);
    for &p in &primes {
        for _ in 0..50 {
            let mut pick = || {
                MonomialElement::new(
                    p,
                    rng.gen_range(0..p as i64),
                    rng.gen_range(0..p as i64),
                    rng.gen_range(-20..=20),
                )
                .unwrap()
            };
            let (a, b, c) = (pick(), pick(), pick());
            assert_eq!(
                a.compose(&b).unwrap().compose(&c).unwrap(),
                a.compose(&b.compose(&c).unwrap()).unwrap()
            );
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            // projection to Z is a homomorphism
            assert_eq!(a.compose(&b).unwrap().degree(), a.degree() + b.degree());
            // its kernel (n = 0) is abelian
            let ka = MonomialElement::new(p, a.parts().0 as i64, a.parts().1 as i64, 0).unwrap();
            let kb = MonomialElement::new(p, b.parts().0 as i64, b.parts().1 as i64, 0).unwrap();
            assert!(ka.commutator(&kb).unwrap().is_identity());
        }
        assert!(monomial_relations(p).unwrap().all_hold(), "p={p}");
    }
}

#[test]
fn heisenberg_profiles_by_enumeration() {
    for p in [2u64, 3, 5, 7] {
        let prof = heisenberg_profile(p).unwrap();
        assert_eq!(prof.order, p * p * p);
        assert_eq!(prof.num_classes, p * p + p - 1);
        assert_eq!(prof.center_size, p);
        assert_eq!(prof.derived_size, p);
        assert!(prof.derived_equals_center);
        assert_eq!(prof.num_linear, p * p);
        let mut expected = vec![1; (p * p) as usize];
        expected.extend(vec![p; (p - 1) as usize]);
        assert_eq!(prof.irrep_dims, expected);
        assert_eq!(prof.irrep_dims.iter().map(|d| d * d).sum::<u64>(), prof.order);
        assert_eq!(prof.search_solutions, 1);
        assert!(prof.search_transcript_len > 0);
        assert!(prof.consistent());
        assert_eq!(birkhoff_min_dim(p).unwrap(), p);
    }
}

#[test]
fn profile_serializes() {
    let prof = heisenberg_profile(3).unwrap();
    let v = serde_json::to_value(&prof).unwrap();
    assert_eq!(v["num_classes"], 11);
    assert_eq!(v["irrep_dims"].as_array().unwrap().len(), 11);
}
