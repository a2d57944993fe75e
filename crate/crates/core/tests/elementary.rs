use cremona_core::elementary::{matrix_of, recover};
use cremona_core::sampling;
use cremona_core::{linearize, linearize_check, Degree, ElementaryAut, Poly, Rat};
use rand::Rng;

#[test]
fn group_axioms() {
    let mut rng = sampling::rng(41);
    let id = ElementaryAut::identity();
    for _ in 0..1000 {
        let a = sampling::elementary(&mut rng, 4);
        let b = sampling::elementary(&mut rng, 4);
        let c = sampling::elementary(&mut rng, 4);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&id), a);
        assert_eq!(id.compose(&a), a);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }
}

#[test]
fn composition_matches_pointwise_action() {
    let act = |e: &ElementaryAut, (x, y): (Rat, Rat)| {
        (&(e.alpha() * &x) + &e.poly().eval(&y), &(e.beta() * &y) + e.c())
    };
    let mut rng = sampling::rng(42);
    for _ in 0..300 {
        let a = sampling::elementary(&mut rng, 4);
        let b = sampling::elementary(&mut rng, 4);
        let pt = (sampling::rat(&mut rng), sampling::rat(&mut rng));
        assert_eq!(act(&a.compose(&b), pt.clone()), act(&a, act(&b, pt)));
    }
}

#[test]
fn affine_projection_is_a_homomorphism_with_shear_kernel() {
    let mut rng = sampling::rng(43);
    for _ in 0..300 {
        let a = sampling::elementary(&mut rng, 4);
        let b = sampling::elementary(&mut rng, 4);
        let (a1, b1, c1) = a.affine_part();
        let (a2, b2, c2) = b.affine_part();
        assert_eq!(a.compose(&b).affine_part(), (&a1 * &a2, &b1 * &b2, &(&b1 * &c2) + &c1));
        let shear = ElementaryAut::new(Rat::one(), Rat::one(), Rat::zero(), sampling::poly(&mut rng, 4)).unwrap();
        let conj = a.compose(&shear).compose(&a.inverse());
        assert_eq!(conj.affine_part(), (Rat::one(), Rat::one(), Rat::zero()));
    }
}

#[test]
fn degree_filtration_is_stable_under_words() {
    let mut rng = sampling::rng(44);
    for _ in 0..100 {
        let n = rng.gen_range(0..=5);
        let gens: Vec<_> = (0..3).map(|_| sampling::elementary(&mut rng, n)).collect();
        let bound = gens.iter().map(ElementaryAut::degree).max().unwrap();
        let mut e = ElementaryAut::identity();
        for _ in 0..10 {
            let g = &gens[rng.gen_range(0..3)];
            e = e.compose(&g.pow(rng.gen_range(-2..=2)));
            assert!(e.degree() <= bound);
        }
    }
}

#[test]
fn matrix_homomorphism_on_random_pairs() {
    let mut rng = sampling::rng(45);
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let a = sampling::elementary(&mut rng, n);
        let b = sampling::elementary(&mut rng, n);
        assert_eq!(matrix_of(&a.compose(&b), n), &matrix_of(&a, n) * &matrix_of(&b, n));
    }
}

#[test]
fn distinct_elements_have_distinct_matrices() {
    let mut rng = sampling::rng(46);
    for _ in 0..500 {
        let a = sampling::elementary(&mut rng, 5);
        let b = sampling::elementary(&mut rng, 5);
        if a == b {
            continue;
        }
        let (ma, mb) = (matrix_of(&a, 5), matrix_of(&b, 5));
        assert_ne!(ma, mb);
        assert_eq!(recover(&ma), Some(a));
    }
}

#[test]
fn gamma_style_generators_linearize() {
    // s_1 and alpha_{X^n} of the Jonquieres group, read as elementary maps
    // with the roles of x and y exchanged: (x, y) -> (x + y^n, y), (x, y + 1).
    for n in 1..=5 {
        let gens = vec![
            ElementaryAut::new(Rat::one(), Rat::one(), Rat::zero(), Poly::monomial(Rat::one(), n)).unwrap(),
            ElementaryAut::new(Rat::one(), Rat::one(), Rat::one(), Poly::zero()).unwrap(),
        ];
        let lin = linearize(&gens).unwrap();
        assert_eq!(lin.degree, n);
        assert!(lin.matrices.iter().all(|m| m.size() == n + 3));
        let check = linearize_check(&gens, 60, 7).unwrap();
        assert!(check.passed(), "{check:?}");
        assert!(gens.iter().all(|g| g.degree() <= Degree::Finite(n)));
    }
}
