use cremona_core::sampling;
use cremona_core::{
    iterated_commutator, parse_word, Assignment, JonqElement, Letter, Order, Poly, Rat, RatFunc, Word,
};
use proptest::prelude::*;
use rand::Rng;

fn x_pow(n: usize) -> Poly {
    Poly::monomial(Rat::one(), n)
}

#[test]
fn jonquieres_group_axioms() {
    let mut rng = sampling::rng(21);
    let id = JonqElement::identity();
    for _ in 0..1000 {
        let a = sampling::jonq_element(&mut rng);
        let b = sampling::jonq_element(&mut rng);
        let c = sampling::jonq_element(&mut rng);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&id), a);
        assert_eq!(id.compose(&a), a);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }
}

#[test]
fn five_relations() {
    let mut rng = sampling::rng(22);
    for _ in 0..1000 {
        let f = sampling::ratfunc(&mut rng);
        let f2 = sampling::ratfunc(&mut rng);
        let g = sampling::nonzero_ratfunc(&mut rng);
        let g2 = sampling::nonzero_ratfunc(&mut rng);
        let t = sampling::small_rat(&mut rng);
        let alpha = |f: &RatFunc| JonqElement::alpha(f.clone());
        let mu = |g: &RatFunc| JonqElement::mu(g.clone()).unwrap();
        let s = JonqElement::translation(t.clone());
        assert_eq!(alpha(&(&f + &f2)), alpha(&f).compose(&alpha(&f2)));
        assert_eq!(mu(&(&g * &g2)), mu(&g).compose(&mu(&g2)));
        assert_eq!(mu(&g).compose(&alpha(&f)).compose(&mu(&g).inverse()), alpha(&(&f * &g)));
        assert_eq!(s.compose(&alpha(&f)).compose(&s.inverse()), alpha(&f.shift(&t)));
        assert_eq!(s.compose(&mu(&g)).compose(&s.inverse()), mu(&g.shift(&t)));
    }
}

#[test]
fn apply_is_an_action() {
    let mut rng = sampling::rng(23);
    let mut checked = 0;
    for _ in 0..500 {
        let a = sampling::jonq_element(&mut rng);
        let b = sampling::jonq_element(&mut rng);
        let p = (sampling::rat(&mut rng), sampling::rat(&mut rng));
        let Ok(bp) = b.apply((&p.0, &p.1)) else { continue };
        let Ok(lhs) = a.apply((&bp.0, &bp.1)) else { continue };
        if let Ok(rhs) = a.compose(&b).apply((&p.0, &p.1)) {
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }
    assert!(checked > 400, "only {checked} points were defined");
}

#[test]
fn finite_orders_are_exact() {
    let mut rng = sampling::rng(24);
    let minus_one = RatFunc::constant(Rat::from_int(-1));
    for _ in 0..300 {
        let e = match rng.gen_range(0..3) {
            0 => JonqElement::new(Rat::zero(), minus_one.clone(), sampling::ratfunc(&mut rng)).unwrap(),
            1 => sampling::jonq_element(&mut rng),
            _ => JonqElement::identity(),
        };
        match e.order() {
            Order::Finite(k) => {
                assert!(e.pow(k as i64).is_identity());
                assert!((1..k).all(|j| !e.pow(j as i64).is_identity()));
            }
            Order::Infinite => {
                assert!((1..=6).all(|j| !e.pow(j).is_identity()));
            }
        }
    }
}

#[test]
fn integer_root_family_is_torsion_free() {
    let mut rng = sampling::rng(25);
    for _ in 0..200 {
        let g = sampling::integer_root_product(&mut rng);
        let e = JonqElement::new(Rat::zero(), g, sampling::ratfunc(&mut rng)).unwrap();
        assert_eq!(e.order(), Order::Infinite);
        assert!((1..=4).all(|k| !e.pow(k).is_identity()));
    }
}

const GENS: [&str; 4] = ["s(1)", "a(X^2)", "m(X)", "m((X - 1)/(X + 2))"];

fn random_word(rng: &mut sampling::Rng64) -> Word {
    let len = rng.gen_range(0..10);
    Word::from_letters(
        (0..len)
            .map(|_| Letter {
                gen: GENS[rng.gen_range(0..GENS.len())].to_string(),
                exp: rng.gen_range(-2..=2),
            })
            .collect(),
    )
}

fn env() -> Assignment {
    parse_word(&GENS.join("*")).unwrap().1
}

#[test]
fn reduction_preserves_value() {
    let env = env();
    let mut rng = sampling::rng(26);
    for _ in 0..1000 {
        let w = random_word(&mut rng);
        let r = w.reduce();
        assert!(r.is_reduced());
        assert_eq!(r.reduce(), r);
        assert_eq!(r.evaluate(&env).unwrap(), w.evaluate(&env).unwrap());
    }
}

#[test]
fn evaluation_is_a_homomorphism() {
    let env = env();
    let mut rng = sampling::rng(27);
    for _ in 0..300 {
        let u = random_word(&mut rng);
        let v = random_word(&mut rng);
        let lhs = u.mul(&v).evaluate(&env).unwrap();
        let rhs = u.evaluate(&env).unwrap().compose(&v.evaluate(&env).unwrap());
        assert_eq!(lhs, rhs);
        assert!(u.mul(&u.inverse()).is_empty());
    }
}

#[test]
fn iterated_commutators_agree_with_delta() {
    let (s, a) = (Word::gen("s"), Word::gen("a"));
    for n in 1..=10 {
        let env = Assignment::new()
            .with("s", JonqElement::translation(Rat::one()))
            .with("a", JonqElement::alpha_poly(x_pow(n)));
        for k in 1..=n {
            let value = iterated_commutator(&s, &a, k).evaluate(&env).unwrap();
            assert_eq!(value, JonqElement::alpha_poly(x_pow(n).delta_iter(k)), "n={n} k={k}");
        }
    }
}

#[test]
fn json_round_trip() {
    let mut rng = sampling::rng(28);
    for _ in 0..200 {
        let e = sampling::jonq_element(&mut rng);
        let text = e.to_json().to_string();
        let back = JonqElement::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, e);
    }
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..GENS.len(), -3i64..=3), 0..8).prop_map(|ls| {
        Word::from_letters(
            ls.into_iter()
                .map(|(g, exp)| Letter {
                    gen: GENS[g].to_string(),
                    exp,
                })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn printed_words_parse_back(w in word_strategy()) {
        let env = env();
        let r = w.reduce();
        let (parsed, bindings) = parse_word(&r.to_string()).unwrap();
        prop_assert_eq!(&parsed, &r);
        prop_assert_eq!(parsed.evaluate(&bindings).unwrap(), w.evaluate(&env).unwrap());
    }
}
