use cliffgroups::cyclo::{arith, parse_cyclotomic, ArithOp, Cyclotomic, Rational};
use proptest::prelude::*;

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let conductor = prop::sample::select(vec![1u32, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24]);
    (
        conductor,
        prop::collection::vec((0i64..48, -5i64..=5, 1i64..=4), 1..5),
    )
        .prop_map(|(n, terms)| {
            terms
                .into_iter()
                .fold(Cyclotomic::zero(), |acc, (k, num, den)| {
                    let c = Cyclotomic::from_rational(Rational::new(num, den));
                    acc + Cyclotomic::root_power(n, k).unwrap() * c
                })
        })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-10 && (a.1 - b.1).abs() < 1e-10
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Cyclotomic::zero(), a.clone());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn inverses(a in cyclotomic(), b in cyclotomic()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
            prop_assert!(arith(&b, &a, ArithOp::Div).is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            let q = arith(&b, &a, ArithOp::Div).unwrap();
            prop_assert_eq!(&q * &a, b);
        }
    }

    #[test]
    fn embedding_is_a_homomorphism(a in cyclotomic(), b in cyclotomic()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        prop_assert!(close((&a + &b).to_complex(), (x.0 + y.0, x.1 + y.1)));
        prop_assert!(close((&a * &b).to_complex(), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        prop_assert!(close(a.conj().to_complex(), (x.0, -x.1)));
    }

    #[test]
    fn representation_is_canonical(a in cyclotomic(), b in cyclotomic()) {
        // equal values have equal representations regardless of how they were built
        let d = &(&a + &b) - &b;
        prop_assert_eq!(&d, &a);
        prop_assert_eq!(d.conductor(), a.conductor());
        prop_assert_eq!(parse_cyclotomic(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn galois_automorphisms_respect_arithmetic(a in cyclotomic(), b in cyclotomic(), k in prop::sample::select(vec![1i64, 11, 13, 17, 19, 23, 29, 31, 37, -1])) {
        // k is a unit modulo every conductor in the strategy
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
    }
}

#[test]
fn known_identities() {
    let s2 = Cyclotomic::sqrt2();
    assert_eq!(&s2 * &s2, Cyclotomic::from_int(2));
    let z8 = Cyclotomic::root_of_unity(8).unwrap();
    // ζ8 + ζ8⁻¹ = √2
    assert_eq!(&z8 + &z8.pow(-1), s2);
    let i = Cyclotomic::i();
    assert_eq!(&i * &i, Cyclotomic::from_int(-1));
    // 1 + ζ3 + ζ3² = 0
    let z3 = Cyclotomic::root_of_unity(3).unwrap();
    assert!((&(&Cyclotomic::one() + &z3) + &z3.pow(2)).is_zero());
    assert_eq!(Cyclotomic::sqrt_int(-3), &z3 - &z3.pow(2));
}
