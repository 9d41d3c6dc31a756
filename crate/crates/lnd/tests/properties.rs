//! Property tests for the algebraic invariants: ring axioms, calculus rules,
//! order laws, Groebner normal forms, membership preimages, and the
//! derivation/automorphism identities.

use std::sync::Arc;

use proptest::prelude::*;

use lnd::automorphism::{exp, in_gamma_d};
use lnd::derivation::{Derivation, NilpotencyOutcome};
use lnd::groebner::{buchberger, gcd, lcm, reduce, GbLimits, SubalgebraTester};
use lnd::order::MonomialOrder;
use lnd::parse::parse;
use lnd::poly::{rat_int, Monomial, Polynomial};
use lnd::ring::RingSpec;

fn spec_with_vars(n: usize) -> Arc<RingSpec> {
    let names = ["X", "Y", "Z", "W", "V"];
    RingSpec::new(Vec::<&str>::new(), names[..n].to_vec()).unwrap()
}

fn monomial_strategy(len: usize, degree: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..len, 0..=degree).prop_map(move |slots| {
        let mut exps = vec![0u32; len];
        for s in slots {
            exps[s] += 1;
        }
        Monomial::new(exps)
    })
}

fn poly_strategy(
    spec: Arc<RingSpec>,
    degree: usize,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    let len = spec.len();
    prop::collection::vec((monomial_strategy(len, degree), -4i64..=4), 0..=max_terms)
        .prop_map(move |terms| {
            Polynomial::from_terms(
                &spec,
                terms.into_iter().map(|(m, c)| (m, rat_int(c))),
            )
        })
}

/// Three polynomials over a shared ring with 3 to 5 variables.
fn triple_strategy() -> impl Strategy<Value = (Arc<RingSpec>, Polynomial, Polynomial, Polynomial)> {
    (3usize..=5).prop_flat_map(|n| {
        let spec = spec_with_vars(n);
        (
            Just(spec.clone()),
            poly_strategy(spec.clone(), 4, 4),
            poly_strategy(spec.clone(), 4, 4),
            poly_strategy(spec, 4, 4),
        )
    })
}

mod ring_axioms {
    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn associativity_and_commutativity((_, f, g, h) in triple_strategy()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn distributivity((_, f, g, h) in triple_strategy()) {
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn additive_inverse_is_canonical((_, f, _, _) in triple_strategy()) {
            let sum = &f + &f.neg();
            prop_assert!(sum.is_zero());
            // Canonical form: the term map is literally empty.
            prop_assert_eq!(sum.term_count(), 0);
        }
    }
}

mod calculus {
    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn product_rule((spec, f, g, _) in triple_strategy()) {
            for name in spec.var_names() {
                let lhs = (&f * &g).partial_derivative(name).unwrap();
                let rhs = &(&f.partial_derivative(name).unwrap() * &g)
                    + &(&f * &g.partial_derivative(name).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn multiply_then_divide_round_trips((_, f, g, _) in triple_strategy()) {
            prop_assume!(!g.is_zero());
            let product = &f * &g;
            prop_assert_eq!(product.exact_divide(&g).unwrap(), f);
        }
    }
}

mod orders {
    use super::*;
    use std::cmp::Ordering;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn block_orders_eliminate(
            a in monomial_strategy(5, 5),
            b in monomial_strategy(5, 5),
            cut in 1usize..4,
        ) {
            let ord = MonomialOrder::eliminating(0..cut, 5);
            let touches = |m: &Monomial| m.support().any(|i| i < cut);
            if touches(&a) && !touches(&b) {
                prop_assert_eq!(ord.compare(&a, &b), Ordering::Greater);
            }
            if !touches(&a) && touches(&b) {
                prop_assert_eq!(ord.compare(&a, &b), Ordering::Less);
            }
        }

        #[test]
        fn orders_are_multiplicative(
            a in monomial_strategy(4, 4),
            b in monomial_strategy(4, 4),
            m in monomial_strategy(4, 4),
        ) {
            for ord in [
                MonomialOrder::Lex,
                MonomialOrder::DegRevLex,
                MonomialOrder::eliminating([0, 1], 4),
            ] {
                prop_assert_eq!(ord.compare(&a, &b), ord.compare(&a.mul(&m), &b.mul(&m)));
            }
        }
    }
}

mod groebner_props {
    use super::*;

    fn small_triple() -> impl Strategy<Value = (Arc<RingSpec>, Polynomial, Polynomial, Polynomial)>
    {
        let spec = spec_with_vars(3);
        (
            Just(spec.clone()),
            poly_strategy(spec.clone(), 2, 3),
            poly_strategy(spec.clone(), 2, 3),
            poly_strategy(spec, 3, 3),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduction_is_idempotent((_, g1, g2, f) in small_triple()) {
            let ord = MonomialOrder::DegRevLex;
            let divisors = [g1, g2];
            let r = reduce(&f, &divisors, &ord);
            prop_assert_eq!(reduce(&r, &divisors, &ord), r);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bases_self_certify((_, g1, g2, _) in small_triple()) {
            let gb = buchberger(&[g1, g2], &MonomialOrder::DegRevLex, GbLimits::default()).unwrap();
            prop_assert!(gb.verify());
        }

        #[test]
        fn membership_preimages_are_sound((spec, g1, g2, mix) in small_triple()) {
            prop_assume!(!g1.is_zero() && !g2.is_zero());
            let gens = [g1, g2];
            let tester = SubalgebraTester::new(&gens, &spec, GbLimits::default()).unwrap();
            // A member by construction.
            let query = &(&gens[0] * &gens[1]) + &(&gens[0] + &mix.scale(&rat_int(0)));
            let cert = tester.membership(&query);
            prop_assert!(cert.member);
            let preimage = cert.preimage.unwrap();
            prop_assert_eq!(tester.substitute_preimage(&preimage).unwrap(), query);
            // Whatever the verdict on an arbitrary query, a returned
            // preimage must substitute back exactly.
            let cert = tester.membership(&mix);
            if let Some(preimage) = cert.preimage {
                prop_assert_eq!(tester.substitute_preimage(&preimage).unwrap(), mix);
            }
        }
    }

    fn gcd_pair() -> impl Strategy<Value = (Arc<RingSpec>, Polynomial, Polynomial)> {
        let spec = spec_with_vars(3);
        (
            Just(spec.clone()),
            poly_strategy(spec.clone(), 2, 2),
            poly_strategy(spec, 2, 2),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn gcd_divides_and_recombines((_, f, g) in gcd_pair()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let d = gcd(&f, &g, GbLimits::default()).unwrap();
            prop_assert!(f.exact_divide(&d).is_ok());
            prop_assert!(g.exact_divide(&d).is_ok());
            let l = lcm(&f, &g, GbLimits::default()).unwrap();
            let q = (&f * &g).exact_divide(&(&d * &l)).unwrap();
            prop_assert!(q.is_constant());
            prop_assert!(!q.is_zero());
        }
    }
}

mod derivation_props {
    use super::*;

    fn remark1() -> (Arc<RingSpec>, Derivation) {
        let spec = RingSpec::new(["X"], ["T", "Y", "Z"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("Y".to_string(), parse("X", &spec).unwrap()),
                ("Z".to_string(), parse("Y", &spec).unwrap()),
            ],
        )
        .unwrap();
        (spec, d)
    }

    fn remark1_polys(
        degree: usize,
        terms: usize,
    ) -> impl Strategy<Value = (Arc<RingSpec>, Derivation, Polynomial, Polynomial)> {
        let (spec, d) = remark1();
        (
            Just(spec.clone()),
            Just(d),
            poly_strategy(spec.clone(), degree, terms),
            poly_strategy(spec, degree, terms),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn leibniz_and_linearity((spec, d, f, g) in remark1_polys(4, 4)) {
            let lhs = d.apply(&(&f * &g)).unwrap();
            let rhs = &(&f * &d.apply(&g).unwrap()) + &(&g * &d.apply(&f).unwrap());
            prop_assert_eq!(lhs, rhs);

            // a in A: a polynomial in the base generator only.
            let a = parse("X^2 - 3*X + 1", &spec).unwrap();
            prop_assert_eq!(
                d.apply(&(&a * &f)).unwrap(),
                &a * &d.apply(&f).unwrap()
            );
        }

        #[test]
        fn witnesses_are_minimal((_, d, f, _) in remark1_polys(3, 3)) {
            prop_assume!(!f.is_zero());
            match d.nilpotency_witness(&f, 64) {
                NilpotencyOutcome::Witness(w) => {
                    // Recompute the iterates independently of the search.
                    let mut current = f.clone();
                    for _ in 0..(w.steps - 1) {
                        current = d.apply(&current).unwrap();
                    }
                    prop_assert!(!current.is_zero());
                    prop_assert!(d.apply(&current).unwrap().is_zero());
                }
                NilpotencyOutcome::Unknown { .. } => {
                    return Err(TestCaseError::fail("triangular derivation must certify"));
                }
            }
        }

        #[test]
        fn kernel_is_closed_under_ring_operations((spec, d, f, g) in remark1_polys(2, 2)) {
            // Kernel elements: the {X, T}-supported part of f and a random
            // multiple of the quadratic kernel generator.
            let p = parse("Y^2 - 2*X*Z", &spec).unwrap();
            let xt_part: Vec<(Monomial, lnd::poly::Rational)> = f
                .terms()
                .filter(|(m, _)| m.support().all(|i| i <= 1))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            let ker_f = Polynomial::from_terms(&spec, xt_part);
            let ker_g =
                &p.scale(&g.coefficient(&Monomial::unit(spec.len()))) + &Polynomial::one(&spec);
            prop_assert!(d.apply(&ker_f).unwrap().is_zero());
            prop_assert!(d.apply(&ker_g).unwrap().is_zero());
            let combined = &(&ker_f * &ker_g) + &(&ker_f + &ker_g);
            prop_assert!(d.apply(&combined).unwrap().is_zero());
        }
    }
}

mod automorphism_props {
    use super::*;

    fn remark1_kernel_element(
    ) -> impl Strategy<Value = (Arc<RingSpec>, Derivation, Polynomial)> {
        let spec = RingSpec::new(["X"], ["T", "Y", "Z"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("Y".to_string(), parse("X", &spec).unwrap()),
                ("Z".to_string(), parse("Y", &spec).unwrap()),
            ],
        )
        .unwrap();
        let gens = [
            parse("X", &spec).unwrap(),
            parse("T", &spec).unwrap(),
            parse("Y^2 - 2*X*Z + T", &spec).unwrap(),
        ];
        let pick = prop::collection::vec((0usize..3, -2i64..=2), 1..=2);
        (Just(spec.clone()), Just(d), pick).prop_map(move |(spec, d, picks)| {
            let mut f = Polynomial::zero(&spec);
            for (i, c) in picks {
                f = &f + &gens[i].scale(&rat_int(c));
            }
            (spec, d, f)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn exponentials_are_ring_homomorphisms((spec, d, f) in remark1_kernel_element()) {
            let cert = d.certify_lnd(16).certified().unwrap();
            let phi = exp(&cert, &f).unwrap();
            let g = parse("T + Y*Z", &spec).unwrap();
            let h = parse("Z^2 - X", &spec).unwrap();
            prop_assert_eq!(
                phi.apply(&(&g * &h)).unwrap(),
                &phi.apply(&g).unwrap() * &phi.apply(&h).unwrap()
            );
            // Inverse composition fixes every generator.
            let inv = exp(&cert, &f.neg()).unwrap();
            prop_assert!(phi.compose(&inv).unwrap().is_identity());
        }

        #[test]
        fn gamma_is_stable_under_kernel_fixing_exponentials(
            (spec, d, f) in remark1_kernel_element()
        ) {
            let cert = d.certify_lnd(16).certified().unwrap();
            let coords: Vec<Polynomial> = ["T", "Y", "Z"]
                .iter()
                .map(|n| parse(n, &spec).unwrap())
                .collect();
            prop_assert!(in_gamma_d(&d, &coords, 2, GbLimits::default())
                .unwrap()
                .is_member());
            let phi = exp(&cert, &f).unwrap();
            let moved: Vec<Polynomial> = coords
                .iter()
                .map(|c| phi.apply(c).unwrap())
                .collect();
            prop_assert!(in_gamma_d(&d, &moved, 2, GbLimits::default())
                .unwrap()
                .is_member());
        }
    }
}

/// Reducibility certificates divide every image exactly; on the bundled
/// corpus every derivation is irreducible, so the divisibility check is
/// exercised on a constructed reducible example as well.
#[test]
fn reducibility_certificates_divide_images() {
    let corpus = lnd::rigidity::load_corpus(
        &std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"),
    )
    .unwrap();
    for item in &corpus {
        let cert = item.derivation.is_irreducible(GbLimits::default()).unwrap();
        if !cert.irreducible {
            for (_, image) in item.derivation.images() {
                if !image.is_zero() {
                    assert!(image.exact_divide(&cert.gcd).is_ok());
                }
            }
        }
    }

    let spec = RingSpec::new(["X"], ["Y", "Z"]).unwrap();
    let reducible = Derivation::new(
        &spec,
        [
            ("Y".to_string(), parse("X^2", &spec).unwrap()),
            ("Z".to_string(), parse("X*Y", &spec).unwrap()),
        ],
    )
    .unwrap();
    let cert = reducible.is_irreducible(GbLimits::default()).unwrap();
    assert!(!cert.irreducible);
    for (_, image) in reducible.images() {
        assert!(image.exact_divide(&cert.gcd).is_ok());
    }
}
