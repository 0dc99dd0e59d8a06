use proptest::prelude::*;
use workbench_core::charts::{euler_identity_check, quotient_nonzero_check};
use workbench_core::invariants::{fibre_relations_vanish, generating_sets, phi_images, pi_lands_in_delta_symbolically, pi_map, WVPoint};
use workbench_core::quiver::{ArmParams, StarQuiver, Support};
use workbench_core::{rat, Budget, Field, Monomial, Poly, Rational};

fn arms() -> impl Strategy<Value = ArmParams> {
    (2usize..=4, 2usize..=4, 2usize..=4).prop_map(|(a, b, c)| ArmParams::new(a, b, c).unwrap())
}

fn rational(h: i64) -> impl Strategy<Value = Rational> {
    (-h..=h, 1..=h).prop_map(|(n, d)| rat(n, d))
}

fn monomial_of_degree(n: usize, max: u32, picks: &[usize]) -> Monomial {
    let mut e = vec![0u16; n];
    for &i in picks.iter().take(max as usize) {
        e[i % n] += 1;
    }
    Monomial::from_exponents(&e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn weight_zero_iff_balanced(p in arms(), picks in prop::collection::vec(0usize..64, 0..=8), cycle in any::<bool>()) {
        let q = StarQuiver::new(p);
        let n = q.arrows().len();
        let m = if cycle {
            // products of generators give balanced monomials
            let ring = q.arrow_ring(Field::Rationals);
            let tier = generating_sets(&q, &ring).tier(1);
            let f = picks.iter().take(3).fold(Poly::one(&ring), |acc, &i| &acc * &tier[i % tier.len()].1);
            f.terms()[0].0.clone()
        } else {
            monomial_of_degree(n, 8, &picks)
        };
        let zero = q.torus_weight(&m).iter().all(|&w| w == 0);
        prop_assert_eq!(zero, q.is_balanced(&m));
        if cycle {
            prop_assert!(zero);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_sums_to_zero(p in arms()) {
        prop_assert_eq!(StarQuiver::new(p).theta().iter().sum::<i64>(), 0);
    }

    #[test]
    fn adding_an_arrow_never_destabilizes(p in arms(), bits in any::<u64>(), extra in 0usize..64) {
        let q = StarQuiver::new(p);
        let n = q.arrows().len();
        let s = Support::from_bits(n, bits);
        let mut t = s.clone();
        t.0[extra % n] = true;
        if q.is_stable_support(&s) {
            prop_assert!(q.is_stable_support(&t));
        }
    }

    #[test]
    fn invariant_images_have_zero_weight(p in arms()) {
        let q = StarQuiver::new(p);
        let ring = q.arrow_ring(Field::Rationals);
        let sets = generating_sets(&q, &ring);
        let all = sets.tier(1).into_iter().chain(sets.s2.clone()).chain(sets.s3.clone()).chain(phi_images(&q, &ring));
        for (name, f) in all {
            prop_assert!(q.poly_weights(&f).unwrap().iter().flatten().all(|&w| w == 0), "{}", name);
        }
    }

    #[test]
    fn pi_is_consistent_with_fibre_relations(p in arms(), vals in prop::collection::vec(rational(10), 15)) {
        let mut it = vals.into_iter().cycle();
        let beta = [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()];
        let alpha = [1, 2, 3].map(|arm| (0..p.p(arm)).map(|_| it.next().unwrap()).collect::<Vec<_>>());
        let pt = WVPoint { beta, alpha };
        prop_assert!(pi_map(&pt, &p).unwrap().in_delta());
        prop_assert!(fibre_relations_vanish(&pt, &p).unwrap());
        prop_assert!(pi_lands_in_delta_symbolically(&p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_identity(alpha in prop::collection::vec(rational(10), 0..=4)) {
        prop_assert!(euler_identity_check(&alpha));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn cancellation_never_gives_the_unit(alpha in prop::collection::vec(rational(10), 1..=3), beta in prop::collection::vec(rational(10), 0..=2)) {
        prop_assert!(quotient_nonzero_check(&alpha, &beta, &Budget::UNLIMITED).unwrap());
    }
}
