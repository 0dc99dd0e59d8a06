mod support;

use proptest::prelude::*;
use support::{build, raw_poly, ring};
use workbench_core::{Budget, Field, GroebnerBasis, Ideal, MonomialOrder, Poly};

const Q: Field = Field::Rationals;

fn budget() -> Budget<'static> {
    Budget::pairs(400)
}

fn gens(raws: &[Vec<(Vec<u16>, workbench_core::Rational)>], field: Field) -> Vec<Poly> {
    let r = ring(3, field);
    raws.iter().map(|a| build(&r, a)).collect()
}

fn small_ideal() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, workbench_core::Rational)>>> {
    prop::collection::vec(raw_poly(3, 3, 3, 5), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(ideal in small_ideal(), a in raw_poly(3, 6, 4, 10)) {
        let g = gens(&ideal, Q);
        let r = g[0].ring().clone();
        let basis = GroebnerBasis::compute(&r, &MonomialOrder::GrevLex, &g, &budget());
        prop_assume!(basis.is_ok());
        let basis = basis.unwrap();
        let f = build(&r, &a);
        let once = basis.normal_form(&f).unwrap();
        prop_assert_eq!(basis.normal_form(&once).unwrap(), once);
    }

    #[test]
    fn membership_is_closed(ideal in small_ideal(), cs in prop::collection::vec(raw_poly(3, 3, 2, 5), 6), r0 in raw_poly(3, 3, 2, 5)) {
        let g = gens(&ideal, Q);
        let r = g[0].ring().clone();
        let basis = GroebnerBasis::compute(&r, &MonomialOrder::GrevLex, &g, &budget());
        prop_assume!(basis.is_ok());
        let basis = basis.unwrap();
        let combo = |off: usize| g.iter().enumerate().fold(Poly::zero(&r), |acc, (i, gi)| &acc + &(&build(&r, &cs[(off + i) % cs.len()]) * gi));
        let (p, q) = (combo(0), combo(3));
        prop_assert!(basis.contains(&p).unwrap());
        prop_assert!(basis.contains(&(&p + &q)).unwrap());
        prop_assert!(basis.contains(&(&build(&r, &r0) * &p)).unwrap());
    }

    #[test]
    fn principal_basis_is_monic_generator(a in raw_poly(3, 5, 4, 10)) {
        let r = ring(3, Q);
        let f = build(&r, &a);
        prop_assume!(!f.is_zero());
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let basis = GroebnerBasis::compute(&r, &order, std::slice::from_ref(&f), &Budget::UNLIMITED).unwrap();
            prop_assert_eq!(basis.polys(), &[f.monic(&order)][..]);
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(ideal in small_ideal(), seed in any::<u64>()) {
        let g = gens(&ideal, Q);
        let r = g[0].ring().clone();
        let base = GroebnerBasis::compute(&r, &MonomialOrder::GrevLex, &g, &budget());
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        let mut shuffled = g.clone();
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = GroebnerBasis::compute(&r, &MonomialOrder::GrevLex, &shuffled, &Budget::UNLIMITED).unwrap();
        prop_assert_eq!(base.polys(), other.polys());
    }
}

#[test]
fn prime_and_rational_verdicts_agree_on_fixtures() {
    let fixtures: &[(&[&str], &[&str])] = &[
        (&["x^2 + y^2 - 1", "x - y"], &["2*y^2 - 1", "x^2 - 1/2", "x*y + z"]),
        (&["x*y - 1"], &["x^2*y^2 - 1", "x", "1"]),
        (&["x^2 - y", "x^3 - z"], &["y^3 - z^2", "x*y - z", "y - z"]),
        (&["x*y", "y*z", "z*x"], &["x*y*z", "x + y", "x^2*y"]),
        (&["x - 1", "y - 2", "x*y - 3"], &["1", "x"]),
    ];
    for (gens_text, probes) in fixtures {
        let mut verdicts = Vec::new();
        for field in [Field::Rationals, Field::Prime(65521)] {
            let r = ring(3, field);
            let g: Vec<Poly> = gens_text.iter().map(|t| Poly::parse(t, &r).unwrap()).collect();
            let ideal = Ideal::grevlex(&r, g).unwrap();
            let v: Vec<bool> = probes.iter().map(|t| ideal.contains(&Poly::parse(t, &r).unwrap(), &Budget::UNLIMITED).unwrap()).collect();
            let dim = ideal.krull_dimension(&Budget::UNLIMITED).unwrap().dimension;
            verdicts.push((v, dim));
        }
        assert_eq!(verdicts[0], verdicts[1], "{gens_text:?}");
    }
}
