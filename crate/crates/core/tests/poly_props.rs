mod support;

use proptest::prelude::*;
use support::{build, raw_poly, ring};
use workbench_core::{Field, MonomialOrder, Poly};

const Q: Field = Field::Rationals;
const FP: Field = Field::Prime(65521);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(a in raw_poly(3, 6, 4, 20)) {
        let r = ring(3, Q);
        let f = build(&r, &a);
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            prop_assert_eq!(Poly::parse(&f.to_text(&order), &r).unwrap(), f.clone());
        }
        prop_assert_eq!(Poly::parse(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn ring_axioms(a in raw_poly(3, 5, 3, 10), b in raw_poly(3, 5, 3, 10), c in raw_poly(3, 5, 3, 10)) {
        let r = ring(3, Q);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn derivative_is_a_derivation(a in raw_poly(3, 5, 4, 10), b in raw_poly(3, 5, 4, 10), var in 0usize..3) {
        let r = ring(3, Q);
        let (f, g) = (build(&r, &a), build(&r, &b));
        let d = |p: &Poly| p.derivative_index(var);
        prop_assert_eq!(d(&(&f + &g)), &d(&f) + &d(&g));
        prop_assert_eq!(d(&(&f * &g)), &(&d(&f) * &g) + &(&f * &d(&g)));
    }

    #[test]
    fn substitution_is_a_homomorphism(
        a in raw_poly(3, 4, 3, 10),
        b in raw_poly(3, 4, 3, 10),
        images in prop::collection::vec(raw_poly(2, 3, 3, 5), 3),
    ) {
        let r = ring(3, Q);
        let target = ring(2, Q);
        let imgs: Vec<Poly> = images.iter().map(|i| build(&target, i)).collect();
        let (f, g) = (build(&r, &a), build(&r, &b));
        let s = |p: &Poly| p.compose(&target, &imgs).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn reduction_mod_q_commutes(a in raw_poly(3, 5, 3, 10), b in raw_poly(3, 5, 3, 10)) {
        let r = ring(3, Q);
        let rp = ring(3, FP);
        let (f, g) = (build(&r, &a), build(&r, &b));
        let m = |p: &Poly| p.reduce_mod(FP).unwrap();
        let fp = build(&rp, &a);
        prop_assert_eq!(m(&f), fp);
        prop_assert_eq!(m(&(&f * &g)), &m(&f) * &m(&g));
        prop_assert_eq!(m(&(&f + &g)), &m(&f) + &m(&g));
    }
}
