#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use workbench_core::{rat, Field, Monomial, Poly, Rational, Ring};

pub fn ring(n: usize, field: Field) -> Arc<Ring> {
    let names: Vec<String> = ["x", "y", "z", "t"].iter().take(n).map(|s| s.to_string()).collect();
    Ring::with_names(&names, field).unwrap()
}

pub fn rational(height: i64) -> impl Strategy<Value = Rational> {
    (-height..=height, 1..=height).prop_map(|(n, d)| rat(n, d))
}

/// Up to `terms` terms, exponents below `max_exp`, in `n` variables.
pub fn raw_poly(n: usize, terms: usize, max_exp: u16, height: i64) -> impl Strategy<Value = Vec<(Vec<u16>, Rational)>> {
    prop::collection::vec((prop::collection::vec(0..max_exp, n), rational(height)), 0..=terms)
}

pub fn build(ring: &Arc<Ring>, raw: &[(Vec<u16>, Rational)]) -> Poly {
    let field = ring.field();
    let terms = raw.iter().map(|(e, c)| (Monomial::from_exponents(e), field.from_rational(c).unwrap()));
    Poly::from_terms(ring, terms.collect::<Vec<_>>())
}
