//! Sparse exact multivariate polynomials.
//!
//! A [`Poly`] lives in a [`Ring`]: a fixed [`VarTable`] and a coefficient
//! [`Field`]. Terms are stored in descending lexicographic storage order with
//! no zero coefficients, so structurally equal polynomials compare equal.
//! Monomial orders only matter for printing and for the Gröbner engine.

mod coeff;
mod monomial;
mod order;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use coeff::{rat, Coeff, Field, Rational, DEFAULT_PRIME};
pub(crate) use coeff::inv_mod;
pub use monomial::Monomial;
pub use order::MonomialOrder;

use crate::error::PolyError;

/// Ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarTable, PolyError> {
        let mut index = BTreeMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(PolyError::InvalidVariableName(n.to_string()));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            owned.push(n.to_string());
        }
        Ok(VarTable { names: owned, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

/// A polynomial ring: variables plus coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    vars: VarTable,
    field: Field,
}

impl Ring {
    pub fn new(vars: VarTable, field: Field) -> Arc<Ring> {
        Arc::new(Ring { vars, field })
    }

    /// Shorthand for `Ring::new(VarTable::new(names)?, field)`.
    pub fn with_names<S: AsRef<str>>(names: &[S], field: Field) -> Result<Arc<Ring>, PolyError> {
        Ok(Ring::new(VarTable::new(names)?, field))
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Ring::new(self.vars.clone(), field)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<(), PolyError> {
    if Arc::ptr_eq(a, b) {
        return Ok(());
    }
    if a.field != b.field {
        return Err(PolyError::MismatchedField);
    }
    if a.vars != b.vars {
        return Err(PolyError::MismatchedVars);
    }
    Ok(())
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    // descending storage (lex) order, nonzero coefficients
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring).is_ok() && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Poly {
        Poly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, n: i64) -> Poly {
        Poly::constant(ring, ring.field.from_i64(n))
    }

    pub fn from_rational(ring: &Arc<Ring>, r: &Rational) -> Result<Poly, PolyError> {
        Ok(Poly::constant(ring, ring.field.from_rational(r)?))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Poly {
        debug_assert_eq!(m.len(), ring.nvars());
        if c.is_zero() {
            Poly::zero(ring)
        } else {
            Poly { ring: ring.clone(), terms: alloc::vec![(m, c)] }
        }
    }

    pub fn var_index(ring: &Arc<Ring>, index: usize) -> Poly {
        Poly::monomial(ring, Monomial::variable(ring.nvars(), index, 1), ring.field.one())
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Poly, PolyError> {
        Ok(Poly::var_index(ring, ring.vars.require(name)?))
    }

    /// Builds a polynomial from arbitrary terms (duplicates are combined,
    /// zeros dropped).
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Poly {
        let field = ring.field;
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            debug_assert!(field.contains(&c));
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { ring: ring.clone(), terms }
    }

    /// Parses text in the polynomial grammar.
    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Poly, PolyError> {
        parse::parse(text, ring)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    /// Terms in descending lexicographic storage order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant term (zero if absent).
    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field.zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = alloc::vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                used[v] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c);
                self.scale(&inv)
            }
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        let field = self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.try_mul(mb)?;
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    fn merge(&self, other: &Poly, subtract: bool) -> Poly {
        let field = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    let c = if subtract { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if subtract { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if subtract { field.neg(c) } else { c.clone() })));
        Poly { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        let field = self.ring.field;
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(x, c))).collect(),
        }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        let field = self.ring.field;
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        // multiplication by a monomial preserves lex order
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), field.mul(x, c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Result<Poly, PolyError> {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Formal partial derivative with respect to variable index `var`.
    pub fn derivative_index(&self, var: usize) -> Poly {
        let field = self.ring.field;
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(var) > 0).map(|(m, c)| {
            let e = m.exponent(var);
            let mut exps: Vec<u16> = m.exponents().to_vec();
            exps[var] = e - 1;
            (Monomial::from_exponents(&exps), field.mul(c, &field.from_u64(e as u64)))
        });
        Poly::from_terms(&self.ring, terms)
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Poly, PolyError> {
        Ok(self.derivative_index(self.ring.vars.require(var)?))
    }

    /// Replaces every variable `i` by `images[i]`, a polynomial of `target`.
    pub fn compose(&self, target: &Arc<Ring>, images: &[Poly]) -> Result<Poly, PolyError> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        for img in images {
            same_ring(img.ring(), target)?;
        }
        if self.ring.field != target.field {
            return Err(PolyError::MismatchedField);
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| alloc::vec![Poly::one(target), p.clone()]).collect();
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for v in m.support() {
                let e = m.exponent(v) as usize;
                while powers[v].len() <= e {
                    let next = powers[v].last().unwrap().try_mul(&images[v])?;
                    powers[v].push(next);
                }
                term = term.try_mul(&powers[v][e])?;
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    /// Simultaneous substitution; unbound variables map to themselves.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Poly, PolyError> {
        let mut images: Vec<Poly> = (0..self.ring.nvars()).map(|i| Poly::var_index(&self.ring, i)).collect();
        for (name, p) in bindings {
            let i = self.ring.vars.require(name)?;
            same_ring(&self.ring, p.ring())?;
            images[i] = p.clone();
        }
        self.compose(&self.ring, &images)
    }

    /// Substitution keyed by variable index.
    pub fn substitute_indices(&self, bindings: &[(usize, Poly)]) -> Result<Poly, PolyError> {
        let mut images: Vec<Poly> = (0..self.ring.nvars()).map(|i| Poly::var_index(&self.ring, i)).collect();
        for (i, p) in bindings {
            same_ring(&self.ring, p.ring())?;
            images[*i] = p.clone();
        }
        self.compose(&self.ring, &images)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Poly, PolyError> {
        if self.ring.field != target.field {
            return Err(PolyError::MismatchedField);
        }
        let map: Vec<Option<usize>> = self.ring.vars.names.iter().map(|n| target.vars.index_of(n)).collect();
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = alloc::vec![0u16; n];
            for v in m.support() {
                match map[v] {
                    Some(t) => exps[t] = m.exponent(v),
                    None => return Err(PolyError::UnknownVariable(self.ring.vars.name(v).to_string())),
                }
            }
            terms.push((Monomial::from_exponents(&exps), c.clone()));
        }
        Ok(Poly::from_terms(target, terms))
    }

    /// Reduction of a rational polynomial modulo a prime.
    pub fn reduce_mod(&self, field: Field) -> Result<Poly, PolyError> {
        let target = self.ring.with_field(field);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let c = match c {
                Coeff::Rational(r) => field.from_rational(r)?,
                Coeff::Prime(_) => return Err(PolyError::MismatchedField),
            };
            terms.push((m.clone(), c));
        }
        Ok(Poly::from_terms(&target, terms))
    }

    /// Value at a point given one coefficient per variable.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let field = self.ring.field;
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                for _ in 0..m.exponent(v) {
                    t = field.mul(&t, &point[v]);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Text form with terms in descending `order`.
    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let mut out = String::new();
        if self.terms.is_empty() {
            out.push('0');
            return out;
        }
        let field = self.ring.field;
        for (k, (m, c)) in self.sorted_terms(order).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for v in m.support() {
                let e = m.exponent(v);
                let name = self.ring.vars.name(v);
                factors.push(if e == 1 { name.to_string() } else { alloc::format!("{name}^{e}") });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Prints under grevlex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&MonomialOrder::GrevLex))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics if the operands live in different rings; use the `try_` form otherwise.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$try(rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let field = self.ring.field;
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Product of a list of polynomials (one for the empty list).
pub fn product<'a>(ring: &Arc<Ring>, factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
    factors.into_iter().fold(Poly::one(ring), |acc, f| &acc * f)
}

/// Sum of a list of polynomials (zero for the empty list).
pub fn sum<'a>(ring: &Arc<Ring>, terms: impl IntoIterator<Item = &'a Poly>) -> Poly {
    terms.into_iter().fold(Poly::zero(ring), |acc, f| &acc + f)
}

#[cfg(test)]
mod tests {
    use super::*;
    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::with_names(names, Field::Rationals).unwrap()
    }

    fn p(s: &str, r: &Arc<Ring>) -> Poly {
        Poly::parse(s, r).unwrap()
    }

    #[test]
    fn parse_literal_terms() {
        let r = ring(&["d1_1", "d1_2", "d2_1", "d2_2", "d3_1", "d3_2"]);
        assert_eq!(p("d1_1*d1_2 - d2_1*d2_2 + d3_1*d3_2", &r).len(), 3);
        let r = ring(&["x", "y"]);
        assert_eq!(p("(x+y)^2", &r), p("x^2 + 2*x*y + y^2", &r));
        let q = p("3/4*x^2*y - x", &r);
        assert_eq!(q.len(), 2);
        let x2y = Monomial::from_exponents(&[2, 1]);
        assert_eq!(q.coefficient(&x2y), Coeff::Rational(rat(3, 4)));
        assert_eq!(q.coefficient(&Monomial::from_exponents(&[1, 0])), Coeff::Rational(rat(-1, 1)));
    }

    #[test]
    fn ring_ops_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(p("x+y", &r) + p("x-y", &r), p("2*x", &r));
        assert_eq!(p("x+y", &r) * p("x-y", &r), p("x^2 - y^2", &r));
        assert!((Poly::zero(&r) * p("x^3 - 7*y + 1/2", &r)).is_zero());
        assert_eq!(p("x - y", &r).pow(3).unwrap(), p("x^3 - 3*x^2*y + 3*x*y^2 - y^3", &r));
    }

    #[test]
    fn mismatched_rings_are_errors() {
        let a = ring(&["x", "y"]);
        let b = ring(&["x", "z"]);
        let c = Ring::with_names(&["x", "y"], Field::Prime(7)).unwrap();
        assert_eq!(p("x", &a).try_add(&p("x", &b)), Err(PolyError::MismatchedVars));
        assert_eq!(p("x", &a).try_mul(&p("x", &c)), Err(PolyError::MismatchedField));
    }

    #[test]
    fn derivative_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(p("x^2*y", &r).partial_derivative("x").unwrap(), p("2*x*y", &r));
        assert!(p("x^2*y", &r).partial_derivative("z").unwrap().is_zero());
        assert_eq!(p("x", &r).partial_derivative("w"), Err(PolyError::UnknownVariable("w".into())));
        // f = x(xy - 2): x f_x - y f_y = f
        let f = p("x*(x*y - 2)", &r);
        let x = p("x", &r);
        let y = p("y", &r);
        let lhs = &x * &f.partial_derivative("x").unwrap() - &y * &f.partial_derivative("y").unwrap();
        assert_eq!(lhs, p("x^2*y - 2*x", &r));
        assert_eq!(lhs, f);
    }

    #[test]
    fn substitution_examples() {
        let r = ring(&["d2_1", "d2_2", "d2_3", "d2_4", "u2_1", "g2_1", "g2_2", "g2_3"]);
        let one = Poly::one(&r);
        assert_eq!(p("u2_1*d2_1", &r).substitute(&[("u2_1", one)]).unwrap(), p("d2_1", &r));
        let sub = p("u2_1*d2_1 - g2_1", &r);
        assert_eq!(
            p("d2_1*d2_2", &r).substitute(&[("d2_2", sub)]).unwrap(),
            p("d2_1*(u2_1*d2_1 - g2_1)", &r)
        );
        // p2 = 3 at chart i = 1: d2_2 = u2_1 d2_1 - g2_1, then d2_3 = d2_2 - g2_2
        let d3 = p("d2_3", &r)
            .substitute(&[("d2_3", p("d2_2 - g2_2", &r))])
            .unwrap()
            .substitute(&[("d2_2", p("u2_1*d2_1 - g2_1", &r))])
            .unwrap();
        assert_eq!(d3, p("u2_1*d2_1 - (g2_1 + g2_2)", &r));
    }

    #[test]
    fn unknown_binding_rejected() {
        let r = ring(&["x"]);
        assert_eq!(p("x", &r).substitute(&[("y", Poly::one(&r))]), Err(PolyError::UnknownVariable("y".into())));
    }

    #[test]
    fn printing_uses_order_and_round_trips() {
        let r = ring(&["x", "y"]);
        let q = p("y^3 - 3/4*x + x^2*y - 1", &r);
        assert_eq!(q.to_text(&MonomialOrder::GrevLex), "x^2*y + y^3 - 3/4*x - 1");
        assert_eq!(q.to_text(&MonomialOrder::Lex), "x^2*y - 3/4*x + y^3 - 1");
        assert_eq!(p(&q.to_string(), &r), q);
        assert_eq!(Poly::zero(&r).to_string(), "0");
        assert_eq!(p("-x", &r).to_string(), "-x");
    }

    #[test]
    fn change_of_ring_by_name() {
        let a = ring(&["x", "y", "z"]);
        let b = ring(&["z", "x"]);
        assert_eq!(p("x*z^2 + 1", &a).to_ring(&b).unwrap(), p("x*z^2 + 1", &b));
        assert_eq!(p("y", &a).to_ring(&b), Err(PolyError::UnknownVariable("y".into())));
    }
}
