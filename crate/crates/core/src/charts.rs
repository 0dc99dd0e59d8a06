//! Chart presentations of the total space and of the fibres, the
//! substitution oracle, Jacobian certificates, the two auxiliary lemmas and
//! the brute-force cover check.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{inconclusive_of, Budget, DimensionReport, Ideal};
use crate::poly::{product, Field, Poly, Rational, Ring, VarTable};
use crate::quiver::{arrow_name, ArmParams, Direction, StarQuiver, Support};
use crate::reconstruction::{canonical_relation, deformed_relations, DeformParams};

pub use crate::quiver::ChartId;

/// Signs of `D₁, D₂, D₃` in the canonical relation.
const SIGN: [i64; 3] = [1, -1, 1];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    /// Chart of the quiver with only the canonical relation.
    TotalSpace,
    /// Chart of the moduli of the deformed algebra at a fixed γ.
    Fibre,
}

#[derive(Clone, Debug)]
pub struct ChartPresentation {
    pub id: ChartId,
    pub kind: ChartKind,
    pub ring: Arc<Ring>,
    pub relations: Vec<Poly>,
    /// Image of every arrow, in arrow table order, as `(name, poly)`.
    pub dictionary: Vec<(String, Poly)>,
}

impl ChartPresentation {
    pub fn variables(&self) -> &[String] {
        self.ring.vars().names()
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::grevlex(&self.ring, self.relations.clone())
    }

    /// Expected Krull dimension: `Σp + 1` for the total space, 2 for a fibre.
    pub fn expected_dimension(&self, p: &ArmParams) -> i64 {
        match self.kind {
            ChartKind::TotalSpace => p.total() as i64 + 1,
            ChartKind::Fibre => 2,
        }
    }
}

fn var(ring: &Arc<Ring>, dir: Direction, arm: usize, j: usize) -> Poly {
    Poly::var(ring, &arrow_name(dir, arm, j)).expect("chart ring carries the variable")
}

fn konst(ring: &Arc<Ring>, r: &Rational) -> Poly {
    Poly::from_rational(ring, r).expect("parameters are invertible in the field")
}

fn check_chart(p: &ArmParams, c: &ChartId) -> Result<()> {
    c.check(p)
}

/// Total-space chart: `D_k` and the prescribed partial paths scaled to 1,
/// one relation left.
pub fn total_space_chart(p: &ArmParams, c: &ChartId, field: Field) -> Result<ChartPresentation> {
    check_chart(p, c)?;
    let (s, t) = c.arms();
    let mut names = Vec::new();
    for l in 1..=p.p(c.k) {
        names.push(arrow_name(Direction::Up, c.k, l));
    }
    for (arm, idx) in [(s, c.i), (t, c.j)] {
        for l in 1..=idx {
            names.push(arrow_name(Direction::Up, arm, l));
        }
        for l in idx..=p.p(arm) {
            names.push(arrow_name(Direction::Down, arm, l));
        }
    }
    let ring = Ring::new(VarTable::new(&names)?, field);

    let tail_path = |arm: usize, idx: usize| {
        let f: Vec<Poly> = (idx..=p.p(arm)).map(|l| var(&ring, Direction::Down, arm, l)).collect();
        product(&ring, &f)
    };
    let mut rel = Poly::zero(&ring);
    for arm in 1..=3 {
        let path = if arm == c.k {
            Poly::one(&ring)
        } else if arm == s {
            tail_path(s, c.i)
        } else {
            tail_path(t, c.j)
        };
        rel = &rel + &path.scale(&field.from_i64(SIGN[arm - 1]));
    }

    let q = StarQuiver::new(*p);
    let units = q.unit_arrows(c);
    let dictionary = q
        .arrows()
        .iter()
        .map(|a| {
            let img = if units.contains(&(a.direction, a.arm, a.index)) {
                Poly::one(&ring)
            } else {
                Poly::var(&ring, &a.name).expect("non-unit arrows are chart variables")
            };
            (a.name.clone(), img)
        })
        .collect();
    Ok(ChartPresentation { id: *c, kind: ChartKind::TotalSpace, ring, relations: alloc::vec![rel], dictionary })
}

/// Fibre chart in the four variables `d_si, u_si, d_tj, u_tj`.
pub fn fibre_chart(p: &ArmParams, gamma: &DeformParams, c: &ChartId, field: Field) -> Result<ChartPresentation> {
    check_chart(p, c)?;
    gamma.check_shape(p)?;
    if !gamma.in_delta() {
        return Err(Error::NotInDelta);
    }
    let (s, t) = c.arms();
    let names = [
        arrow_name(Direction::Down, s, c.i),
        arrow_name(Direction::Up, s, c.i),
        arrow_name(Direction::Down, t, c.j),
        arrow_name(Direction::Up, t, c.j),
    ];
    let ring = Ring::new(VarTable::new(&names)?, field);
    let k = |r: &Rational| konst(&ring, r);

    // per other arm: the top 2-cycle, the image of the down path and every arrow image
    let mut top = [Poly::zero(&ring), Poly::zero(&ring), Poly::zero(&ring)];
    let mut path = top.clone();
    let mut images: Vec<(Direction, usize, usize, Poly)> = Vec::new();
    for (arm, idx) in [(s, c.i), (t, c.j)] {
        let d = var(&ring, Direction::Down, arm, idx);
        let u = var(&ring, Direction::Up, arm, idx);
        let x = &d * &u;
        top[arm - 1] = &x + &k(&gamma.range_sum(arm, 1, idx - 1));
        let mut factors = alloc::vec![d.clone()];
        for l in idx..p.p(arm) {
            factors.push(&x - &k(&gamma.range_sum(arm, idx, l)));
        }
        path[arm - 1] = product(&ring, &factors);
        for l in 1..idx {
            images.push((Direction::Down, arm, l, Poly::one(&ring)));
            images.push((Direction::Up, arm, l, &x + &k(&gamma.range_sum(arm, l, idx - 1))));
        }
        images.push((Direction::Down, arm, idx, d));
        images.push((Direction::Up, arm, idx, u));
        for l in idx + 1..=p.p(arm) {
            images.push((Direction::Down, arm, l, &x - &k(&gamma.range_sum(arm, idx, l - 1))));
            images.push((Direction::Up, arm, l, Poly::one(&ring)));
        }
    }

    let f1 = match c.k {
        1 => &(&top[1] - &top[2]) - &k(&gamma.b),
        2 => &(&top[0] - &top[2]) - &k(&(&gamma.b - &gamma.a)),
        _ => &(&top[1] - &top[0]) - &k(&gamma.a),
    };
    let mut f2 = Poly::zero(&ring);
    for arm in 1..=3 {
        let term = if arm == c.k { Poly::one(&ring) } else { path[arm - 1].clone() };
        f2 = &f2 + &term.scale(&field.from_i64(SIGN[arm - 1]));
    }

    // arm k: all d's are 1, the u's follow from its top 2-cycle
    let top_k = match c.k {
        1 => &top[1] - &k(&gamma.a),
        2 => &top[0] + &k(&gamma.a),
        _ => &top[1] - &k(&gamma.b),
    };
    for l in 1..=p.p(c.k) {
        images.push((Direction::Down, c.k, l, Poly::one(&ring)));
        images.push((Direction::Up, c.k, l, &top_k - &k(&gamma.range_sum(c.k, 1, l - 1))));
    }

    let q = StarQuiver::new(*p);
    let dictionary = q
        .arrows()
        .iter()
        .map(|a| {
            let img = images
                .iter()
                .find(|(d, r, l, _)| (*d, *r, *l) == (a.direction, a.arm, a.index))
                .map(|(_, _, _, f)| f.clone())
                .expect("every arrow has an image");
            (a.name.clone(), img)
        })
        .collect();
    Ok(ChartPresentation { id: *c, kind: ChartKind::Fibre, ring, relations: alloc::vec![f1, f2], dictionary })
}

/// Names of the variables a chart keeps.
fn chart_variable_names(q: &StarQuiver, c: &ChartId, kind: ChartKind) -> Vec<String> {
    match kind {
        ChartKind::TotalSpace => {
            let units = q.unit_arrows(c);
            q.arrows()
                .iter()
                .filter(|a| !units.contains(&(a.direction, a.arm, a.index)))
                .map(|a| a.name.clone())
                .collect()
        }
        ChartKind::Fibre => {
            let (s, t) = c.arms();
            alloc::vec![
                arrow_name(Direction::Down, s, c.i),
                arrow_name(Direction::Up, s, c.i),
                arrow_name(Direction::Down, t, c.j),
                arrow_name(Direction::Up, t, c.j),
            ]
        }
    }
}

/// Whether two presentations of the same chart generate the same ideal,
/// matching variables by name.
pub fn presentations_agree(a: &ChartPresentation, b: &ChartPresentation, budget: &Budget) -> Result<bool> {
    let mut names_a = a.variables().to_vec();
    let mut names_b = b.variables().to_vec();
    names_a.sort();
    names_b.sort();
    if names_a != names_b {
        return Ok(false);
    }
    let moved = b.relations.iter().map(|f| f.to_ring(&a.ring)).collect::<Result<Vec<_>, _>>()?;
    a.ideal()?.equals(&Ideal::grevlex(&a.ring, moved)?, budget)
}

/// Solves `f = c·v + rest` for `v` when `v` occurs only linearly with a
/// constant coefficient.
fn solve_linear(f: &Poly, v: usize) -> Option<Poly> {
    let field = f.field();
    let mut coeff = None;
    for (m, c) in f.terms() {
        match m.exponent(v) {
            0 => {}
            1 if m.degree() == 1 => coeff = Some(c.clone()),
            _ => return None,
        }
    }
    let c = coeff?;
    let vpoly = Poly::var_index(f.ring(), v);
    let rest = f - &vpoly.scale(&c);
    Some(rest.scale(&field.neg(&field.inv(&c))))
}

/// Independent derivation: scale the unit arrows to 1, eliminate the other
/// non-chart arrows by solving linear relations, and keep the survivors.
pub fn chart_by_substitution(
    q: &StarQuiver,
    gamma: &DeformParams,
    c: &ChartId,
    kind: ChartKind,
    field: Field,
    budget: &Budget,
) -> Result<ChartPresentation> {
    let p = q.arms();
    check_chart(&p, c)?;
    let arrow_ring = q.arrow_ring(field);
    let mut relations = match kind {
        ChartKind::TotalSpace => alloc::vec![canonical_relation(q, &arrow_ring)],
        ChartKind::Fibre => {
            gamma.check_shape(&p)?;
            if !gamma.in_delta() {
                return Err(Error::NotInDelta);
            }
            deformed_relations(q, gamma, field)?.polys()
        }
    };
    let keep = chart_variable_names(q, c, kind);
    let n = arrow_ring.nvars();
    let mut images: Vec<Poly> = (0..n).map(|v| Poly::var_index(&arrow_ring, v)).collect();
    for (dir, arm, j) in q.unit_arrows(c) {
        images[q.arrow_index(dir, arm, j)] = Poly::one(&arrow_ring);
    }
    relations = relations.iter().map(|f| f.compose(&arrow_ring, &images)).collect::<Result<_, _>>()?;

    let is_chart = |v: usize| keep.iter().any(|k| k == arrow_ring.vars().name(v));
    let mut solved = alloc::vec![false; n];
    for (dir, arm, j) in q.unit_arrows(c) {
        solved[q.arrow_index(dir, arm, j)] = true;
    }
    loop {
        let mut pick = None;
        'search: for (r, f) in relations.iter().enumerate() {
            for v in f.variables() {
                if !is_chart(v) && !solved[v] {
                    if let Some(sol) = solve_linear(f, v) {
                        pick = Some((r, v, sol));
                        break 'search;
                    }
                }
            }
        }
        let Some((r, v, sol)) = pick else { break };
        relations.remove(r);
        let bind = [(v, sol)];
        relations = relations.iter().map(|f| f.substitute_indices(&bind)).collect::<Result<_, _>>()?;
        for img in images.iter_mut() {
            *img = img.substitute_indices(&bind)?;
        }
        solved[v] = true;
    }
    relations.retain(|f| !f.is_zero());

    let leftover: Vec<String> = (0..n)
        .filter(|&v| !is_chart(v) && relations.iter().any(|f| f.degree_in(v) > 0))
        .map(|v| arrow_ring.vars().name(v).to_string())
        .collect();
    if !leftover.is_empty() {
        let ideal = Ideal::grevlex(&arrow_ring, relations)?;
        relations = ideal.eliminate(&leftover, budget)?.generators().to_vec();
    }

    let ring = Ring::new(VarTable::new(&keep)?, field);
    let relations = relations.iter().map(|f| f.to_ring(&ring)).collect::<Result<Vec<_>, _>>()?;
    let dictionary = q
        .arrows()
        .iter()
        .zip(&images)
        .map(|(a, img)| Ok((a.name.clone(), img.to_ring(&ring)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChartPresentation { id: *c, kind, ring, relations, dictionary })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateStatus {
    Smooth,
    Singular,
    /// 1 lies in the Jacobian ideal but the dimension misses the target.
    DimensionMismatch,
    Inconclusive,
}

impl CertificateStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateStatus::Smooth => "smooth",
            CertificateStatus::Singular => "singular",
            CertificateStatus::DimensionMismatch => "dimension_mismatch",
            CertificateStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SmoothnessCertificate {
    pub label: String,
    /// Relations followed by the maximal minors of the Jacobian matrix.
    pub jacobian: Vec<Poly>,
    pub one_in_jacobian: Option<bool>,
    pub dimension: Option<DimensionReport>,
    pub expected_dimension: Option<i64>,
    pub status: CertificateStatus,
}

fn determinant(m: &[Vec<Poly>]) -> Poly {
    let ring = m[0][0].ring().clone();
    match m.len() {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = Poly::zero(&ring);
            for col in 0..n {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            go(c + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// All `r × r` minors of the Jacobian of `relations`, `r` = number of relations.
pub fn jacobian_minors(ring: &Arc<Ring>, relations: &[Poly]) -> Vec<Poly> {
    let n = ring.nvars();
    let r = relations.len();
    if r == 0 || r > n {
        return Vec::new();
    }
    let jac: Vec<Vec<Poly>> = relations.iter().map(|f| (0..n).map(|v| f.derivative_index(v)).collect()).collect();
    combinations(n, r)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Poly>> = jac.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Jacobian criterion for `V(relations)`; the dimension is that of the
/// relation ideal itself.
pub fn jacobian_certificate(
    label: &str,
    ring: &Arc<Ring>,
    relations: &[Poly],
    expected_dimension: Option<i64>,
    budget: &Budget,
) -> Result<SmoothnessCertificate> {
    let mut jacobian = relations.to_vec();
    jacobian.extend(jacobian_minors(ring, relations));
    let mut cert = SmoothnessCertificate {
        label: label.to_string(),
        jacobian: jacobian.clone(),
        one_in_jacobian: None,
        dimension: None,
        expected_dimension,
        status: CertificateStatus::Inconclusive,
    };
    let j = Ideal::grevlex(ring, jacobian)?;
    match j.contains_one(budget) {
        Ok(v) => cert.one_in_jacobian = Some(v),
        Err(e) if inconclusive_of(&e).is_some() => return Ok(cert),
        Err(e) => return Err(e),
    }
    let i = Ideal::grevlex(ring, relations.to_vec())?;
    match i.krull_dimension(budget) {
        Ok(d) => cert.dimension = Some(d),
        Err(e) if inconclusive_of(&e).is_some() => return Ok(cert),
        Err(e) => return Err(e),
    }
    let dim_ok = match (expected_dimension, &cert.dimension) {
        (Some(target), Some(d)) => d.dimension == target,
        _ => true,
    };
    cert.status = match (cert.one_in_jacobian, dim_ok) {
        (Some(false), _) => CertificateStatus::Singular,
        (Some(true), true) => CertificateStatus::Smooth,
        (Some(true), false) => CertificateStatus::DimensionMismatch,
        (None, _) => CertificateStatus::Inconclusive,
    };
    Ok(cert)
}

pub fn smoothness_certificate(
    pres: &ChartPresentation,
    expected_dimension: Option<i64>,
    budget: &Budget,
) -> Result<SmoothnessCertificate> {
    jacobian_certificate(&pres.id.to_string(), &pres.ring, &pres.relations, expected_dimension, budget)
}

/// Substitutes the dictionary into every original relation and checks that
/// the results lie in the chart ideal. Relations of the total space are the
/// canonical relation alone.
pub fn dictionary_consistent(q: &StarQuiver, gamma: &DeformParams, pres: &ChartPresentation, budget: &Budget) -> Result<bool> {
    let field = pres.ring.field();
    let arrow_ring = q.arrow_ring(field);
    let originals = match pres.kind {
        ChartKind::TotalSpace => alloc::vec![canonical_relation(q, &arrow_ring)],
        ChartKind::Fibre => deformed_relations(q, gamma, field)?.polys(),
    };
    let images: Vec<Poly> = pres.dictionary.iter().map(|(_, f)| f.clone()).collect();
    let ideal = pres.ideal()?;
    for f in &originals {
        if !ideal.contains(&f.compose(&pres.ring, &images)?, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x ∂f/∂x − y ∂f/∂y = f` for `f = x ∏(xy − α_i)`.
pub fn euler_identity_check(alpha: &[Rational]) -> bool {
    let ring = Ring::with_names(&["x", "y"], Field::Rationals).expect("valid names");
    let x = Poly::var_index(&ring, 0);
    let y = Poly::var_index(&ring, 1);
    let xy = &x * &y;
    let mut f = x.clone();
    for a in alpha {
        f = &f * &(&xy - &konst(&ring, a));
    }
    let lhs = &(&x * &f.derivative_index(0)) - &(&y * &f.derivative_index(1));
    lhs == f
}

/// Whether `k[a,b,x,y]/(f₁, f₂) ≠ 0` for
/// `f₁ = ab − xy + α₁` and `f₂ = 1 − a∏_{l≥2}(ab − α_l) + x∏(xy − β_l)`.
/// `alpha` holds `α₁, …, α_n` and `beta` holds `β₂, …, β_m`.
pub fn quotient_nonzero_check(alpha: &[Rational], beta: &[Rational], budget: &Budget) -> Result<bool> {
    if alpha.is_empty() {
        return Err(Error::Invalid("need at least α₁".into()));
    }
    let ring = Ring::with_names(&["a", "b", "x", "y"], Field::Rationals)?;
    let v = |i| Poly::var_index(&ring, i);
    let (a, b, x, y) = (v(0), v(1), v(2), v(3));
    let ab = &a * &b;
    let xy = &x * &y;
    let f1 = &(&ab - &xy) + &konst(&ring, &alpha[0]);
    let mut left = a.clone();
    for al in &alpha[1..] {
        left = &left * &(&ab - &konst(&ring, al));
    }
    let mut right = x.clone();
    for be in beta {
        right = &right * &(&xy - &konst(&ring, be));
    }
    let f2 = &(&Poly::one(&ring) - &left) + &right;
    let ideal = Ideal::grevlex(&ring, alloc::vec![f1, f2])?;
    Ok(!ideal.contains_one(budget)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub supports: u64,
    pub stable: u64,
    pub compatible: u64,
    pub covered: u64,
    pub counterexamples: Vec<Support>,
}

pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// At least two of the three down paths fully nonzero.
pub fn relation_compatible(q: &StarQuiver, s: &Support) -> bool {
    let p = q.arms();
    (1..=3)
        .filter(|&arm| (1..=p.p(arm)).all(|j| s.0[q.arrow_index(Direction::Down, arm, j)]))
        .count()
        >= 2
}

/// Scans supports with indices in `range`, each read as a bit pattern.
pub fn scan_supports(q: &StarQuiver, range: core::ops::Range<u64>) -> CoverReport {
    let n = q.arrows().len();
    let mut report = CoverReport { supports: 0, stable: 0, compatible: 0, covered: 0, counterexamples: Vec::new() };
    for bits in range {
        report.supports += 1;
        let s = Support::from_bits(n, bits);
        if !q.is_stable_support(&s) {
            continue;
        }
        report.stable += 1;
        if !relation_compatible(q, &s) {
            continue;
        }
        report.compatible += 1;
        if q.chart_supports(&s).is_empty() {
            report.counterexamples.push(s);
        } else {
            report.covered += 1;
        }
    }
    report
}

pub fn verify_cover(p: &ArmParams, cap: usize) -> Result<CoverReport> {
    let q = StarQuiver::new(*p);
    let n = q.arrows().len();
    if n > cap || n >= 64 {
        return Err(Error::EnumerationCap { arrows: n, cap });
    }
    Ok(scan_supports(&q, 0..1u64 << n))
}
