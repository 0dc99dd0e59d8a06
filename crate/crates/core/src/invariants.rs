//! Invariant generators, the map π to Δ, the homomorphism φ from k[w, v],
//! the determinantal minors and the kernel computation.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Result;
use crate::groebner::{inconclusive_of, Budget, GbStats, Ideal};
use crate::poly::{product, Field, MonomialOrder, Poly, Rational, Ring, VarTable};
use crate::quiver::{ArmParams, StarQuiver};
use crate::reconstruction::{canonical_relation, DeformParams};

pub type Named = Vec<(String, Poly)>;

#[derive(Clone, Debug)]
pub struct GeneratingSets {
    pub two_cycles: Named,
    /// Crossing cycles `D_iU_j` of each tier.
    pub s1: Named,
    pub s2: Named,
    pub s3: Named,
}

impl GeneratingSets {
    /// The full tier: 2-cycles followed by the crossing cycles.
    pub fn tier(&self, n: usize) -> Named {
        let crossing = match n {
            1 => &self.s1,
            2 => &self.s2,
            _ => &self.s3,
        };
        self.two_cycles.iter().chain(crossing.iter()).cloned().collect()
    }
}

fn crossing(q: &StarQuiver, ring: &Arc<Ring>, i: usize, j: usize) -> (String, Poly) {
    (format!("D{i}U{j}"), &q.down_path(ring, i) * &q.up_path(ring, j))
}

pub fn generating_sets(q: &StarQuiver, ring: &Arc<Ring>) -> GeneratingSets {
    let p = q.arms();
    let mut two_cycles = Vec::new();
    for i in 1..=3 {
        for j in 1..=p.p(i) {
            two_cycles.push((format!("d{i}_{j}u{i}_{j}"), &q.d(ring, i, j) * &q.u(ring, i, j)));
        }
    }
    let pick = |pairs: &[(usize, usize)]| pairs.iter().map(|&(i, j)| crossing(q, ring, i, j)).collect::<Named>();
    let all: Vec<(usize, usize)> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).collect();
    GeneratingSets {
        two_cycles,
        s1: pick(&all),
        s2: pick(&[(1, 2), (1, 3), (2, 1), (2, 3)]),
        s3: pick(&[(1, 2), (2, 1), (2, 3)]),
    }
}

/// Checks `D₃U_i − D₂U_i + D₁U_i ≡ 0` modulo the canonical relation and
/// `D_iU_i = ∏_j d_ij u_ij` for `i = 1, 2, 3`.
pub fn verify_generating_equivalence(q: &StarQuiver) -> Result<bool> {
    let ring = q.arrow_ring(Field::Rationals);
    let ideal = Ideal::grevlex(&ring, alloc::vec![canonical_relation(q, &ring)])?;
    let b = Budget::UNLIMITED;
    for i in 1..=3 {
        let u = q.up_path(&ring, i);
        let combo = &(&(&q.down_path(&ring, 3) - &q.down_path(&ring, 2)) + &q.down_path(&ring, 1)) * &u;
        if !ideal.normal_form(&combo, &b)?.is_zero() {
            return Ok(false);
        }
        let cycles: Vec<Poly> = (1..=q.arms().p(i)).map(|j| &q.d(&ring, i, j) * &q.u(&ring, i, j)).collect();
        if &q.down_path(&ring, i) * &u != product(&ring, &cycles) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point `(β₁, β₂, β₃, α_{1,1}, …, α_{3,p₃})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WVPoint {
    pub beta: [Rational; 3],
    /// `alpha[i-1][j-1] = α_{i,j}`.
    pub alpha: [Vec<Rational>; 3],
}

impl WVPoint {
    pub fn coordinate_count(&self) -> usize {
        3 + self.alpha.iter().map(Vec::len).sum::<usize>()
    }
}

/// Consecutive differences of the 2-cycle values.
pub fn pi_map(pt: &WVPoint, p: &ArmParams) -> Result<DeformParams> {
    for arm in 1..=3 {
        if pt.alpha[arm - 1].len() != p.p(arm) {
            return Err(crate::Error::ParamShape(format!("alpha{arm} must have {} entries", p.p(arm))));
        }
    }
    let al = |i: usize, j: usize| &pt.alpha[i - 1][j - 1];
    let mut g = DeformParams::zero(p);
    for arm in 1..=3 {
        for l in 1..p.p(arm) {
            g.gamma_mut(arm)[l - 1] = al(arm, l) - al(arm, l + 1);
        }
    }
    g.a = al(2, 1) - al(1, 1);
    g.b = al(2, 1) - al(3, 1);
    g.big_a = al(1, p.p(1)) - al(2, p.p(2));
    g.big_b = al(3, p.p(3)) - al(2, p.p(2));
    Ok(g)
}

/// Both Δ forms of π, computed over indeterminate α, vanish identically.
pub fn pi_lands_in_delta_symbolically(p: &ArmParams) -> Result<bool> {
    let names: Vec<String> = (1..=3).flat_map(|i| (1..=p.p(i)).map(move |j| format!("alpha{i}_{j}"))).collect();
    let ring = Ring::new(VarTable::new(&names)?, Field::Rationals);
    let al = |i: usize, j: usize| Poly::var(&ring, &format!("alpha{i}_{j}")).expect("alpha variable");
    let gamma_sum = |arm: usize| {
        let mut acc = Poly::zero(&ring);
        for l in 1..p.p(arm) {
            acc = &acc + &(&al(arm, l) - &al(arm, l + 1));
        }
        acc
    };
    let a = &al(2, 1) - &al(1, 1);
    let b = &al(2, 1) - &al(3, 1);
    let big_a = &al(1, p.p(1)) - &al(2, p.p(2));
    let big_b = &al(3, p.p(3)) - &al(2, p.p(2));
    let first = &(&(&gamma_sum(1) - &gamma_sum(2)) + &big_a) + &a;
    let second = &(&(&gamma_sum(3) - &gamma_sum(2)) + &big_b) + &b;
    Ok(first.is_zero() && second.is_zero())
}

/// The relations cutting out the fibre of π over `gamma`, evaluated at
/// `pt`. All values vanish when `gamma = π(pt)`.
pub fn fibre_relation_values(pt: &WVPoint, p: &ArmParams, gamma: &DeformParams) -> Vec<Rational> {
    let al = |i: usize, j: usize| &pt.alpha[i - 1][j - 1];
    let mut out = Vec::new();
    for arm in 1..=3 {
        for l in 1..p.p(arm) {
            out.push(al(arm, l) - al(arm, l + 1) - gamma.g(arm, l));
        }
    }
    out.push(al(2, 1) - al(1, 1) - &gamma.a);
    out.push(al(2, 1) - al(3, 1) - &gamma.b);
    out.push(al(1, p.p(1)) - al(2, p.p(2)) - &gamma.big_a);
    out.push(al(3, p.p(3)) - al(2, p.p(2)) - &gamma.big_b);
    out
}

pub fn fibre_relations_vanish(pt: &WVPoint, p: &ArmParams) -> Result<bool> {
    let gamma = pi_map(pt, p)?;
    Ok(fibre_relation_values(pt, p, &gamma).iter().all(Zero::is_zero))
}

/// Variable names `w1, w2, w3, v1_1, …, v3_p3`.
pub fn wv_names(p: &ArmParams) -> Vec<String> {
    let mut names: Vec<String> = (1..=3).map(|k| format!("w{k}")).collect();
    for i in 1..=3 {
        for j in 1..=p.p(i) {
            names.push(format!("v{i}_{j}"));
        }
    }
    names
}

pub fn wv_ring(p: &ArmParams, field: Field) -> Result<Arc<Ring>> {
    Ok(Ring::new(VarTable::new(&wv_names(p))?, field))
}

/// Images of `w1, w2, w3, v_{i,j}` (in [`wv_names`] order) over `ring`,
/// which must carry the arrow variables.
pub fn phi_images(q: &StarQuiver, ring: &Arc<Ring>) -> Named {
    let dp = |i| q.down_path(ring, i);
    let up = |i| q.up_path(ring, i);
    let mut out = alloc::vec![
        (String::from("w1"), &dp(1) * &up(2)),
        (String::from("w2"), &dp(2) * &up(1)),
        (String::from("w3"), -(&dp(2) * &up(3))),
    ];
    for i in 1..=3 {
        for j in 1..=q.arms().p(i) {
            out.push((format!("v{i}_{j}"), &q.d(ring, i, j) * &q.u(ring, i, j)));
        }
    }
    out
}

/// `φ(f)` for `f` over the w/v ring, landing in the arrow ring over the same field.
pub fn phi_apply(q: &StarQuiver, f: &Poly) -> Result<Poly> {
    let ring = q.arrow_ring(f.field());
    let images: Vec<Poly> = phi_images(q, &ring).into_iter().map(|(_, g)| g).collect();
    Ok(f.compose(&ring, &images)?)
}

/// The three 2×2 minors `m₁₂, m₁₃, m₂₃` of
/// `(w2, w3, V2 ; V1, w3 + V3, w1)` with `V_i = ∏_j v_ij`,
/// oriented as `a_i b_j − b_i a_j`.
pub fn determinantal_minors(p: &ArmParams, field: Field) -> Result<Vec<Poly>> {
    let ring = wv_ring(p, field)?;
    let v = |name: &str| Poly::var(&ring, name).expect("w/v variable");
    let big_v = |i: usize| {
        let f: Vec<Poly> = (1..=p.p(i)).map(|j| v(&format!("v{i}_{j}"))).collect();
        product(&ring, &f)
    };
    let (w1, w2, w3) = (v("w1"), v("w2"), v("w3"));
    let top = [w2, w3.clone(), big_v(2)];
    let bottom = [big_v(1), &w3 + &big_v(3), w1];
    Ok(matrix_minors(&top, &bottom))
}

fn matrix_minors(top: &[Poly], bottom: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            out.push(&(&top[i] * &bottom[j]) - &(&bottom[i] * &top[j]));
        }
    }
    out
}

/// `φ(m)` reduces to zero modulo the principal canonical ideal, per minor,
/// computed exactly over ℚ.
pub fn verify_minors_vanish(p: &ArmParams) -> Result<Vec<bool>> {
    let q = StarQuiver::new(*p);
    let ring = q.arrow_ring(Field::Rationals);
    let canonical = canonical_relation(&q, &ring);
    let ideal = Ideal::grevlex(&ring, alloc::vec![canonical])?;
    let mut out = Vec::new();
    for m in determinantal_minors(p, Field::Rationals)? {
        let image = phi_apply(&q, &m)?;
        out.push(ideal.normal_form(&image, &Budget::UNLIMITED)?.is_zero());
    }
    Ok(out)
}

/// Ring with the arrows followed by the w/v variables.
fn joint_ring(q: &StarQuiver, field: Field) -> Result<Arc<Ring>> {
    let mut names: Vec<String> = q.arrow_vars().names().to_vec();
    names.extend(wv_names(&q.arms()));
    Ok(Ring::new(VarTable::new(&names)?, field))
}

/// `ker φ`: eliminate the arrows from the graph ideal of φ together with the
/// canonical relation.
pub fn kernel_ideal(p: &ArmParams, field: Field, budget: &Budget) -> Result<Ideal> {
    let q = StarQuiver::new(*p);
    let ring = joint_ring(&q, field)?;
    let mut gens = alloc::vec![canonical_relation(&q, &ring)];
    for (name, img) in phi_images(&q, &ring) {
        gens.push(&Poly::var(&ring, &name)? - &img);
    }
    let arrows: Vec<String> = q.arrow_vars().names().to_vec();
    let nv = ring.nvars();
    let na = arrows.len();
    let order = MonomialOrder::Block(alloc::vec![(0..na).collect(), (na..nv).collect()]);
    Ideal::new(&ring, order, gens)?.eliminate(&arrows, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureStatus {
    Confirmed,
    Refuted,
    Inconclusive,
}

impl ConjectureStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConjectureStatus::Confirmed => "confirmed",
            ConjectureStatus::Refuted => "refuted",
            ConjectureStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub p: ArmParams,
    pub field: Field,
    pub status: ConjectureStatus,
    /// Over a prime field a confirmation is probabilistic.
    pub probabilistic: bool,
    /// Minors map to zero under φ, checked exactly over ℚ.
    pub minors_vanish_exact: bool,
    /// Minors lie in the computed kernel.
    pub minors_in_kernel: Option<bool>,
    pub equal: Option<bool>,
    pub kernel: Option<Ideal>,
    pub minors: Vec<Poly>,
    pub stats: Option<GbStats>,
}

/// Compares `ker φ` with the minors ideal. Budget exhaustion gives
/// `Inconclusive`, never `Refuted`.
pub fn verify_conjecture(p: &ArmParams, field: Field, budget: &Budget) -> Result<ConjectureReport> {
    let minors = determinantal_minors(p, field)?;
    let minors_vanish_exact = verify_minors_vanish(p)?.into_iter().all(|x| x);
    let mut report = ConjectureReport {
        p: *p,
        field,
        status: ConjectureStatus::Inconclusive,
        probabilistic: matches!(field, Field::Prime(_)),
        minors_vanish_exact,
        minors_in_kernel: None,
        equal: None,
        kernel: None,
        minors: minors.clone(),
        stats: None,
    };
    let kernel = match kernel_ideal(p, field, budget) {
        Ok(k) => k,
        Err(e) if inconclusive_of(&e).is_some() => return Ok(report),
        Err(e) => return Err(e),
    };
    let minors_ideal = Ideal::grevlex(kernel.ring(), minors)?;
    let outcome = (|| -> Result<(bool, bool, GbStats)> {
        let kb = kernel.basis(budget)?;
        let inside = minors_ideal.generators().iter().all(|m| kb.contains(m).unwrap_or(false));
        let equal = kernel.equals(&minors_ideal, budget)?;
        Ok((inside, equal, kb.stats()))
    })();
    match outcome {
        Ok((inside, equal, stats)) => {
            report.minors_in_kernel = Some(inside);
            report.equal = Some(equal);
            report.stats = Some(stats);
            report.status = if equal { ConjectureStatus::Confirmed } else { ConjectureStatus::Refuted };
        }
        Err(e) if inconclusive_of(&e).is_some() => {}
        Err(e) => return Err(e),
    }
    report.kernel = Some(kernel);
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct FibreZeroReport {
    pub generators: Vec<Poly>,
    pub target: Vec<Poly>,
    pub equal: Option<bool>,
}

/// Minors of `(w2, w3, v^{p2} ; v^{p1}, w3 + v^{p3}, w1)` in `w1, w2, w3, v`.
pub fn origin_minors(p: &ArmParams, ring: &Arc<Ring>) -> Result<Vec<Poly>> {
    let x = |n: &str| Poly::var(ring, n);
    let (w1, w2, w3, v) = (x("w1")?, x("w2")?, x("w3")?, x("v")?);
    let vp = |i: usize| v.pow(p.p(i) as u32);
    let top = [w2, w3.clone(), vp(2)?];
    let bottom = [vp(1)?, &w3 + &vp(3)?, w1];
    Ok(matrix_minors(&top, &bottom))
}

/// Sends every `v_ij` to a single `v` in the kernel generators and compares
/// with [`origin_minors`]. Conditional on the kernel computation.
pub fn fibre_zero_presentation(p: &ArmParams, kernel: &Ideal, budget: &Budget) -> Result<FibreZeroReport> {
    let field = kernel.ring().field();
    let ring = Ring::with_names(&["w1", "w2", "w3", "v"], field)?;
    let v = Poly::var(&ring, "v")?;
    let images: Vec<Poly> = kernel
        .vars()
        .names()
        .iter()
        .map(|n| if n.starts_with('v') { Ok(v.clone()) } else { Poly::var(&ring, n) })
        .collect::<Result<_, _>>()?;
    let generators = kernel.generators().iter().map(|g| g.compose(&ring, &images)).collect::<Result<Vec<_>, _>>()?;
    let target = origin_minors(p, &ring)?;
    let lhs = Ideal::grevlex(&ring, generators.clone())?;
    let rhs = Ideal::grevlex(&ring, target.clone())?;
    let equal = match lhs.equals(&rhs, budget) {
        Ok(e) => Some(e),
        Err(e) if inconclusive_of(&e).is_some() => None,
        Err(e) => return Err(e),
    };
    Ok(FibreZeroReport { generators, target, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn arms(a: usize, b: usize, c: usize) -> ArmParams {
        ArmParams::new(a, b, c).unwrap()
    }

    #[test]
    fn generating_set_sizes() {
        let q = StarQuiver::new(arms(2, 2, 2));
        let ring = q.arrow_ring(Field::Rationals);
        let sets = generating_sets(&q, &ring);
        assert_eq!(sets.two_cycles.len(), 6);
        assert_eq!(sets.tier(1).len(), 15);
        let names: Vec<&str> = sets.s3.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["D1U2", "D2U1", "D2U3"]);
        for (name, f) in sets.tier(1) {
            assert!(q.poly_weights(&f).unwrap().iter().flatten().all(|&w| w == 0), "{name}");
        }
        assert!(verify_generating_equivalence(&q).unwrap());
    }

    #[test]
    fn pi_examples() {
        let p = arms(2, 2, 2);
        let one = rat(1, 1);
        let flat = WVPoint { beta: [one.clone(), one.clone(), one.clone()], alpha: [alloc::vec![rat(3, 1); 2], alloc::vec![rat(3, 1); 2], alloc::vec![rat(3, 1); 2]] };
        assert_eq!(pi_map(&flat, &p).unwrap(), DeformParams::zero(&p));
        let pt = WVPoint {
            beta: [one.clone(), one.clone(), one],
            alpha: [alloc::vec![rat(1, 1), rat(2, 1)], alloc::vec![rat(3, 1), rat(4, 1)], alloc::vec![rat(5, 1), rat(6, 1)]],
        };
        let g = pi_map(&pt, &p).unwrap();
        assert_eq!(g.gamma1, [rat(-1, 1)]);
        assert_eq!(g.gamma2, [rat(-1, 1)]);
        assert_eq!(g.gamma3, [rat(-1, 1)]);
        assert_eq!((g.a.clone(), g.b.clone(), g.big_a.clone(), g.big_b.clone()), (rat(2, 1), rat(-2, 1), rat(-2, 1), rat(2, 1)));
        assert!(g.in_delta());
        assert!(fibre_relations_vanish(&pt, &p).unwrap());
        for p in [arms(2, 2, 2), arms(4, 3, 2), arms(3, 3, 3)] {
            assert!(pi_lands_in_delta_symbolically(&p).unwrap());
        }
    }

    #[test]
    fn phi_and_minors() {
        let p = arms(2, 2, 2);
        let q = StarQuiver::new(p);
        let ring = q.arrow_ring(Field::Rationals);
        let imgs = phi_images(&q, &ring);
        assert_eq!(imgs[2].1, Poly::parse("-d2_1*d2_2*u3_1*u3_2", &ring).unwrap());
        assert_eq!(imgs[3].1, Poly::parse("d1_1*u1_1", &ring).unwrap());
        let minors = determinantal_minors(&p, Field::Rationals).unwrap();
        assert_eq!(minors.len(), 3);
        let wv = minors[0].ring().clone();
        assert_eq!(minors[1], Poly::parse("w2*w1 - v1_1*v1_2*v2_1*v2_2", &wv).unwrap());
        assert!(phi_apply(&q, &minors[1]).unwrap().is_zero());
        let w12 = Poly::parse("w1*w2", &wv).unwrap();
        let pp = q.path_products(&ring);
        assert_eq!(phi_apply(&q, &w12).unwrap(), &(&pp.down[0] * &pp.up[1]) * &(&pp.down[1] * &pp.up[0]));
        for (_, f) in &imgs {
            assert!(q.poly_weights(f).unwrap().iter().flatten().all(|&w| w == 0));
        }
        for p in [arms(2, 2, 2), arms(3, 2, 2), arms(4, 3, 2)] {
            assert_eq!(verify_minors_vanish(&p).unwrap(), [true, true, true]);
        }
    }

    #[test]
    fn origin_minor_shapes() {
        let p = arms(2, 3, 4);
        let ring = Ring::with_names(&["w1", "w2", "w3", "v"], Field::Rationals).unwrap();
        let m = origin_minors(&p, &ring).unwrap();
        assert_eq!(m[0], Poly::parse("w2*(w3 + v^4) - w3*v^2", &ring).unwrap());
        assert_eq!(m[1], Poly::parse("w2*w1 - v^5", &ring).unwrap());
        assert_eq!(m[2], Poly::parse("w3*w1 - (w3 + v^4)*v^3", &ring).unwrap());
        // substituting v_ij -> v in the general minors gives the same three
        let general = determinantal_minors(&p, Field::Rationals).unwrap();
        let wv = general[0].ring().clone();
        let images: Vec<Poly> =
            wv.vars().names().iter().map(|n| if n.starts_with('v') { Poly::var(&ring, "v").unwrap() } else { Poly::var(&ring, n).unwrap() }).collect();
        let moved: Vec<Poly> = general.iter().map(|g| g.compose(&ring, &images).unwrap()).collect();
        assert_eq!(moved, m);
    }

    #[test]
    fn zero_budget_is_inconclusive() {
        let p = arms(2, 2, 2);
        let r = verify_conjecture(&p, Field::Prime(65521), &Budget::pairs(0)).unwrap();
        assert_eq!(r.status, ConjectureStatus::Inconclusive);
        assert!(r.minors_vanish_exact);
    }
}
