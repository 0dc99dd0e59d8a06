//! The canonical relation, the deformed relation system, the parameter
//! space Δ and the representation ideal at dimension vector (1,…,1).

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Field, Poly, Rational, Ring};
use crate::quiver::{ArmParams, StarQuiver};

/// Deformation parameters, accessed by name only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformParams {
    pub gamma1: Vec<Rational>,
    pub gamma2: Vec<Rational>,
    pub gamma3: Vec<Rational>,
    pub a: Rational,
    pub b: Rational,
    pub big_a: Rational,
    pub big_b: Rational,
}

fn sum(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// Uniform rational with numerator in `[-h, h]` and denominator in `[1, h]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Rational {
    let h = height.max(1) as i64;
    let n: i64 = rng.gen_range(-h..=h);
    let d: i64 = rng.gen_range(1..=h);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Rational {
    loop {
        let r = random_rational(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

impl DeformParams {
    pub fn zero(p: &ArmParams) -> DeformParams {
        let z = |n: usize| alloc::vec![Rational::zero(); n];
        DeformParams {
            gamma1: z(p.p(1) - 1),
            gamma2: z(p.p(2) - 1),
            gamma3: z(p.p(3) - 1),
            a: Rational::zero(),
            b: Rational::zero(),
            big_a: Rational::zero(),
            big_b: Rational::zero(),
        }
    }

    /// Free coordinates drawn at random, `a` and `b` solved from the two
    /// defining equations of Δ.
    pub fn random_in_delta<R: Rng + ?Sized>(p: &ArmParams, rng: &mut R, height: u32) -> DeformParams {
        let mut g = DeformParams::zero(p);
        for arm in 1..=3 {
            for x in g.gamma_mut(arm).iter_mut() {
                *x = random_rational(rng, height);
            }
        }
        g.big_a = random_rational(rng, height);
        g.big_b = random_rational(rng, height);
        g.a = -(sum(&g.gamma1) - sum(&g.gamma2) + &g.big_a);
        g.b = -(sum(&g.gamma3) - sum(&g.gamma2) + &g.big_b);
        g
    }

    /// A point of Δ pushed off by a nonzero shift of `a`, `b`, or both.
    pub fn random_not_in_delta<R: Rng + ?Sized>(p: &ArmParams, rng: &mut R, height: u32) -> DeformParams {
        let mut g = DeformParams::random_in_delta(p, rng, height);
        match rng.gen_range(0..3) {
            0 => g.a += random_nonzero(rng, height),
            1 => g.b += random_nonzero(rng, height),
            _ => {
                g.a += random_nonzero(rng, height);
                g.b += random_nonzero(rng, height);
            }
        }
        g
    }

    pub fn gamma(&self, arm: usize) -> &[Rational] {
        match arm {
            1 => &self.gamma1,
            2 => &self.gamma2,
            _ => &self.gamma3,
        }
    }

    pub fn gamma_mut(&mut self, arm: usize) -> &mut Vec<Rational> {
        match arm {
            1 => &mut self.gamma1,
            2 => &mut self.gamma2,
            _ => &mut self.gamma3,
        }
    }

    /// `γ_{arm,l}` for `1 ≤ l ≤ p_arm − 1`.
    pub fn g(&self, arm: usize, l: usize) -> &Rational {
        &self.gamma(arm)[l - 1]
    }

    /// `Σ_{m=from}^{to} γ_{arm,m}`, zero for an empty range.
    pub fn range_sum(&self, arm: usize, from: usize, to: usize) -> Rational {
        (from..=to).fold(Rational::zero(), |acc, m| acc + self.g(arm, m))
    }

    pub fn check_shape(&self, p: &ArmParams) -> Result<()> {
        for arm in 1..=3 {
            if self.gamma(arm).len() != p.p(arm) - 1 {
                return Err(Error::ParamShape(format!(
                    "gamma{arm} has {} entries, expected {}",
                    self.gamma(arm).len(),
                    p.p(arm) - 1
                )));
            }
        }
        Ok(())
    }

    pub fn coordinate_count(&self) -> usize {
        self.gamma1.len() + self.gamma2.len() + self.gamma3.len() + 4
    }

    /// The two linear forms cutting out Δ:
    /// `Σγ₁ − Σγ₂ + A + a` and `Σγ₃ − Σγ₂ + B + b`.
    pub fn delta_forms(&self) -> (Rational, Rational) {
        let s2 = sum(&self.gamma2);
        (
            sum(&self.gamma1) - &s2 + &self.big_a + &self.a,
            sum(&self.gamma3) - &s2 + &self.big_b + &self.b,
        )
    }

    pub fn in_delta(&self) -> bool {
        let (f, g) = self.delta_forms();
        f.is_zero() && g.is_zero()
    }

    /// `Σγ₁ − Σγ₃ + (A − B) + (a − b)`, which vanishes on Δ.
    pub fn third_form(&self) -> Rational {
        sum(&self.gamma1) - sum(&self.gamma3) + (&self.big_a - &self.big_b) + (&self.a - &self.b)
    }

    /// All coordinates, in the named order γ₁, γ₂, γ₃, a, b, A, B.
    pub fn coordinates(&self) -> Vec<(String, Rational)> {
        let mut out = Vec::new();
        for arm in 1..=3 {
            for (l, x) in self.gamma(arm).iter().enumerate() {
                out.push((format!("gamma{arm}_{}", l + 1), x.clone()));
            }
        }
        out.push((String::from("a"), self.a.clone()));
        out.push((String::from("b"), self.b.clone()));
        out.push((String::from("A"), self.big_a.clone()));
        out.push((String::from("B"), self.big_b.clone()));
        out
    }
}

/// Labels of the deformed relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationLabel {
    /// `u_rl·d_rl − d_r,l+1·u_r,l+1 − γ_rl`.
    Arm(usize, usize),
    A,
    B,
    C,
    D,
    /// The canonical relation `D₁ − D₂ + D₃`.
    X,
}

impl core::fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RelationLabel::Arm(r, l) => write!(f, "({r}.{l})"),
            RelationLabel::A => f.write_str("(a)"),
            RelationLabel::B => f.write_str("(b)"),
            RelationLabel::C => f.write_str("(c)"),
            RelationLabel::D => f.write_str("(d)"),
            RelationLabel::X => f.write_str("(x)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationSystem {
    pub ring: Arc<Ring>,
    pub relations: Vec<(RelationLabel, Poly)>,
}

impl RelationSystem {
    pub fn polys(&self) -> Vec<Poly> {
        self.relations.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, label: RelationLabel) -> Option<&Poly> {
        self.relations.iter().find(|(l, _)| *l == label).map(|(_, p)| p)
    }
}

/// `D₁ − D₂ + D₃` over `ring`.
pub fn canonical_relation(q: &StarQuiver, ring: &Arc<Ring>) -> Poly {
    &(&q.down_path(ring, 1) - &q.down_path(ring, 2)) + &q.down_path(ring, 3)
}

fn constant(ring: &Arc<Ring>, r: &Rational) -> Result<Poly> {
    Ok(Poly::from_rational(ring, r)?)
}

pub fn deformed_relations(q: &StarQuiver, gamma: &DeformParams, field: Field) -> Result<RelationSystem> {
    let p = q.arms();
    gamma.check_shape(&p)?;
    let ring = q.arrow_ring(field);
    let cyc = |arm: usize, j: usize| &q.d(&ring, arm, j) * &q.u(&ring, arm, j);
    let mut relations = Vec::new();
    for r in 1..=3 {
        for l in 1..p.p(r) {
            let f = &(&cyc(r, l) - &cyc(r, l + 1)) - &constant(&ring, gamma.g(r, l))?;
            relations.push((RelationLabel::Arm(r, l), f));
        }
    }
    let (p1, p2, p3) = (p.p(1), p.p(2), p.p(3));
    relations.push((RelationLabel::A, &(&cyc(2, 1) - &cyc(1, 1)) - &constant(&ring, &gamma.a)?));
    relations.push((RelationLabel::B, &(&cyc(2, 1) - &cyc(3, 1)) - &constant(&ring, &gamma.b)?));
    relations.push((RelationLabel::C, &(&cyc(1, p1) - &cyc(2, p2)) - &constant(&ring, &gamma.big_a)?));
    relations.push((RelationLabel::D, &(&cyc(3, p3) - &cyc(2, p2)) - &constant(&ring, &gamma.big_b)?));
    relations.push((RelationLabel::X, canonical_relation(q, &ring)));
    Ok(RelationSystem { ring, relations })
}

/// The ideal of the representation space of the deformed algebra at (1,…,1).
pub fn rep_ideal(q: &StarQuiver, gamma: &DeformParams, field: Field) -> Result<Ideal> {
    let sys = deformed_relations(q, gamma, field)?;
    Ideal::grevlex(&sys.ring, sys.polys())
}

/// The two telescoping sums `Σ(1) − Σ(2) + (a) + (c)` and
/// `Σ(3) − Σ(2) + (b) + (d)` of the relation polynomials.
pub fn telescoping_sums(sys: &RelationSystem) -> (Poly, Poly) {
    let ring = &sys.ring;
    let mut first = Poly::zero(ring);
    let mut second = Poly::zero(ring);
    for (label, f) in &sys.relations {
        match label {
            RelationLabel::Arm(1, _) => first = &first + f,
            RelationLabel::Arm(2, _) => {
                first = &first - f;
                second = &second - f;
            }
            RelationLabel::Arm(_, _) => second = &second + f,
            RelationLabel::A | RelationLabel::C => first = &first + f,
            RelationLabel::B | RelationLabel::D => second = &second + f,
            RelationLabel::X => {}
        }
    }
    (first, second)
}

/// `-(form)` as a constant, matching the sign of [`telescoping_sums`].
pub fn negated_constant(ring: &Arc<Ring>, r: &Rational) -> Result<Poly> {
    constant(ring, &-r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Budget;
    use crate::poly::rat;
    use rand::SeedableRng;

    fn quiver() -> StarQuiver {
        StarQuiver::new(ArmParams::new(2, 2, 2).unwrap())
    }

    #[test]
    fn canonical_relation_shape() {
        let q = quiver();
        let r = q.arrow_ring(Field::Rationals);
        assert_eq!(canonical_relation(&q, &r), Poly::parse("d1_1*d1_2 - d2_1*d2_2 + d3_1*d3_2", &r).unwrap());
    }

    #[test]
    fn relation_counts_and_labels() {
        let q = quiver();
        let mut g = DeformParams::zero(&q.arms());
        let sys = deformed_relations(&q, &g, Field::Rationals).unwrap();
        assert_eq!(sys.relations.len(), 8);
        for (label, f) in &sys.relations {
            // at p = (2,2,2) the canonical relation is quadratic as well
            assert!(f.terms().iter().all(|(m, _)| m.degree() == 2), "{label}");
        }
        let q4 = StarQuiver::new(ArmParams::new(4, 3, 2).unwrap());
        let sys4 = deformed_relations(&q4, &DeformParams::zero(&q4.arms()), Field::Rationals).unwrap();
        let x = sys4.get(RelationLabel::X).unwrap();
        let mut degrees: Vec<u32> = x.terms().iter().map(|(m, _)| m.degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [2, 3, 4]);
        g.a = rat(5, 1);
        let sys = deformed_relations(&q, &g, Field::Rationals).unwrap();
        let expect = Poly::parse("d2_1*u2_1 - d1_1*u1_1 - 5", &sys.ring).unwrap();
        assert_eq!(sys.get(RelationLabel::A), Some(&expect));
        g.gamma1.push(rat(1, 1));
        assert!(matches!(deformed_relations(&q, &g, Field::Rationals), Err(Error::ParamShape(_))));
    }

    #[test]
    fn delta_examples() {
        let p = ArmParams::new(2, 2, 2).unwrap();
        let mut g = DeformParams::zero(&p);
        assert!(g.in_delta());
        g.gamma1[0] = rat(1, 1);
        assert!(!g.in_delta());
        g.a = rat(-1, 1);
        assert!(g.in_delta());
        assert!(g.third_form().is_zero());
        assert_eq!(g.coordinate_count(), p.total() + 1);
    }

    #[test]
    fn empty_fibre_off_delta() {
        let q = quiver();
        let mut g = DeformParams::zero(&q.arms());
        g.gamma1[0] = rat(1, 1);
        let i = rep_ideal(&q, &g, Field::Rationals).unwrap();
        assert_eq!(i.generators().len(), 8);
        assert!(i.contains_one(&Budget::UNLIMITED).unwrap());
    }

    #[test]
    fn telescoping_matches_delta_forms() {
        let p = ArmParams::new(3, 2, 4).unwrap();
        let q = StarQuiver::new(p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = DeformParams::random_not_in_delta(&p, &mut rng, 10);
        let sys = deformed_relations(&q, &g, Field::Rationals).unwrap();
        let (s1, s2) = telescoping_sums(&sys);
        let (f1, f2) = g.delta_forms();
        assert_eq!(s1, negated_constant(&sys.ring, &f1).unwrap());
        assert_eq!(s2, negated_constant(&sys.ring, &f2).unwrap());
    }
}
