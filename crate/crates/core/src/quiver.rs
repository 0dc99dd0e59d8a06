//! The three-armed double star quiver, its path products, torus weights,
//! stability of supports and the chart conditions.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{product, Field, Monomial, Poly, Ring, VarTable};

/// Arm lengths `(p1, p2, p3)`, each at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArmParams([usize; 3]);

impl ArmParams {
    pub fn new(p1: usize, p2: usize, p3: usize) -> Result<ArmParams> {
        if p1 < 2 || p2 < 2 || p3 < 2 {
            return Err(Error::InvalidArms(p1, p2, p3));
        }
        Ok(ArmParams([p1, p2, p3]))
    }

    /// Length of arm `arm` (1-based).
    pub fn p(&self, arm: usize) -> usize {
        self.0[arm - 1]
    }

    pub fn as_array(&self) -> [usize; 3] {
        self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for ArmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for ArmParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<ArmParams> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Invalid(format!("expected three comma-separated arm lengths, got `{s}`")));
        }
        let mut p = [0usize; 3];
        for (slot, part) in p.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| Error::Invalid(format!("bad arm length `{part}`")))?;
        }
        ArmParams::new(p[0], p[1], p[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// The extended (0th) vertex.
    Extended,
    /// `Arm(i, k)`: the k-th vertex on arm i, `1 ≤ k ≤ p_i − 1`.
    Arm(usize, usize),
    Bottom,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Extended => f.write_str("0"),
            Vertex::Arm(i, k) => write!(f, "{i}.{k}"),
            Vertex::Bottom => f.write_str("bottom"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub direction: Direction,
    pub arm: usize,
    pub index: usize,
    pub tail: Vertex,
    pub head: Vertex,
    pub name: String,
}

/// Names of arrow variables, `d{arm}_{j}` and `u{arm}_{j}`.
pub fn arrow_name(direction: Direction, arm: usize, j: usize) -> String {
    match direction {
        Direction::Down => format!("d{arm}_{j}"),
        Direction::Up => format!("u{arm}_{j}"),
    }
}

/// A chart `U^k_{i,j}`: arm `k` has `D_k` scaled to 1, `i` and `j` index the
/// other two arms in increasing arm order. `U^k_{i,j} = V^k_{i−1,j−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChartId {
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

impl ChartId {
    /// The two arms other than `k`, in increasing order.
    pub fn others(k: usize) -> (usize, usize) {
        match k {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        }
    }

    pub fn arms(&self) -> (usize, usize) {
        ChartId::others(self.k)
    }

    pub fn check(&self, p: &ArmParams) -> Result<()> {
        let ok = (1..=3).contains(&self.k) && {
            let (s, t) = self.arms();
            (1..=p.p(s)).contains(&self.i) && (1..=p.p(t)).contains(&self.j)
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ChartOutOfRange(format!("{self} for p = ({p})")))
        }
    }

    /// All charts, ordered by `k`, then `i`, then `j`.
    pub fn all(p: &ArmParams) -> Vec<ChartId> {
        let mut out = Vec::new();
        for k in 1..=3 {
            let (s, t) = ChartId::others(k);
            for i in 1..=p.p(s) {
                for j in 1..=p.p(t) {
                    out.push(ChartId { k, i, j });
                }
            }
        }
        out
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{}({},{})", self.k, self.i, self.j)
    }
}

impl FromStr for ChartId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ChartId> {
        let bad = || Error::Invalid(format!("bad chart id `{s}`, expected U<k>(<i>,<j>)"));
        let rest = s.trim().strip_prefix('U').ok_or_else(bad)?;
        let (k, rest) = rest.split_once('(').ok_or_else(bad)?;
        let (i, j) = rest.strip_suffix(')').and_then(|r| r.split_once(',')).ok_or_else(bad)?;
        Ok(ChartId {
            k: k.trim().parse().map_err(|_| bad())?,
            i: i.trim().parse().map_err(|_| bad())?,
            j: j.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// Zero/nonzero pattern of a representation, one flag per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Support(pub Vec<bool>);

impl Support {
    pub fn all(n: usize, value: bool) -> Support {
        Support(alloc::vec![value; n])
    }

    /// Support from the low bits of `bits`, arrow `a` ↔ bit `a`.
    pub fn from_bits(n: usize, bits: u64) -> Support {
        Support((0..n).map(|a| bits >> a & 1 == 1).collect())
    }
}

#[derive(Clone, Debug)]
pub struct PathProducts {
    pub down: [Poly; 3],
    pub up: [Poly; 3],
    pub two_cycles: Vec<Poly>,
}

#[derive(Clone, Debug)]
pub struct StarQuiver {
    arms: ArmParams,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    theta: Vec<i64>,
    vars: VarTable,
    ends: Vec<(usize, usize)>,
}

impl StarQuiver {
    pub fn new(arms: ArmParams) -> StarQuiver {
        let mut vertices = alloc::vec![Vertex::Extended];
        for i in 1..=3 {
            for k in 1..arms.p(i) {
                vertices.push(Vertex::Arm(i, k));
            }
        }
        vertices.push(Vertex::Bottom);

        let mut arrows = Vec::new();
        for i in 1..=3 {
            let p = arms.p(i);
            let node = |k: usize| match k {
                0 => Vertex::Extended,
                k if k == p => Vertex::Bottom,
                k => Vertex::Arm(i, k),
            };
            for direction in [Direction::Down, Direction::Up] {
                for j in 1..=p {
                    let (tail, head) = match direction {
                        Direction::Down => (node(j - 1), node(j)),
                        Direction::Up => (node(j), node(j - 1)),
                    };
                    arrows.push(Arrow { direction, arm: i, index: j, tail, head, name: arrow_name(direction, i, j) });
                }
            }
        }

        let mut theta = alloc::vec![1i64; vertices.len()];
        theta[0] = -((arms.total() as i64 - 3) + 1);
        let names: Vec<&str> = arrows.iter().map(|a| a.name.as_str()).collect();
        let vars = VarTable::new(&names).expect("arrow names are valid identifiers");
        let index = |v: Vertex| vertices.iter().position(|&w| w == v).unwrap();
        let ends = arrows.iter().map(|a| (index(a.tail), index(a.head))).collect();
        StarQuiver { arms, vertices, arrows, theta, vars, ends }
    }

    pub fn arms(&self) -> ArmParams {
        self.arms
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// The generic stability parameter, negative at the extended vertex.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn arrow_vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn arrow_ring(&self, field: Field) -> Arc<Ring> {
        Ring::new(self.vars.clone(), field)
    }

    pub fn vertex_index(&self, v: Vertex) -> usize {
        self.vertices.iter().position(|&w| w == v).expect("vertex of this quiver")
    }

    pub fn arrow_index(&self, direction: Direction, arm: usize, j: usize) -> usize {
        let mut base = 0;
        for i in 1..arm {
            base += 2 * self.arms.p(i);
        }
        base + j - 1 + if direction == Direction::Up { self.arms.p(arm) } else { 0 }
    }

    /// Arrow variable as a polynomial over `ring`, which must carry the
    /// arrow names.
    pub fn d(&self, ring: &Arc<Ring>, arm: usize, j: usize) -> Poly {
        Poly::var(ring, &arrow_name(Direction::Down, arm, j)).expect("ring carries arrow variables")
    }

    pub fn u(&self, ring: &Arc<Ring>, arm: usize, j: usize) -> Poly {
        Poly::var(ring, &arrow_name(Direction::Up, arm, j)).expect("ring carries arrow variables")
    }

    /// `D_i = d_i1 ⋯ d_ip_i` over `ring`.
    pub fn down_path(&self, ring: &Arc<Ring>, arm: usize) -> Poly {
        let factors: Vec<Poly> = (1..=self.arms.p(arm)).map(|j| self.d(ring, arm, j)).collect();
        product(ring, &factors)
    }

    /// `U_i = u_ip_i ⋯ u_i1` over `ring`.
    pub fn up_path(&self, ring: &Arc<Ring>, arm: usize) -> Poly {
        let factors: Vec<Poly> = (1..=self.arms.p(arm)).map(|j| self.u(ring, arm, j)).collect();
        product(ring, &factors)
    }

    /// 2-cycles `d_ij u_ij`, ordered by arm then index.
    pub fn two_cycles(&self, ring: &Arc<Ring>) -> Vec<Poly> {
        let mut out = Vec::new();
        for i in 1..=3 {
            for j in 1..=self.arms.p(i) {
                out.push(&self.d(ring, i, j) * &self.u(ring, i, j));
            }
        }
        out
    }

    pub fn path_products(&self, ring: &Arc<Ring>) -> PathProducts {
        PathProducts {
            down: [self.down_path(ring, 1), self.down_path(ring, 2), self.down_path(ring, 3)],
            up: [self.up_path(ring, 1), self.up_path(ring, 2), self.up_path(ring, 3)],
            two_cycles: self.two_cycles(ring),
        }
    }

    /// Torus weight of a monomial in the arrow variables (table order).
    pub fn torus_weight(&self, m: &Monomial) -> Vec<i64> {
        let mut w = alloc::vec![0i64; self.vertices.len()];
        for a in m.support() {
            let e = m.exponent(a) as i64;
            let (t, h) = self.ends[a];
            w[h] += e;
            w[t] -= e;
        }
        w
    }

    /// Torus weights of every term of `f`, which must live over a ring whose
    /// variables are exactly the arrows.
    pub fn poly_weights(&self, f: &Poly) -> Result<Vec<Vec<i64>>> {
        if f.ring().vars() != &self.vars {
            return Err(crate::error::PolyError::MismatchedVars.into());
        }
        Ok(f.terms().iter().map(|(m, _)| self.torus_weight(m)).collect())
    }

    /// Equal in- and out-degree at every vertex, counted with multiplicity.
    pub fn is_balanced(&self, m: &Monomial) -> bool {
        let n = self.vertices.len();
        let (mut ins, mut outs) = (alloc::vec![0u64; n], alloc::vec![0u64; n]);
        for a in m.support() {
            let e = m.exponent(a) as u64;
            let (t, h) = self.ends[a];
            ins[h] += e;
            outs[t] += e;
        }
        ins == outs
    }

    /// `(tail, head)` vertex indices of every arrow.
    pub fn arrow_ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    /// Every vertex reachable from the extended vertex along nonzero arrows.
    pub fn is_stable_support(&self, s: &Support) -> bool {
        let n = self.vertices.len();
        let mut seen = alloc::vec![false; n];
        seen[0] = true;
        let mut count = 1;
        let mut changed = true;
        while changed {
            changed = false;
            for (a, &(t, h)) in self.ends.iter().enumerate() {
                if s.0[a] && seen[t] && !seen[h] {
                    seen[h] = true;
                    count += 1;
                    changed = true;
                }
            }
        }
        count == n
    }

    fn nonzero(&self, s: &Support, direction: Direction, arm: usize, j: usize) -> bool {
        s.0[self.arrow_index(direction, arm, j)]
    }

    /// The arrows that a chart scales to 1, as `(direction, arm, index)`.
    pub fn unit_arrows(&self, c: &ChartId) -> Vec<(Direction, usize, usize)> {
        let mut out = Vec::new();
        for l in 1..=self.arms.p(c.k) {
            out.push((Direction::Down, c.k, l));
        }
        let (s, t) = c.arms();
        for (arm, idx) in [(s, c.i), (t, c.j)] {
            for l in 1..idx {
                out.push((Direction::Down, arm, l));
            }
            for l in idx + 1..=self.arms.p(arm) {
                out.push((Direction::Up, arm, l));
            }
        }
        out
    }

    /// Whether `s` satisfies the defining nonzero-conditions of chart `c`.
    pub fn in_chart(&self, s: &Support, c: &ChartId) -> bool {
        self.unit_arrows(c).into_iter().all(|(dir, arm, j)| self.nonzero(s, dir, arm, j))
    }

    /// All charts whose conditions hold for `s`; purely combinatorial.
    pub fn chart_supports(&self, s: &Support) -> Vec<ChartId> {
        ChartId::all(&self.arms).into_iter().filter(|c| self.in_chart(s, c)).collect()
    }
}
