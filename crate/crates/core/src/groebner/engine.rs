//! Buchberger's algorithm with the Gebauer–Möller pair update (coprime and
//! chain criteria) and the normal selection strategy.
//!
//! Rows are stored in ascending monomial order so the leading term is the
//! last element and can be popped in O(1) during reduction.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::arith::Arith;
use super::{Budget, GbStats};
use crate::error::{Exhausted, Inconclusive};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};

pub(crate) type Row<E> = Vec<(Monomial, E)>;
type Outcome<E> = Result<(Vec<Row<E>>, GbStats), Inconclusive>;

pub(crate) struct Engine<'o, A: Arith> {
    pub arith: A,
    pub order: &'o MonomialOrder,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Working basis: rows are monic, `active` lists the indices of the current
/// minimal generators.
pub(crate) struct Basis<E> {
    pub rows: Vec<Row<E>>,
    pub lts: Vec<Monomial>,
    pub active: Vec<usize>,
}

impl<E> Basis<E> {
    fn new() -> Self {
        Basis { rows: Vec::new(), lts: Vec::new(), active: Vec::new() }
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        self.active.iter().copied().find(|&i| self.lts[i].divides(m))
    }
}

impl<'o, A: Arith> Engine<'o, A> {
    pub fn new(arith: A, order: &'o MonomialOrder) -> Self {
        Engine { arith, order }
    }

    #[inline]
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn lift(&self, p: &Poly) -> Row<A::E> {
        let mut row: Row<A::E> = p.terms().iter().map(|(m, c)| (m.clone(), self.arith.lift(c))).collect();
        row.sort_by(|a, b| self.cmp(&a.0, &b.0));
        row
    }

    pub fn lower(&self, ring: &Arc<Ring>, row: Row<A::E>) -> Poly {
        Poly::from_terms(ring, row.into_iter().map(|(m, e)| (m, self.arith.lower(e))))
    }

    fn make_monic(&self, row: &mut Row<A::E>) {
        if let Some((_, lc)) = row.last() {
            if self.arith.is_one(lc) {
                return;
            }
            let inv = self.arith.inv(lc);
            for (_, c) in row.iter_mut() {
                *c = self.arith.mul(c, &inv);
            }
        }
    }

    /// `a - c * q * g`, all ascending.
    fn sub_scaled(&self, a: Row<A::E>, c: &A::E, q: &Monomial, g: &[(Monomial, A::E)]) -> Row<A::E> {
        let ar = &self.arith;
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut a = a.into_iter().peekable();
        let mut g = g.iter();
        let mut pending: Option<(Monomial, &A::E)> = None;
        loop {
            if pending.is_none() {
                pending = g.next().map(|(m, x)| (m.mul(q), x));
            }
            match (a.peek(), pending.as_ref()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (m, x) = pending.take().unwrap();
                    out.push((m, ar.neg(&ar.mul(c, x))));
                }
                (Some((ma, _)), Some((mg, _))) => match self.cmp(ma, mg) {
                    Ordering::Less => out.push(a.next().unwrap()),
                    Ordering::Greater => {
                        let (m, x) = pending.take().unwrap();
                        out.push((m, ar.neg(&ar.mul(c, x))));
                    }
                    Ordering::Equal => {
                        let (m, x) = a.next().unwrap();
                        let (_, y) = pending.take().unwrap();
                        let s = ar.sub_mul(&x, c, y);
                        if !ar.is_zero(&s) {
                            out.push((m, s));
                        }
                    }
                },
            }
        }
        out
    }

    /// Full reduction of `p` modulo the active rows of `basis`.
    pub fn reduce(&self, mut p: Row<A::E>, basis: &Basis<A::E>) -> Row<A::E> {
        let mut rem: Row<A::E> = Vec::new();
        while let Some((m, c)) = p.pop() {
            match basis.find_divisor(&m) {
                Some(gi) => {
                    let g = &basis.rows[gi];
                    let q = m.div(&basis.lts[gi]);
                    p = self.sub_scaled(p, &c, &q, &g[..g.len() - 1]);
                }
                None => rem.push((m, c)),
            }
        }
        rem.reverse();
        rem
    }

    /// Reduction modulo a finished list of monic rows.
    pub fn reduce_by_rows(&self, p: Row<A::E>, rows: &[Row<A::E>]) -> Row<A::E> {
        let basis = Basis {
            lts: rows.iter().map(|r| r.last().unwrap().0.clone()).collect(),
            active: (0..rows.len()).collect(),
            rows: rows.to_vec(),
        };
        self.reduce(p, &basis)
    }

    fn spoly(&self, f: &Row<A::E>, g: &Row<A::E>, lcm: &Monomial) -> Row<A::E> {
        let (lf, lg) = (&f.last().unwrap().0, &g.last().unwrap().0);
        let qf = lcm.div(lf);
        let qg = lcm.div(lg);
        let one = self.arith.one();
        let head: Row<A::E> = f[..f.len() - 1].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        self.sub_scaled(head, &one, &qg, &g[..g.len() - 1])
    }

    fn update(&self, basis: &mut Basis<A::E>, pairs: &mut Vec<Pair>, row: Row<A::E>) {
        let h = basis.rows.len();
        let lt_h = row.last().unwrap().0.clone();
        let cands: Vec<(usize, Monomial)> =
            basis.active.iter().map(|&g| (g, basis.lts[g].lcm(&lt_h))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g1, l1)) in cands.iter().enumerate() {
            let coprime = lt_h.is_coprime(&basis.lts[*g1]);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l1))
                || kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        let fresh = kept
            .into_iter()
            .filter(|(g, _)| !lt_h.is_coprime(&basis.lts[*g]))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm });
        pairs.retain(|p| {
            !(lt_h.divides(&p.lcm)
                && basis.lts[p.i].lcm(&lt_h) != p.lcm
                && basis.lts[p.j].lcm(&lt_h) != p.lcm)
        });
        pairs.extend(fresh);
        basis.active.retain(|&g| !lt_h.divides(&basis.lts[g]));
        basis.active.push(h);
        basis.lts.push(lt_h);
        basis.rows.push(row);
    }

    fn select(&self, pairs: &[Pair]) -> usize {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| self.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        best
    }

    /// Reduced Gröbner basis of `input`, each row monic, sorted by leading
    /// monomial ascending.
    pub fn groebner(&self, input: Vec<Row<A::E>>, budget: &Budget) -> Outcome<A::E> {
        let mut stats = GbStats::default();
        let mut basis = Basis::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut input: Vec<Row<A::E>> = input.into_iter().filter(|r| !r.is_empty()).collect();
        input.sort_by(|a, b| self.cmp(&a.last().unwrap().0, &b.last().unwrap().0).then(a.len().cmp(&b.len())));

        let unit = |unit_row: Row<A::E>, stats: GbStats| -> (Vec<Row<A::E>>, GbStats) {
            let mut r = unit_row;
            self.make_monic(&mut r);
            (alloc::vec![r], stats)
        };

        for f in input {
            let mut r = self.reduce(f, &basis);
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            if r.last().unwrap().0.is_one() {
                return Ok(unit(r, stats));
            }
            self.update(&mut basis, &mut pairs, r);
        }

        while !pairs.is_empty() {
            if let Some(stop) = budget.interrupt {
                if stop() {
                    return Err(Inconclusive { reason: Exhausted::Interrupted, pairs_processed: stats.pairs_processed });
                }
            }
            if budget.max_pairs.is_some_and(|cap| stats.pairs_processed >= cap) {
                return Err(Inconclusive { reason: Exhausted::Pairs, pairs_processed: stats.pairs_processed });
            }
            let k = self.select(&pairs);
            let pair = pairs.swap_remove(k);
            let deg = pair.lcm.degree();
            if budget.max_degree.is_some_and(|cap| deg > cap) {
                return Err(Inconclusive { reason: Exhausted::Degree, pairs_processed: stats.pairs_processed });
            }
            stats.pairs_processed += 1;
            stats.max_pair_degree = stats.max_pair_degree.max(deg);
            let s = self.spoly(&basis.rows[pair.i], &basis.rows[pair.j], &pair.lcm);
            let mut r = self.reduce(s, &basis);
            if r.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            self.make_monic(&mut r);
            if r.last().unwrap().0.is_one() {
                return Ok(unit(r, stats));
            }
            self.update(&mut basis, &mut pairs, r);
        }

        // interreduce the minimal basis
        let mut active = basis.active.clone();
        active.sort_by(|&a, &b| self.cmp(&basis.lts[a], &basis.lts[b]));
        let mut out = Vec::with_capacity(active.len());
        for &g in &active {
            let mut row = basis.rows[g].clone();
            let lead = row.pop().unwrap();
            let mut tail = self.reduce(row, &basis);
            tail.push(lead);
            out.push(tail);
        }
        stats.basis_size = out.len();
        Ok((out, stats))
    }
}
