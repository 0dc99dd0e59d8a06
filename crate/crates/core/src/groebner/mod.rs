//! Gröbner bases, normal forms, membership, elimination and dimension.

pub(crate) mod arith;
mod dimension;
mod engine;
mod text;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Inconclusive, PolyError, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Poly, Ring, VarTable};
use arith::with_arith;
use engine::Engine;

pub use dimension::DimensionReport;
pub use text::{parse_ideal_text, write_ideal_text, ParsedIdeal};

/// Resource caps for one basis computation. `None` means unlimited.
#[derive(Clone, Copy, Default)]
pub struct Budget<'a> {
    pub max_pairs: Option<u64>,
    pub max_degree: Option<u32>,
    /// Polled once per S-pair; returning `true` stops the computation.
    pub interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
}

impl fmt::Debug for Budget<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Budget")
            .field("max_pairs", &self.max_pairs)
            .field("max_degree", &self.max_degree)
            .field("interrupt", &self.interrupt.is_some())
            .finish()
    }
}

impl<'a> Budget<'a> {
    pub const UNLIMITED: Budget<'static> = Budget { max_pairs: None, max_degree: None, interrupt: None };

    pub fn pairs(cap: u64) -> Budget<'static> {
        Budget { max_pairs: Some(cap), ..Budget::UNLIMITED }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub max_pair_degree: u32,
    pub basis_size: usize,
}

/// A reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    polys: Vec<Poly>,
    leading: Vec<Monomial>,
    stats: GbStats,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.polys == other.polys
    }
}

impl GroebnerBasis {
    pub fn compute(ring: &Arc<Ring>, order: &MonomialOrder, gens: &[Poly], budget: &Budget) -> Result<GroebnerBasis> {
        check_inputs(ring, order, gens)?;
        let (polys, leading, stats) = with_arith!(ring.field(), |a| {
            let eng = Engine::new(a, order);
            let rows = gens.iter().map(|g| eng.lift(g)).collect();
            let (rows, stats) = eng.groebner(rows, budget)?;
            let leading: Vec<Monomial> = rows.iter().map(|r| r.last().unwrap().0.clone()).collect();
            let polys: Vec<Poly> = rows.into_iter().map(|r| eng.lower(ring, r)).collect();
            (polys, leading, stats)
        });
        Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), polys, leading, stats })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leading.len() == 1 && self.leading[0].is_one()
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly, PolyError> {
        Ok(self.normal_forms(core::slice::from_ref(p))?.pop().unwrap())
    }

    /// Normal forms of several polynomials, lifting the basis once.
    pub fn normal_forms(&self, ps: &[Poly]) -> Result<Vec<Poly>, PolyError> {
        for p in ps {
            same_ring(&self.ring, p.ring())?;
        }
        if self.is_unit() {
            return Ok(ps.iter().map(|_| Poly::zero(&self.ring)).collect());
        }
        Ok(with_arith!(self.ring.field(), |a| {
            let eng = Engine::new(a, &self.order);
            let rows: Vec<_> = self.polys.iter().map(|g| eng.lift(g)).collect();
            ps.iter().map(|p| eng.lower(&self.ring, eng.reduce_by_rows(eng.lift(p), &rows))).collect()
        }))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

fn check_inputs(ring: &Arc<Ring>, order: &MonomialOrder, gens: &[Poly]) -> Result<()> {
    if ring.nvars() == 0 {
        return Err(Error::Invalid("empty variable table".into()));
    }
    if !order.is_valid_for(ring.nvars()) {
        return Err(Error::Invalid("block order does not partition the variables".into()));
    }
    for g in gens {
        same_ring(ring, g.ring())?;
    }
    Ok(())
}

/// A polynomial ideal with a lazily computed reduced Gröbner basis.
pub struct Ideal {
    ring: Arc<Ring>,
    order: MonomialOrder,
    generators: Vec<Poly>,
    basis: OnceBox<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceBox::new();
        if let Some(gb) = self.basis.get() {
            let _ = basis.set(Box::new(gb.clone()));
        }
        Ideal { ring: self.ring.clone(), order: self.order.clone(), generators: self.generators.clone(), basis }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("vars", &self.ring.vars().names())
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, order: MonomialOrder, generators: Vec<Poly>) -> Result<Ideal> {
        check_inputs(ring, &order, &generators)?;
        Ok(Ideal { ring: ring.clone(), order, generators, basis: OnceBox::new() })
    }

    pub fn grevlex(ring: &Arc<Ring>, generators: Vec<Poly>) -> Result<Ideal> {
        Ideal::new(ring, MonomialOrder::GrevLex, generators)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn vars(&self) -> &VarTable {
        self.ring.vars()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Same generators under another order; the cache is not carried over.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        Ideal::new(&self.ring, order, self.generators.clone())
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.basis.get()
    }

    pub fn basis(&self, budget: &Budget) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb);
        }
        let gb = GroebnerBasis::compute(&self.ring, &self.order, &self.generators, budget)?;
        let _ = self.basis.set(Box::new(gb));
        Ok(self.basis.get().unwrap())
    }

    pub fn normal_form(&self, p: &Poly, budget: &Budget) -> Result<Poly> {
        Ok(self.basis(budget)?.normal_form(p)?)
    }

    pub fn contains(&self, p: &Poly, budget: &Budget) -> Result<bool> {
        same_ring(&self.ring, p.ring())?;
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.basis(budget)?.contains(p)?)
    }

    pub fn contains_one(&self, budget: &Budget) -> Result<bool> {
        Ok(self.basis(budget)?.is_unit())
    }

    /// `I ∩ k[remaining variables]`, on the reduced variable table under grevlex.
    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S], budget: &Budget) -> Result<Ideal> {
        let mut idx = Vec::with_capacity(drop.len());
        for name in drop {
            idx.push(self.ring.vars().require(name.as_ref())?);
        }
        idx.sort_unstable();
        idx.dedup();
        let keep: Vec<String> = (0..self.ring.nvars())
            .filter(|v| idx.binary_search(v).is_err())
            .map(|v| String::from(self.ring.vars().name(v)))
            .collect();
        if keep.is_empty() {
            return Err(Error::Invalid("cannot eliminate every variable".into()));
        }
        let target = Ring::new(VarTable::new(&keep)?, self.ring.field());
        if idx.is_empty() {
            let gens = self.generators.iter().map(|g| g.to_ring(&target)).collect::<Result<Vec<_>, _>>()?;
            return Ideal::grevlex(&target, gens);
        }
        let order = MonomialOrder::elimination(self.ring.nvars(), &idx);
        let gb = GroebnerBasis::compute(&self.ring, &order, &self.generators, budget)?;
        let mut gens = Vec::new();
        for (g, lt) in gb.polys.iter().zip(&gb.leading) {
            // under an elimination order the leading term sees the dropped variables first
            if idx.iter().all(|&v| lt.exponent(v) == 0) {
                gens.push(g.to_ring(&target)?);
            }
        }
        Ideal::grevlex(&target, gens)
    }

    pub fn krull_dimension(&self, budget: &Budget) -> Result<DimensionReport> {
        let gb = self.basis(budget)?;
        dimension::from_leading(self.ring.vars(), gb.is_unit(), &gb.leading)
    }

    /// Equality of ideals via reduced bases under `self`'s order.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        let mine = self.basis(budget)?;
        let theirs_owned;
        let theirs = if other.order == self.order {
            other.basis(budget)?
        } else {
            theirs_owned = GroebnerBasis::compute(&other.ring, &self.order, &other.generators, budget)?;
            &theirs_owned
        };
        Ok(mine.polys == theirs.polys)
    }
}

/// Converts a budget failure into the inconclusive payload, passing other errors through.
pub fn inconclusive_of(e: &Error) -> Option<Inconclusive> {
    match e {
        Error::Inconclusive(i) => Some(*i),
        _ => None,
    }
}
