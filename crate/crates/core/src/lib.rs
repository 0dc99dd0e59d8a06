//! Exact symbolic machinery for deformed reconstruction algebras of
//! three-armed star quivers: sparse polynomials, a Buchberger engine, the
//! quiver and its stability, chart presentations with smoothness
//! certificates, and the invariant-ring / determinantal checks.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charts;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod poly;
pub mod quiver;
pub mod reconstruction;

pub use groebner::{Budget, DimensionReport, GbStats, GroebnerBasis, Ideal};
pub use error::{Error, Exhausted, Inconclusive, PolyError, Result};
pub use poly::{rat, Coeff, Field, Monomial, MonomialOrder, Poly, Rational, Ring, VarTable, DEFAULT_PRIME};
