use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Monomial, VarTable};

/// Krull dimension with a maximal independent set of variables as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    /// `-1` for the unit ideal.
    pub dimension: i64,
    pub witness: Vec<String>,
}

struct Search<'a> {
    n: usize,
    supports: &'a [u64],
    best: u64,
    best_len: u32,
}

impl Search<'_> {
    fn independent(&self, set: u64) -> bool {
        self.supports.iter().all(|&s| s & !set != 0)
    }

    fn dfs(&mut self, v: usize, set: u64) {
        let len = set.count_ones();
        if len > self.best_len {
            self.best = set;
            self.best_len = len;
        }
        if v == self.n || len + (self.n - v) as u32 <= self.best_len {
            return;
        }
        let with = set | (1u64 << v);
        if self.independent(with) {
            self.dfs(v + 1, with);
        }
        self.dfs(v + 1, set);
    }
}

pub(super) fn from_leading(vars: &VarTable, unit: bool, leading: &[Monomial]) -> Result<DimensionReport> {
    if unit {
        return Ok(DimensionReport { dimension: -1, witness: Vec::new() });
    }
    let n = vars.len();
    if n > 64 {
        return Err(Error::TooManyVariables);
    }
    let supports: Vec<u64> = leading.iter().map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v))).collect();
    let mut search = Search { n, supports: &supports, best: 0, best_len: 0 };
    search.dfs(0, 0);
    let witness = (0..n).filter(|&v| search.best >> v & 1 == 1).map(|v| String::from(vars.name(v))).collect();
    Ok(DimensionReport { dimension: search.best_len as i64, witness })
}
