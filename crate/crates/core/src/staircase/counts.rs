use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::series::SeriesKind;
use crate::staircase::broken::{BrokenStaircase, Direction};
use crate::staircase::enumerate::{enumerate_full_cycle, enumerate_full_path, enumerate_increasing};
use crate::staircase::graph::CoxGraph;

/// Largest `n` [`count_by_enumeration`] accepts for path-built and
/// cycle-built counts.
pub const MAX_COUNT_PATH: usize = 11;
pub const MAX_COUNT_CYCLE: usize = 10;

/// Coefficients of the generating functions obtained by listing diagrams.
///
/// Fully supported path counts are memoized, so asking for consecutive `n`
/// is cheap.
#[derive(Default)]
pub struct DiagramCounter {
    full_path: HashMap<usize, u64>,
}

impl DiagramCounter {
    pub fn new() -> Self {
        Self::default()
    }

    fn f(&mut self, n: usize) -> Result<u64> {
        if let Some(&c) = self.full_path.get(&n) {
            return Ok(c);
        }
        let c = enumerate_full_path(n)?.len() as u64;
        self.full_path.insert(n, c);
        Ok(c)
    }

    /// Coefficient of `t^n` in `kind`, counted from enumerated diagrams.
    ///
    /// Spherical diagrams on a cycle that miss some vertex are counted as
    /// products of fully supported path diagrams on the components of their
    /// support.
    pub fn count(&mut self, kind: SeriesKind, n: usize) -> Result<u64> {
        if !kind.in_domain(n) {
            return Err(Error::InvalidInput(format!("{} has no count at n = {n}", kind.name())));
        }
        let (limit, what) = match kind {
            SeriesKind::A | SeriesKind::ABar => (MAX_COUNT_CYCLE, "cycle"),
            _ => (MAX_COUNT_PATH, "path"),
        };
        if n > limit {
            return Err(Error::BudgetExceeded(format!("{what} enumeration is limited to n <= {limit}")));
        }
        match kind {
            SeriesKind::AM => Ok(enumerate_increasing(n)?.len() as u64),
            SeriesKind::AB => Ok(BrokenStaircase::all(n, Direction::Increasing)?.len() as u64),
            SeriesKind::AF => self.f(n),
            SeriesKind::ABar if n == 1 => Ok(0),
            SeriesKind::ABar => Ok(enumerate_full_cycle(n)?.len() as u64),
            SeriesKind::AStar => (1..n).map(|k| self.f(k)).sum(),
            SeriesKind::A => {
                let graph = CoxGraph::cycle(n)?;
                let full = graph.full_mask();
                let mut total = enumerate_full_cycle(n)?.len() as u64;
                for support in 0..full {
                    let mut product = 1u64;
                    for component in graph.components(support) {
                        product *= self.f(component.count_ones() as usize)?;
                    }
                    total += product;
                }
                Ok(total)
            }
        }
    }
}

/// One-shot form of [`DiagramCounter::count`].
pub fn count_by_enumeration(kind: SeriesKind, n: usize) -> Result<u64> {
    DiagramCounter::new().count(kind, n)
}
