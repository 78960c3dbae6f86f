use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
        }
    }
}

/// The line graph `Γ_n` on `s_1..s_n` or the cycle `Γ̃_n` on `s_0..s_{n-1}`.
///
/// Vertex subsets are `u64` masks with bit `i` standing for `s_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxGraph {
    pub kind: GraphKind,
    pub n: usize,
}

impl CoxGraph {
    pub fn path(n: usize) -> Result<Self> {
        if !(1..=63).contains(&n) {
            return Err(Error::InvalidPeriod(n));
        }
        Ok(CoxGraph { kind: GraphKind::Path, n })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if !(2..=64).contains(&n) {
            return Err(Error::InvalidPeriod(n));
        }
        Ok(CoxGraph { kind: GraphKind::Cycle, n })
    }

    pub fn new(kind: GraphKind, n: usize) -> Result<Self> {
        match kind {
            GraphKind::Path => Self::path(n),
            GraphKind::Cycle => Self::cycle(n),
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == GraphKind::Cycle
    }

    /// Smallest vertex label: 1 on a path, 0 on a cycle.
    pub fn first(&self) -> usize {
        match self.kind {
            GraphKind::Path => 1,
            GraphKind::Cycle => 0,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        self.first()..self.first() + self.n
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= self.first() && v < self.first() + self.n
    }

    pub fn full_mask(&self) -> u64 {
        let ones = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        ones << self.first()
    }

    pub fn bit(v: usize) -> u64 {
        1u64 << v
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        match self.kind {
            GraphKind::Path => a.abs_diff(b) == 1,
            GraphKind::Cycle => a != b && ((a + 1) % self.n == b || (b + 1) % self.n == a),
        }
    }

    /// Edges `(s, t)` with `s ~ t`, each listed once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self.kind {
            GraphKind::Path => (1..self.n).map(|i| (i, i + 1)).collect(),
            GraphKind::Cycle if self.n == 2 => vec![(0, 1)],
            GraphKind::Cycle => (0..self.n).map(|i| (i, (i + 1) % self.n)).collect(),
        }
    }

    /// Whether `mask` induces a nonempty connected subgraph.
    pub fn is_connected(&self, mask: u64) -> bool {
        if mask == 0 || mask & !self.full_mask() != 0 {
            return false;
        }
        match self.kind {
            GraphKind::Path => {
                let m = mask >> mask.trailing_zeros();
                m & m.wrapping_add(1) == 0
            }
            GraphKind::Cycle => mask == self.full_mask() || self.run_starts(mask).len() == 1,
        }
    }

    fn run_starts(&self, mask: u64) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| mask & Self::bit(i) != 0 && mask & Self::bit((i + self.n - 1) % self.n) == 0)
            .collect()
    }

    /// Endpoints `(i, j)` of a connected proper mask read left to right, so
    /// that the mask is `[s_i, s_j]` (wrapping through `s_0` on a cycle).
    pub fn endpoints(&self, mask: u64) -> Option<(usize, usize)> {
        if !self.is_connected(mask) {
            return None;
        }
        match self.kind {
            GraphKind::Path => {
                Some((mask.trailing_zeros() as usize, 63 - mask.leading_zeros() as usize))
            }
            GraphKind::Cycle if mask == self.full_mask() => None,
            GraphKind::Cycle => {
                let start = self.run_starts(mask)[0];
                let len = mask.count_ones() as usize;
                Some((start, (start + len - 1) % self.n))
            }
        }
    }

    /// The interval `[s_i, s_j]`; on a cycle it wraps when `i > j`.
    pub fn interval(&self, i: usize, j: usize) -> Result<u64> {
        if !self.contains_vertex(i) {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if !self.contains_vertex(j) {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        let mut mask = 0u64;
        match self.kind {
            GraphKind::Path => {
                if i > j {
                    return Err(Error::InvalidDiagram(format!("empty interval [{i}, {j}]")));
                }
                for v in i..=j {
                    mask |= Self::bit(v);
                }
            }
            GraphKind::Cycle => {
                let len = (j + self.n - i) % self.n + 1;
                for k in 0..len {
                    mask |= Self::bit((i + k) % self.n);
                }
            }
        }
        Ok(mask)
    }

    /// Vertices of `mask` in left to right order; a connected cycle mask is
    /// listed from its left endpoint.
    pub fn ordered_vertices(&self, mask: u64) -> Vec<usize> {
        match self.endpoints(mask) {
            Some((i, _)) if self.is_cycle() => {
                (0..mask.count_ones() as usize).map(|k| (i + k) % self.n).collect()
            }
            _ => self.vertices().filter(|&v| mask & Self::bit(v) != 0).collect(),
        }
    }

    /// Maximal connected pieces of `mask`, each listed left to right.
    pub fn components(&self, mask: u64) -> Vec<u64> {
        if mask == 0 {
            return Vec::new();
        }
        if self.is_cycle() && mask == self.full_mask() {
            return vec![mask];
        }
        let starts: Vec<usize> = match self.kind {
            GraphKind::Path => self
                .vertices()
                .filter(|&v| mask & Self::bit(v) != 0 && (v == 1 || mask & Self::bit(v - 1) == 0))
                .collect(),
            GraphKind::Cycle => self.run_starts(mask),
        };
        starts
            .into_iter()
            .map(|s| {
                let mut comp = 0u64;
                let mut v = s;
                while self.contains_vertex(v) && mask & Self::bit(v) != 0 && comp & Self::bit(v) == 0 {
                    comp |= Self::bit(v);
                    v = match self.kind {
                        GraphKind::Path => v + 1,
                        GraphKind::Cycle => (v + 1) % self.n,
                    };
                }
                comp
            })
            .collect()
    }

    pub fn label(&self) -> String {
        match self.kind {
            GraphKind::Path => format!("path {}", self.n),
            GraphKind::Cycle => format!("cycle {}", self.n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_connectivity() {
        let g = CoxGraph::cycle(10).unwrap();
        let wrap = g.interval(7, 1).unwrap();
        assert!(g.is_connected(wrap));
        assert_eq!(g.endpoints(wrap), Some((7, 1)));
        assert_eq!(g.ordered_vertices(wrap), vec![7, 8, 9, 0, 1]);
        assert!(!g.is_connected(CoxGraph::bit(1) | CoxGraph::bit(3)));
        assert!(g.is_connected(g.full_mask()));
        assert_eq!(g.endpoints(g.full_mask()), None);
    }

    #[test]
    fn path_connectivity() {
        let g = CoxGraph::path(3).unwrap();
        assert!(!g.is_connected(CoxGraph::bit(1) | CoxGraph::bit(3)));
        assert!(g.is_connected(g.full_mask()));
        assert!(!g.is_connected(CoxGraph::bit(0)));
        assert_eq!(g.endpoints(g.full_mask()), Some((1, 3)));
    }

    #[test]
    fn two_cycle_has_one_edge() {
        let g = CoxGraph::cycle(2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(g.adjacent(0, 1));
        assert!(g.is_connected(0b11));
    }

    #[test]
    fn components_wrap() {
        let g = CoxGraph::cycle(6).unwrap();
        let mask = CoxGraph::bit(5) | CoxGraph::bit(0) | CoxGraph::bit(2);
        let comps = g.components(mask);
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&(CoxGraph::bit(5) | CoxGraph::bit(0))));
    }
}
