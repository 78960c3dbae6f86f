use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::staircase::broken::Direction;
use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::graph::{CoxGraph, GraphKind};

/// A Dyck path as runs `(r_i, u_i)`: `r_i` right steps then `u_i` up steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    steps: Vec<(usize, usize)>,
}

impl DyckPath {
    pub fn new(steps: Vec<(usize, usize)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidDyckPath("no steps".into()));
        }
        let (mut right, mut up) = (0usize, 0usize);
        for &(r, u) in &steps {
            if r == 0 || u == 0 {
                return Err(Error::InvalidDyckPath(format!("run ({r}, {u}) is not positive")));
            }
            right += r;
            up += u;
            if up > right {
                return Err(Error::InvalidDyckPath("path crosses the diagonal".into()));
            }
        }
        if right != up {
            return Err(Error::InvalidDyckPath(format!("ends at ({right}, {up})")));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    /// Semilength `n`.
    pub fn size(&self) -> usize {
        self.steps.iter().map(|s| s.0).sum()
    }

    /// All Dyck paths of semilength `n`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        extend_paths(n, 0, 0, &mut current, &mut out);
        out
    }
}

fn extend_paths(
    n: usize,
    right: usize,
    up: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<DyckPath>,
) {
    for r in 1..=n - right {
        let reach = right + r;
        let ups: Vec<usize> = if reach == n { vec![n - up] } else { (1..=reach - up).collect() };
        for u in ups {
            current.push((r, u));
            if reach == n {
                out.push(DyckPath { steps: current.clone() });
            } else {
                extend_paths(n, reach, up + u, current, out);
            }
            current.pop();
        }
    }
}

/// Blocks of a chain diagram read from the block containing `s_1`, when
/// the diagram is a single chain running in `direction` from that block.
pub(crate) fn chain_from_first(d: &StaircaseDiagram, direction: Direction) -> Option<Vec<u64>> {
    let mut chain = d.as_chain()?;
    if direction == Direction::Decreasing {
        chain.reverse();
    }
    let first = *chain.first()?;
    (d.blocks()[first] & CoxGraph::bit(1) != 0).then(|| chain.iter().map(|&i| d.blocks()[i]).collect())
}

/// Chain diagram `B_1 ≺ B_2 ≺ ...` (or `≻` when decreasing).
pub(crate) fn chain_diagram(graph: CoxGraph, blocks: Vec<u64>, direction: Direction) -> StaircaseDiagram {
    let relations: Vec<(usize, usize)> = (1..blocks.len())
        .map(|i| match direction {
            Direction::Increasing => (i - 1, i),
            Direction::Decreasing => (i, i - 1),
        })
        .collect();
    StaircaseDiagram::from_masks(graph, blocks, &relations).expect("chain relations are acyclic")
}

/// The path `P(D)` of a fully supported increasing diagram on `Γ_n`.
pub fn to_dyck(d: &StaircaseDiagram) -> Result<DyckPath> {
    if d.graph().kind != GraphKind::Path {
        return Err(Error::InvalidDiagram("Dyck paths are defined for path graphs".into()));
    }
    if !d.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    let chain = chain_from_first(d, Direction::Increasing).ok_or(Error::NotIncreasing)?;
    let m = chain.len();
    let at = |i: usize| if i < m { chain[i] } else { 0 };
    let steps = (0..m)
        .map(|i| {
            let prev = if i == 0 { 0 } else { chain[i - 1] };
            ((chain[i] & !prev).count_ones() as usize, (chain[i] & !at(i + 1)).count_ones() as usize)
        })
        .collect();
    DyckPath::new(steps)
}

/// Inverse of [`to_dyck`]: `B_i = {s_j : u_1 + .. + u_{i-1} < j <= r_1 + .. + r_i}`.
pub fn from_dyck(p: &DyckPath) -> Result<StaircaseDiagram> {
    let graph = CoxGraph::path(p.size())?;
    let (mut right, mut up) = (0usize, 0usize);
    let mut blocks = Vec::with_capacity(p.steps.len());
    for &(r, u) in &p.steps {
        right += r;
        blocks.push(graph.interval(up + 1, right)?);
        up += u;
    }
    Ok(chain_diagram(graph, blocks, Direction::Increasing))
}

/// Fully supported increasing staircase diagrams on `Γ_n`.
pub fn increasing_diagrams(n: usize) -> Result<Vec<StaircaseDiagram>> {
    CoxGraph::path(n)?;
    DyckPath::all(n).iter().map(from_dyck).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let g = CoxGraph::path(6).unwrap();
        let d = StaircaseDiagram::new(g, &[vec![1], vec![2, 3, 4, 5], vec![4, 5, 6]], &[(0, 1), (1, 2)])
            .unwrap();
        assert!(d.is_valid());
        let p = to_dyck(&d).unwrap();
        assert_eq!(p.steps(), &[(1, 1), (4, 2), (1, 3)]);
        assert_eq!(from_dyck(&p).unwrap(), d);
    }

    #[test]
    fn single_block() {
        let g = CoxGraph::path(4).unwrap();
        let d = StaircaseDiagram::from_masks(g, vec![g.full_mask()], &[]).unwrap();
        assert_eq!(to_dyck(&d).unwrap().steps(), &[(4, 4)]);
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate().skip(1) {
            assert_eq!(DyckPath::all(n).len(), c, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_paths() {
        assert!(DyckPath::new(vec![(1, 2), (1, 0)]).is_err());
        assert!(DyckPath::new(vec![(1, 2), (1, 1)]).is_err());
        assert!(DyckPath::new(vec![(2, 1)]).is_err());
        assert!(DyckPath::new(vec![(1, 1), (0, 1)]).is_err());
    }

    #[test]
    fn decreasing_is_not_increasing() {
        let g = CoxGraph::path(2).unwrap();
        let d = StaircaseDiagram::new(g, &[vec![1], vec![2]], &[(1, 0)]).unwrap();
        assert_eq!(to_dyck(&d), Err(Error::NotIncreasing));
        let partial = StaircaseDiagram::new(g, &[vec![1]], &[]).unwrap();
        assert_eq!(to_dyck(&partial), Err(Error::NotFullySupported));
    }
}
