use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::dyck::{chain_diagram, chain_from_first, increasing_diagrams};
use crate::staircase::graph::{CoxGraph, GraphKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }
}

/// The restriction `{B ∩ S_n}` of a fully supported increasing or
/// decreasing diagram on `Γ_{n+1}` to `Γ_n`.
///
/// Blocks are listed from the one containing `s_1`; the chain runs upward
/// from it when increasing and downward when decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrokenStaircase {
    n: usize,
    blocks: Vec<u64>,
    direction: Direction,
}

impl BrokenStaircase {
    /// Checks that some diagram on `Γ_{n+1}` restricts to the given chain.
    pub fn new(n: usize, blocks: Vec<u64>, direction: Direction) -> Result<Self> {
        let graph = CoxGraph::path(n)?;
        if blocks.is_empty() || blocks.iter().any(|&b| b == 0 || b & !graph.full_mask() != 0) {
            return Err(Error::InvalidDiagram("broken staircase blocks must be nonempty subsets of the path".into()));
        }
        let b = BrokenStaircase { n, blocks, direction };
        let preimages = b.unbreak_unchecked()?;
        let ok = preimages.iter().all(|d| d.is_valid())
            && preimages.iter().all(|d| break_staircase(d, direction).as_ref() == Ok(&b));
        if !ok {
            return Err(Error::InvalidDiagram("not the restriction of a staircase diagram".into()));
        }
        Ok(b)
    }

    pub(crate) fn from_parts(n: usize, blocks: Vec<u64>, direction: Direction) -> Self {
        BrokenStaircase { n, blocks, direction }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// The last block sits inside the one before it.
    pub fn has_broken_tail(&self) -> bool {
        let m = self.blocks.len();
        m >= 2 && self.blocks[m - 1] & !self.blocks[m - 2] == 0
    }

    /// Without a broken tail the chain is itself a staircase diagram on `Γ_n`.
    pub fn as_diagram(&self) -> Option<StaircaseDiagram> {
        if self.has_broken_tail() {
            return None;
        }
        let graph = CoxGraph::path(self.n).expect("valid length");
        Some(chain_diagram(graph, self.blocks.clone(), self.direction))
    }

    /// Same blocks with the opposite order.
    pub fn flip(&self) -> Self {
        BrokenStaircase { direction: self.direction.opposite(), ..self.clone() }
    }

    /// The one or two diagrams on `Γ_{n+1}` restricting to this chain. A
    /// broken tail is extended to `s_{n+1}`; otherwise either the last block
    /// is extended or a block `{s_{n+1}}` is added at the end of the chain.
    pub fn unbreak(&self) -> Vec<StaircaseDiagram> {
        self.unbreak_unchecked().expect("validated on construction")
    }

    fn unbreak_unchecked(&self) -> Result<Vec<StaircaseDiagram>> {
        let graph = CoxGraph::path(self.n + 1)?;
        let top = CoxGraph::bit(self.n + 1);
        let m = self.blocks.len();
        let mut extended = self.blocks.clone();
        extended[m - 1] |= top;
        let mut out = vec![chain_diagram(graph, extended, self.direction)];
        if !self.has_broken_tail() {
            let mut appended = self.blocks.clone();
            appended.push(top);
            out.push(chain_diagram(graph, appended, self.direction));
        }
        Ok(out)
    }

    /// Every broken staircase on `Γ_n` running in `direction`: each
    /// increasing diagram on `Γ_n`, plus each of those followed by a broken
    /// block `[s_a, s_n]` strictly inside the last block.
    pub fn all(n: usize, direction: Direction) -> Result<Vec<BrokenStaircase>> {
        let mut out = Vec::new();
        for d in increasing_diagrams(n)? {
            let chain = chain_from_first(&d, Direction::Increasing).expect("increasing");
            let last = *chain.last().expect("nonempty");
            let start = last.trailing_zeros() as usize;
            out.push(BrokenStaircase { n, blocks: chain.clone(), direction });
            for a in start + 1..=n {
                let mut blocks = chain.clone();
                blocks.push(d.graph().interval(a, n)?);
                out.push(BrokenStaircase { n, blocks, direction });
            }
        }
        Ok(out)
    }
}

/// Restricts `d ∈ M^±(n+1)` to `Γ_n`.
pub fn break_staircase(d: &StaircaseDiagram, direction: Direction) -> Result<BrokenStaircase> {
    let g = d.graph();
    if g.kind != GraphKind::Path || g.n < 2 {
        return Err(Error::InvalidDiagram("breaking needs a path with at least two vertices".into()));
    }
    if !d.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    let chain = chain_from_first(d, direction).ok_or(Error::NotIncreasing)?;
    let n = g.n - 1;
    let keep = CoxGraph::path(n)?.full_mask();
    let blocks = chain.iter().map(|b| b & keep).filter(|&b| b != 0).collect();
    Ok(BrokenStaircase { n, blocks, direction })
}
