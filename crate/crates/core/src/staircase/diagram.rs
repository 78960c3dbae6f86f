use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::staircase::graph::CoxGraph;

/// A partially ordered family of vertex subsets of a path or cycle.
///
/// Blocks are kept sorted by mask and the order is stored as its strict
/// down-sets, so equal diagrams compare equal regardless of input order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircaseDiagram {
    graph: CoxGraph,
    blocks: Vec<u64>,
    below: Vec<u64>,
}

/// The first failed condition found by [`StaircaseDiagram::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyBlock { block: usize },
    DuplicateBlock { first: usize, second: usize },
    DisconnectedBlock { block: usize },
    DisconnectedCover { lower: usize, upper: usize },
    NotAChain { vertex: usize },
    AdjacentNotAChain { s: usize, t: usize },
    NotSaturated { s: usize, t: usize, vertex: usize },
    NoMinimum { block: usize },
    NoMaximum { block: usize },
}

impl Violation {
    /// Which numbered axiom failed; `None` for empty or repeated blocks.
    pub fn axiom(&self) -> Option<u8> {
        match self {
            Violation::EmptyBlock { .. } | Violation::DuplicateBlock { .. } => None,
            Violation::DisconnectedBlock { .. } | Violation::DisconnectedCover { .. } => Some(1),
            Violation::NotAChain { .. } => Some(2),
            Violation::AdjacentNotAChain { .. } | Violation::NotSaturated { .. } => Some(3),
            Violation::NoMinimum { .. } | Violation::NoMaximum { .. } => Some(4),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyBlock { block } => write!(f, "block {block} is empty"),
            Violation::DuplicateBlock { first, second } => {
                write!(f, "blocks {first} and {second} coincide")
            }
            Violation::DisconnectedBlock { block } => {
                write!(f, "axiom 1: block {block} is not connected")
            }
            Violation::DisconnectedCover { lower, upper } => {
                write!(f, "axiom 1: block {upper} covers block {lower} but their union is not connected")
            }
            Violation::NotAChain { vertex } => {
                write!(f, "axiom 2: blocks containing s{vertex} do not form a chain")
            }
            Violation::AdjacentNotAChain { s, t } => {
                write!(f, "axiom 3: blocks containing s{s} or s{t} do not form a chain")
            }
            Violation::NotSaturated { s, t, vertex } => write!(
                f,
                "axiom 3: blocks containing s{vertex} are not saturated among those containing s{s} or s{t}"
            ),
            Violation::NoMinimum { block } => {
                write!(f, "axiom 4: block {block} is not the minimum of any vertex chain")
            }
            Violation::NoMaximum { block } => {
                write!(f, "axiom 4: block {block} is not the maximum of any vertex chain")
            }
        }
    }
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

impl StaircaseDiagram {
    /// The empty diagram.
    pub fn empty(graph: CoxGraph) -> Self {
        StaircaseDiagram { graph, blocks: Vec::new(), below: Vec::new() }
    }

    /// Builds a diagram from vertex lists and relations `(a, b)` meaning
    /// `blocks[a] ≺ blocks[b]`. The order is the transitive closure of the
    /// relations; a cycle among them is an error.
    pub fn new(graph: CoxGraph, blocks: &[Vec<usize>], relations: &[(usize, usize)]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut mask = 0u64;
            for &v in block {
                if !graph.contains_vertex(v) {
                    return Err(Error::IndexOutOfRange { index: v, n: graph.n });
                }
                mask |= CoxGraph::bit(v);
            }
            masks.push(mask);
        }
        Self::from_masks(graph, masks, relations)
    }

    /// As [`StaircaseDiagram::new`] with blocks given as vertex masks.
    pub fn from_masks(graph: CoxGraph, blocks: Vec<u64>, relations: &[(usize, usize)]) -> Result<Self> {
        let m = blocks.len();
        if m > 64 {
            return Err(Error::InvalidDiagram(format!("{m} blocks exceed the limit of 64")));
        }
        if let Some(&mask) = blocks.iter().find(|&&b| b & !graph.full_mask() != 0) {
            return Err(Error::InvalidDiagram(format!("block {mask:#x} has vertices outside the graph")));
        }
        let mut below = vec![0u64; m];
        for &(a, b) in relations {
            if a >= m || b >= m {
                return Err(Error::MalformedRelation(format!("relation ({a}, {b}) refers to a missing block")));
            }
            below[b] |= 1u64 << a;
        }
        for k in 0..m {
            for i in 0..m {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        if let Some(i) = (0..m).find(|&i| below[i] >> i & 1 == 1) {
            return Err(Error::MalformedRelation(format!("block {i} lies strictly below itself")));
        }
        Ok(Self::canonical(graph, blocks, below))
    }

    fn canonical(graph: CoxGraph, blocks: Vec<u64>, below: Vec<u64>) -> Self {
        let m = blocks.len();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.sort_by_key(|&i| blocks[i]);
        let mut position = vec![0usize; m];
        for (new, &old) in perm.iter().enumerate() {
            position[old] = new;
        }
        let remap = |set: u64| bits(set).fold(0u64, |acc, j| acc | 1u64 << position[j]);
        StaircaseDiagram {
            graph,
            blocks: perm.iter().map(|&i| blocks[i]).collect(),
            below: perm.iter().map(|&i| remap(below[i])).collect(),
        }
    }

    pub fn graph(&self) -> CoxGraph {
        self.graph
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.blocks.binary_search(&mask).ok()
    }

    /// Indices of blocks strictly below block `i`.
    pub fn below(&self, i: usize) -> u64 {
        self.below[i]
    }

    /// Indices of blocks strictly above block `i`.
    pub fn above(&self, i: usize) -> u64 {
        (0..self.len()).filter(|&j| self.below[j] >> i & 1 == 1).fold(0, |acc, j| acc | 1u64 << j)
    }

    /// `blocks[i] ≺ blocks[j]`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.precedes(i, j) || self.precedes(j, i)
    }

    /// Cover relations `(a, b)` with `blocks[a] ⋖ blocks[b]`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            for a in bits(self.below[b]) {
                if bits(self.below[b]).all(|k| self.below[k] >> a & 1 == 0) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn minimal_blocks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.below[i] == 0).collect()
    }

    pub fn maximal_blocks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.above(i) == 0).collect()
    }

    /// Indices of the blocks containing vertex `s`.
    pub fn blocks_containing(&self, s: usize) -> u64 {
        let bit = CoxGraph::bit(s);
        (0..self.len()).filter(|&i| self.blocks[i] & bit != 0).fold(0, |acc, i| acc | 1u64 << i)
    }

    /// Union of all blocks.
    pub fn support(&self) -> u64 {
        self.blocks.iter().fold(0, |acc, b| acc | b)
    }

    pub fn is_fully_supported(&self) -> bool {
        self.support() == self.graph.full_mask()
    }

    /// Every block generates a finite parabolic subgroup; on a cycle this
    /// excludes only the block of all vertices.
    pub fn is_spherical(&self) -> bool {
        !self.graph.is_cycle() || self.blocks.iter().all(|&b| b != self.graph.full_mask())
    }

    /// Same blocks, reversed order.
    pub fn flip(&self) -> Self {
        let below = (0..self.len()).map(|i| self.above(i)).collect();
        StaircaseDiagram { graph: self.graph, blocks: self.blocks.clone(), below }
    }

    /// Whether the blocks form a single chain; returns it bottom to top.
    pub fn as_chain(&self) -> Option<Vec<usize>> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.below[i].count_ones());
        let is_chain = order
            .iter()
            .enumerate()
            .all(|(rank, &i)| self.below[i].count_ones() as usize == rank);
        is_chain.then_some(order)
    }

    /// A linear extension, smallest available index first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(self.len());
        while out.len() < self.len() {
            let next = (0..self.len())
                .find(|&i| placed >> i & 1 == 0 && self.below[i] & !placed == 0)
                .expect("order is acyclic");
            placed |= 1u64 << next;
            out.push(next);
        }
        out
    }

    /// Longest chain of blocks strictly below each block.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.len()];
        for i in self.linear_extension() {
            height[i] = bits(self.below[i]).map(|j| height[j] + 1).max().unwrap_or(0);
        }
        height
    }

    /// Checks the four staircase axioms, plus nonempty and distinct blocks,
    /// and reports the first failure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let m = self.len();
        let g = &self.graph;
        for i in 0..m {
            if self.blocks[i] == 0 {
                return Err(Violation::EmptyBlock { block: i });
            }
            if i > 0 && self.blocks[i] == self.blocks[i - 1] {
                return Err(Violation::DuplicateBlock { first: i - 1, second: i });
            }
        }
        for i in 0..m {
            if !g.is_connected(self.blocks[i]) {
                return Err(Violation::DisconnectedBlock { block: i });
            }
        }
        for (a, b) in self.covers() {
            if !g.is_connected(self.blocks[a] | self.blocks[b]) {
                return Err(Violation::DisconnectedCover { lower: a, upper: b });
            }
        }
        let chains: Vec<u64> = (0..g.first() + g.n).map(|s| self.blocks_containing(s)).collect();
        for s in g.vertices() {
            if !self.is_chain(chains[s]) {
                return Err(Violation::NotAChain { vertex: s });
            }
        }
        for (s, t) in g.edges() {
            let union = chains[s] | chains[t];
            if !self.is_chain(union) {
                return Err(Violation::AdjacentNotAChain { s, t });
            }
            for v in [s, t] {
                if !self.is_convex(chains[v], union) {
                    return Err(Violation::NotSaturated { s, t, vertex: v });
                }
            }
        }
        for i in 0..m {
            let above = self.above(i);
            let vertices: Vec<usize> = bits(self.blocks[i]).collect();
            if !vertices.iter().any(|&s| self.below[i] & chains[s] == 0) {
                return Err(Violation::NoMinimum { block: i });
            }
            if !vertices.iter().any(|&s| above & chains[s] == 0) {
                return Err(Violation::NoMaximum { block: i });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn is_chain(&self, set: u64) -> bool {
        bits(set).all(|i| bits(set).all(|j| self.comparable(i, j)))
    }

    /// No element of `union` outside `sub` lies strictly between two
    /// elements of `sub`.
    fn is_convex(&self, sub: u64, union: u64) -> bool {
        bits(sub).all(|y| bits(self.below[y] & union & !sub).all(|z| self.below[z] & sub == 0))
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            graph: self.graph,
            blocks: self.blocks.iter().map(|&b| self.graph.ordered_vertices(b)).collect(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        let graph = CoxGraph::new(json.graph.kind, json.graph.n)?;
        let relations: Vec<(usize, usize)> = json.covers.iter().map(|&[a, b]| (a, b)).collect();
        Self::new(graph, &json.blocks, &relations)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: DiagramJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("diagram serializes")
    }

    fn block_label(&self, mask: u64) -> String {
        match self.graph.endpoints(mask) {
            Some((i, j)) if i == j => format!("{{s{i}}}"),
            Some((i, j)) => format!("[{i},{j}]"),
            None => {
                let vs: Vec<String> = self.graph.ordered_vertices(mask).iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", vs.join(","))
            }
        }
    }
}

impl fmt::Debug for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|&b| self.block_label(b)).collect();
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{} < {}", blocks[a], blocks[b]))
            .collect();
        write!(f, "Staircase({}; blocks {}; covers {})", self.graph.label(), blocks.join(" "), covers.join(", "))
    }
}

/// Serialized form: `{"graph":{"kind":"cycle","n":10},"blocks":[[..]],"covers":[[a,b]]}`
/// where `[a, b]` means `blocks[a] ≺ blocks[b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub graph: CoxGraph,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default)]
    pub covers: Vec<[usize; 2]>,
}
