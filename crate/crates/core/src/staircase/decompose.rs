use crate::error::{Error, Result};
use crate::staircase::broken::{BrokenStaircase, Direction};
use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::dyck::{chain_diagram, chain_from_first};
use crate::staircase::graph::{CoxGraph, GraphKind};

/// Alternating broken staircases around the cycle, with a marked vertex
/// (a label `1..=n_last` of the last piece) that becomes `s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleDecomposition {
    pub pieces: Vec<BrokenStaircase>,
    pub marked: usize,
}

/// Alternating broken staircases along the path ending with a decreasing
/// one, followed by a fully supported increasing diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineDecomposition {
    pub broken: Vec<BrokenStaircase>,
    pub last: StaircaseDiagram,
}

struct Piece {
    len: usize,
    blocks: Vec<u64>,
    direction: Direction,
    broken_tail: bool,
}

impl From<&BrokenStaircase> for Piece {
    fn from(b: &BrokenStaircase) -> Self {
        Piece { len: b.n(), blocks: b.blocks().to_vec(), direction: b.direction(), broken_tail: b.has_broken_tail() }
    }
}

/// Lays pieces side by side on positions `0..n`. Blocks in a piece are
/// chained in its direction. At each junction a broken tail merges with the
/// next piece's first block; otherwise the last block is related to that
/// first block in the piece's direction.
fn glue(pieces: &[Piece], cyclic: bool) -> (Vec<u64>, Vec<(usize, usize)>) {
    let mut masks = Vec::new();
    let mut relations = Vec::new();
    let mut ends = Vec::with_capacity(pieces.len());
    let mut start = 0usize;
    let ordered = |d: Direction, a: usize, b: usize| match d {
        Direction::Increasing => (a, b),
        Direction::Decreasing => (b, a),
    };
    for piece in pieces {
        let first = masks.len();
        for &b in &piece.blocks {
            // local bit v (1-based) sits at position start + v - 1
            masks.push((b >> 1) << start);
        }
        for id in first + 1..masks.len() {
            relations.push(ordered(piece.direction, id - 1, id));
        }
        ends.push((first, masks.len() - 1));
        start += piece.len;
    }
    let count = pieces.len();
    let mut parent: Vec<usize> = (0..masks.len()).collect();
    for j in 0..count {
        let next = if j + 1 == count {
            if !cyclic {
                break;
            }
            0
        } else {
            j + 1
        };
        let (last, target) = (ends[j].1, ends[next].0);
        if pieces[j].broken_tail {
            parent[last] = target;
        } else {
            relations.push(ordered(pieces[j].direction, last, target));
        }
    }
    let root = |mut i: usize| {
        while parent[i] != i {
            i = parent[i];
        }
        i
    };
    let mut compact = vec![usize::MAX; masks.len()];
    let mut merged: Vec<u64> = Vec::new();
    for (i, slot) in compact.iter_mut().enumerate() {
        if root(i) == i {
            *slot = merged.len();
            merged.push(0);
        }
    }
    for (i, &mask) in masks.iter().enumerate() {
        merged[compact[root(i)]] |= mask;
    }
    let relations = relations
        .into_iter()
        .map(|(a, b)| (compact[root(a)], compact[root(b)]))
        .filter(|(a, b)| a != b)
        .collect();
    (merged, relations)
}

fn relabel(mask: u64, map: impl Fn(usize) -> usize) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let pos = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= CoxGraph::bit(map(pos));
    }
    out
}

fn check_alternating(pieces: &[BrokenStaircase]) -> Result<()> {
    if pieces.windows(2).any(|w| w[1].direction() != w[0].direction().opposite()) {
        return Err(Error::InvalidInput("piece directions must alternate".into()));
    }
    Ok(())
}

/// Glues alternating broken staircases into a fully supported spherical
/// diagram on `Γ̃_n`, labelling vertices from the one after the marked vertex.
pub fn cycle_glue(decomposition: &CycleDecomposition) -> Result<StaircaseDiagram> {
    let pieces = &decomposition.pieces;
    if pieces.len() < 2 || !pieces.len().is_multiple_of(2) {
        return Err(Error::InvalidInput("a cycle needs a positive even number of pieces".into()));
    }
    check_alternating(pieces)?;
    let n: usize = pieces.iter().map(|p| p.n()).sum();
    let graph = CoxGraph::cycle(n)?;
    let last_len = pieces.last().expect("nonempty").n();
    if !(1..=last_len).contains(&decomposition.marked) {
        return Err(Error::IndexOutOfRange { index: decomposition.marked, n: last_len });
    }
    let marked_pos = n - last_len + decomposition.marked - 1;
    let parts: Vec<Piece> = pieces.iter().map(Piece::from).collect();
    let (masks, relations) = glue(&parts, true);
    let masks = masks.into_iter().map(|m| relabel(m, |pos| (pos + 2 * n - marked_pos - 1) % n)).collect();
    StaircaseDiagram::from_masks(graph, masks, &relations)
}

/// Glues broken staircases followed by an increasing diagram into a fully
/// supported diagram on a path.
pub fn line_glue(decomposition: &LineDecomposition) -> Result<StaircaseDiagram> {
    let broken = &decomposition.broken;
    check_alternating(broken)?;
    if broken.last().is_some_and(|b| b.direction() != Direction::Decreasing) {
        return Err(Error::InvalidInput("the last broken staircase must be decreasing".into()));
    }
    let last = &decomposition.last;
    if last.graph().kind != GraphKind::Path || !last.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    let chain = chain_from_first(last, Direction::Increasing).ok_or(Error::NotIncreasing)?;
    let mut parts: Vec<Piece> = broken.iter().map(Piece::from).collect();
    parts.push(Piece { len: last.graph().n, blocks: chain, direction: Direction::Increasing, broken_tail: false });
    let n = parts.iter().map(|p| p.len).sum();
    let graph = CoxGraph::path(n)?;
    let (masks, relations) = glue(&parts, false);
    let masks = masks.into_iter().map(|m| m << 1).collect();
    StaircaseDiagram::from_masks(graph, masks, &relations)
}

fn check_input(d: &StaircaseDiagram, kind: GraphKind) -> Result<()> {
    if d.graph().kind != kind {
        return Err(Error::InvalidDiagram(format!("expected a diagram on a {}", kind.name())));
    }
    if !d.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    if !d.is_spherical() {
        return Err(Error::NotSpherical);
    }
    d.validate().map_err(|v| Error::InvalidDiagram(v.to_string()))
}

/// Leftmost vertex of block `i` lying in no other block.
fn leftmost_private(d: &StaircaseDiagram, i: usize) -> Result<usize> {
    let others = d.blocks().iter().enumerate().filter(|&(j, _)| j != i).fold(0u64, |acc, (_, &b)| acc | b);
    d.graph()
        .ordered_vertices(d.blocks()[i])
        .into_iter()
        .find(|&v| others & CoxGraph::bit(v) == 0)
        .ok_or_else(|| Error::InvalidDiagram(format!("extremal block {i} has no private vertex")))
}

fn is_extremal(d: &StaircaseDiagram, i: usize) -> bool {
    d.below(i) == 0 || d.above(i) == 0
}

/// Restriction of the diagram to the segment of `len` vertices starting at
/// `start`, as blocks on `Γ_len` ordered by left endpoint.
fn segment_blocks(d: &StaircaseDiagram, start: usize, len: usize, vertex: impl Fn(usize) -> usize) -> Vec<u64> {
    let mut blocks: Vec<u64> = d
        .blocks()
        .iter()
        .map(|&b| {
            (0..len).filter(|&k| b & CoxGraph::bit(vertex(start + k)) != 0).fold(0u64, |acc, k| acc | 1u64 << (k + 1))
        })
        .filter(|&b| b != 0)
        .collect();
    blocks.sort_by_key(|b| b.trailing_zeros());
    blocks
}

fn piece_direction(d: &StaircaseDiagram, extremal: usize) -> Direction {
    if d.above(extremal) == 0 && d.below(extremal) != 0 {
        Direction::Decreasing
    } else {
        Direction::Increasing
    }
}

/// Cuts a fully supported spherical diagram on `Γ̃_n` at the leftmost
/// private vertex of each extremal block.
pub fn cycle_decompose(d: &StaircaseDiagram) -> Result<CycleDecomposition> {
    check_input(d, GraphKind::Cycle)?;
    let n = d.graph().n;
    let mut cuts = Vec::new();
    for i in (0..d.len()).filter(|&i| is_extremal(d, i)) {
        cuts.push((leftmost_private(d, i)?, i));
    }
    cuts.sort_unstable();
    let m = cuts.len();
    if m < 2 || m % 2 != 0 {
        return Err(Error::InvalidDiagram(format!("{m} extremal blocks on a cycle")));
    }
    let mut pieces = Vec::with_capacity(m);
    for j in 0..m {
        let (c, block) = cuts[j];
        let next = cuts[(j + 1) % m].0;
        let len = (next + n - c) % n;
        let blocks = segment_blocks(d, c, len, |p| p % n);
        pieces.push(BrokenStaircase::from_parts(len, blocks, piece_direction(d, block)));
    }
    let marked = (n - 1 + n - cuts[m - 1].0) % n + 1;
    Ok(CycleDecomposition { pieces, marked })
}

/// Cuts a fully supported diagram on `Γ_n` at the leftmost private vertex of
/// each extremal block up to the last minimal one.
pub fn line_decompose(d: &StaircaseDiagram) -> Result<LineDecomposition> {
    check_input(d, GraphKind::Path)?;
    let n = d.graph().n;
    let mut extremal: Vec<usize> = (0..d.len()).filter(|&i| is_extremal(d, i)).collect();
    extremal.sort_by_key(|&i| d.blocks()[i].trailing_zeros());
    let m = extremal
        .iter()
        .rposition(|&i| d.below(i) == 0)
        .ok_or_else(|| Error::InvalidDiagram("no minimal block".into()))?;
    let cuts: Vec<usize> = extremal[..=m].iter().map(|&i| leftmost_private(d, i)).collect::<Result<_>>()?;
    let mut broken = Vec::with_capacity(m);
    for j in 0..m {
        let len = cuts[j + 1] - cuts[j];
        let blocks = segment_blocks(d, cuts[j], len, |v| v);
        broken.push(BrokenStaircase::from_parts(len, blocks, piece_direction(d, extremal[j])));
    }
    let len = n + 1 - cuts[m];
    let graph = CoxGraph::path(len)?;
    let last = chain_diagram(graph, segment_blocks(d, cuts[m], len, |v| v), Direction::Increasing);
    Ok(LineDecomposition { broken, last })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_diagram(n: usize, blocks: &[(usize, usize)], relations: &[(usize, usize)]) -> StaircaseDiagram {
        let g = CoxGraph::cycle(n).unwrap();
        let masks = blocks.iter().map(|&(i, j)| g.interval(i, j).unwrap()).collect();
        StaircaseDiagram::from_masks(g, masks, relations).unwrap()
    }

    #[test]
    fn four_extremal_blocks() {
        // [1,3] < [3,4] < [5,6] > [6,7] > [7,8] < [9,1], with [1,3] < [9,1]
        let d = cycle_diagram(
            10,
            &[(1, 3), (3, 4), (5, 6), (6, 7), (7, 8), (9, 1)],
            &[(0, 1), (1, 2), (3, 2), (4, 3), (4, 5), (0, 5)],
        );
        assert_eq!(d.validate(), Ok(()));
        let dec = cycle_decompose(&d).unwrap();
        assert_eq!(dec.pieces.len(), 4);
        let sizes: Vec<usize> = dec.pieces.iter().map(|p| p.n()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 10);
        for p in &dec.pieces {
            assert!(BrokenStaircase::new(p.n(), p.blocks().to_vec(), p.direction()).is_ok(), "{p:?}");
        }
        assert_eq!(cycle_glue(&dec).unwrap(), d);
    }

    #[test]
    fn figure_diagram_has_two_pieces() {
        let d = cycle_diagram(10, &[(0, 3), (7, 1), (5, 7), (3, 6)], &[(0, 1), (1, 2), (2, 3)]);
        let dec = cycle_decompose(&d).unwrap();
        assert_eq!(dec.pieces.len(), 2);
        assert_eq!(cycle_glue(&dec).unwrap(), d);
    }

    #[test]
    fn two_cycle_singletons() {
        let d = cycle_diagram(2, &[(0, 0), (1, 1)], &[(0, 1)]);
        let dec = cycle_decompose(&d).unwrap();
        assert_eq!(dec.pieces.len(), 2);
        assert_eq!(cycle_glue(&dec).unwrap(), d);
    }

    #[test]
    fn decreasing_pair_on_a_line() {
        let g = CoxGraph::path(2).unwrap();
        let d = StaircaseDiagram::new(g, &[vec![1], vec![2]], &[(1, 0)]).unwrap();
        let dec = line_decompose(&d).unwrap();
        assert_eq!(dec.broken.len(), 1);
        assert_eq!(dec.broken[0].direction(), Direction::Decreasing);
        assert_eq!(dec.last.len(), 1);
        assert_eq!(line_glue(&dec).unwrap(), d);
    }

    #[test]
    fn single_block_line() {
        let g = CoxGraph::path(4).unwrap();
        let d = StaircaseDiagram::from_masks(g, vec![g.full_mask()], &[]).unwrap();
        let dec = line_decompose(&d).unwrap();
        assert!(dec.broken.is_empty());
        assert_eq!(dec.last, d);
    }

    #[test]
    fn rejects_partial_support() {
        let g = CoxGraph::cycle(3).unwrap();
        let d = StaircaseDiagram::new(g, &[vec![0]], &[]).unwrap();
        assert_eq!(cycle_decompose(&d), Err(Error::NotFullySupported));
        let full = StaircaseDiagram::from_masks(g, vec![g.full_mask()], &[]).unwrap();
        assert_eq!(cycle_decompose(&full), Err(Error::NotSpherical));
    }
}
