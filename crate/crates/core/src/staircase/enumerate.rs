use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::staircase::broken::{BrokenStaircase, Direction};
use crate::staircase::decompose::{cycle_glue, line_glue, CycleDecomposition, LineDecomposition};
use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::dyck::increasing_diagrams;
use crate::staircase::graph::{CoxGraph, GraphKind};

/// Largest graphs [`enumerate_diagrams`] will expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_path: usize,
    pub max_cycle: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_path: 12, max_cycle: 8 }
    }
}

/// All compositions of `n` into `parts` positive parts.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(parts - 1) {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

struct Catalog {
    broken: HashMap<(usize, Direction), Vec<BrokenStaircase>>,
    increasing: HashMap<usize, Vec<StaircaseDiagram>>,
    full_path: HashMap<usize, Vec<StaircaseDiagram>>,
}

impl Catalog {
    fn new() -> Self {
        Catalog { broken: HashMap::new(), increasing: HashMap::new(), full_path: HashMap::new() }
    }

    fn broken(&mut self, n: usize, direction: Direction) -> Result<&Vec<BrokenStaircase>> {
        Ok(match self.broken.entry((n, direction)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(BrokenStaircase::all(n, direction)?),
        })
    }

    fn increasing(&mut self, n: usize) -> Result<&Vec<StaircaseDiagram>> {
        Ok(match self.increasing.entry(n) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(increasing_diagrams(n)?),
        })
    }

    fn full_path(&mut self, n: usize) -> Result<&Vec<StaircaseDiagram>> {
        if !self.full_path.contains_key(&n) {
            let all = self.glue_lines(n)?;
            self.full_path.insert(n, all);
        }
        Ok(&self.full_path[&n])
    }

    /// Broken staircases ending decreasing, then an increasing diagram.
    fn glue_lines(&mut self, n: usize) -> Result<Vec<StaircaseDiagram>> {
        let mut out = Vec::new();
        for parts in 1..=n {
            for sizes in compositions(n, parts) {
                let (last_len, broken_sizes) = sizes.split_last().expect("nonempty");
                let k = broken_sizes.len();
                let mut options: Vec<Vec<BrokenStaircase>> = Vec::with_capacity(k);
                for (j, &len) in broken_sizes.iter().enumerate() {
                    let direction =
                        if (k - 1 - j) % 2 == 0 { Direction::Decreasing } else { Direction::Increasing };
                    options.push(self.broken(len, direction)?.clone());
                }
                let lasts = self.increasing(*last_len)?.clone();
                for broken in product(&options) {
                    for last in &lasts {
                        out.push(line_glue(&LineDecomposition { broken: broken.clone(), last: last.clone() })?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Fully supported spherical diagrams on `Γ̃_n`.
    fn glue_cycles(&mut self, n: usize) -> Result<Vec<StaircaseDiagram>> {
        let mut out = Vec::new();
        for pairs in 1..=n / 2 {
            for sizes in compositions(n, 2 * pairs) {
                for first in [Direction::Increasing, Direction::Decreasing] {
                    let mut options = Vec::with_capacity(sizes.len());
                    let mut direction = first;
                    for &len in &sizes {
                        options.push(self.broken(len, direction)?.clone());
                        direction = direction.opposite();
                    }
                    let last_len = *sizes.last().expect("nonempty");
                    for pieces in product(&options) {
                        for marked in 1..=last_len {
                            out.push(cycle_glue(&CycleDecomposition { pieces: pieces.clone(), marked })?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn product<T: Clone>(options: &[Vec<T>]) -> Vec<Vec<T>> {
    options.iter().fold(vec![Vec::new()], |acc, choices| {
        acc.iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect()
    })
}

/// Blocks and cover relations of one diagram placed on a component.
type Placed = (Vec<u64>, Vec<(usize, usize)>);

/// Places fully supported path diagrams on each component of `support`.
fn place_on_components(
    catalog: &mut Catalog,
    graph: CoxGraph,
    support: u64,
) -> Result<Vec<StaircaseDiagram>> {
    let mut options: Vec<Vec<Placed>> = Vec::new();
    for component in graph.components(support) {
        let vertices = graph.ordered_vertices(component);
        let placed = catalog
            .full_path(vertices.len())?
            .iter()
            .map(|d| {
                let masks = d
                    .blocks()
                    .iter()
                    .map(|&b| {
                        vertices
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| b & CoxGraph::bit(k + 1) != 0)
                            .fold(0u64, |acc, (_, &v)| acc | CoxGraph::bit(v))
                    })
                    .collect();
                (masks, d.covers())
            })
            .collect();
        options.push(placed);
    }
    product(&options)
        .into_iter()
        .map(|choice| {
            let mut masks = Vec::new();
            let mut relations = Vec::new();
            for (m, r) in choice {
                let offset = masks.len();
                masks.extend(m);
                relations.extend(r.into_iter().map(|(a, b)| (a + offset, b + offset)));
            }
            StaircaseDiagram::from_masks(graph, masks, &relations)
        })
        .collect()
}

/// Fully supported increasing diagrams on `Γ_n`, built from Dyck paths.
pub fn enumerate_increasing(n: usize) -> Result<Vec<StaircaseDiagram>> {
    increasing_diagrams(n)
}

/// Fully supported diagrams on `Γ_n`, glued from broken staircases.
pub fn enumerate_full_path(n: usize) -> Result<Vec<StaircaseDiagram>> {
    CoxGraph::path(n)?;
    Catalog::new().glue_lines(n)
}

/// Fully supported spherical diagrams on `Γ̃_n`, glued from broken staircases.
pub fn enumerate_full_cycle(n: usize) -> Result<Vec<StaircaseDiagram>> {
    CoxGraph::cycle(n)?;
    Catalog::new().glue_cycles(n)
}

/// Every staircase diagram on `graph`, optionally restricted to spherical
/// or fully supported ones, within the default size limits.
pub fn enumerate_diagrams(
    graph: CoxGraph,
    spherical_only: bool,
    fully_supported_only: bool,
) -> Result<BTreeSet<StaircaseDiagram>> {
    enumerate_diagrams_with(graph, spherical_only, fully_supported_only, EnumerationLimits::default())
}

pub fn enumerate_diagrams_with(
    graph: CoxGraph,
    spherical_only: bool,
    fully_supported_only: bool,
    limits: EnumerationLimits,
) -> Result<BTreeSet<StaircaseDiagram>> {
    let limit = match graph.kind {
        GraphKind::Path => limits.max_path,
        GraphKind::Cycle => limits.max_cycle,
    };
    if graph.n > limit {
        return Err(Error::BudgetExceeded(format!("{} exceeds the enumeration limit {limit}", graph.label())));
    }
    let mut catalog = Catalog::new();
    let mut out = BTreeSet::new();
    match graph.kind {
        GraphKind::Path => out.extend(catalog.full_path(graph.n)?.iter().cloned()),
        GraphKind::Cycle => {
            out.extend(catalog.glue_cycles(graph.n)?);
            if !spherical_only {
                out.insert(StaircaseDiagram::from_masks(graph, vec![graph.full_mask()], &[])?);
            }
        }
    }
    if !fully_supported_only {
        let full = graph.full_mask();
        let mut uncovered = full;
        loop {
            // every nonempty set of uncovered vertices, the whole graph last
            if uncovered != 0 {
                out.extend(place_on_components(&mut catalog, graph, full & !uncovered)?);
            }
            if uncovered == 0 {
                break;
            }
            uncovered = (uncovered - 1) & full;
        }
    }
    Ok(out)
}

/// `|enumerate_diagrams(..)|`.
pub fn count_diagrams(graph: CoxGraph, spherical_only: bool, fully_supported_only: bool) -> Result<usize> {
    Ok(enumerate_diagrams(graph, spherical_only, fully_supported_only)?.len())
}
