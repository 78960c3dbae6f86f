use std::fmt::Write;

use crate::staircase::diagram::StaircaseDiagram;
use crate::staircase::graph::CoxGraph;

fn block_name(i: usize) -> char {
    const NAMES: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    NAMES.get(i).map(|&c| c as char).unwrap_or('#')
}

/// Two-dimensional block picture: one column per vertex, higher blocks in
/// higher rows. A cycle is cut open at `s_0`, which is drawn at both ends.
pub fn render(d: &StaircaseDiagram) -> String {
    let g = d.graph();
    let mut columns: Vec<usize> = g.vertices().collect();
    if g.is_cycle() {
        columns.push(0);
    }
    let width = columns.iter().map(|v| format!("s{v}").len()).max().unwrap_or(2) + 1;
    let heights = d.heights();
    let top = heights.iter().copied().max();
    let mut out = String::new();
    let _ = write!(out, "{:>4}", "");
    for v in &columns {
        let _ = write!(out, "{:>width$}", format!("s{v}"));
    }
    out.push('\n');
    if let Some(top) = top {
        for level in (0..=top).rev() {
            let _ = write!(out, "{level:>4}");
            for &v in &columns {
                let cell = (0..d.len())
                    .find(|&i| heights[i] == level && d.blocks()[i] & CoxGraph::bit(v) != 0)
                    .map(block_name)
                    .unwrap_or('.');
                let _ = write!(out, "{cell:>width$}");
            }
            out.push('\n');
        }
    }
    for (i, &b) in d.blocks().iter().enumerate() {
        let vertices: Vec<String> = g.ordered_vertices(b).iter().map(|v| format!("s{v}")).collect();
        let _ = writeln!(out, "{} = {{{}}}", block_name(i), vertices.join(", "));
    }
    for (a, b) in d.covers() {
        let _ = writeln!(out, "{} < {}", block_name(a), block_name(b));
    }
    out
}
