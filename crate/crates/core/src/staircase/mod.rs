//! Staircase diagrams over the path `Γ_n` and the cycle `Γ̃_n`.

mod broken;
mod counts;
mod decompose;
mod diagram;
mod dyck;
mod element;
mod enumerate;
mod graph;
mod render;

pub use broken::{break_staircase, BrokenStaircase, Direction};
pub use counts::{count_by_enumeration, DiagramCounter, MAX_COUNT_CYCLE, MAX_COUNT_PATH};
pub use decompose::{cycle_decompose, cycle_glue, line_decompose, line_glue, CycleDecomposition, LineDecomposition};
pub use diagram::{DiagramJson, StaircaseDiagram, Violation};
pub use enumerate::{
    count_diagrams, enumerate_diagrams, enumerate_diagrams_with, enumerate_full_cycle, enumerate_full_path,
    enumerate_increasing, EnumerationLimits,
};
pub use dyck::{from_dyck, increasing_diagrams, to_dyck, DyckPath};
pub use element::{ambient_period, to_element};
pub use graph::{CoxGraph, GraphKind};
pub use render::render;
