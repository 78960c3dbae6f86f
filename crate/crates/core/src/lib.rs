//! Smoothness and rational smoothness of Schubert varieties in the affine
//! flag variety of type A, Billey-Postnikov decompositions, staircase
//! diagrams over paths and cycles, and the generating function counting
//! smooth Schubert varieties.

pub mod bp;
pub mod coxeter;
pub mod error;
pub mod selftest;
pub mod series;
pub mod smoothness;
pub mod staircase;

pub use error::{Error, Result};
