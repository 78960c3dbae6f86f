pub mod enumerate;
pub mod selftest;
pub mod series;
pub mod smooth;
pub mod staircase;
