//! Exact stability analysis for coherent systems on general curves.

pub mod butler;
pub mod check;
pub mod construct;
pub mod curve;
pub mod profile;
pub mod rat;
pub mod report;
pub mod slope;
