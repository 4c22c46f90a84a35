//! Shared fixtures for the benchmarks.

use genusmap_core::sample::sample_uniform;
use genusmap_core::{FaceDegreeSequence, RootedMap};

/// `n` quadrangles.
pub fn quadrangles(n: usize) -> FaceDegreeSequence {
    FaceDegreeSequence::from_pairs([(2, n)])
}

/// A fixed batch of uniform planar quadrangulations with `n` faces.
pub fn quadrangulations(n: usize, count: usize) -> Vec<RootedMap> {
    sample_uniform(&quadrangles(n), 0, 17, count)
        .expect("planar quadrangulations exist")
        .maps
}
