//! Rooted bipartite maps of prescribed genus and face degrees: exact
//! enumeration, uniform sampling, and local pattern statistics.

pub mod boundary;
pub mod enumerate;
pub mod explore;
pub mod faces;
pub mod format;
pub mod map;
pub mod sample;
pub mod stats;

pub use boundary::{
    close_twogon, cut_edge, glue_filler, make_pattern, validate_hole_map, BoundaryError, HoleMap,
    PatternKind, PolygonMap,
};
pub use enumerate::{beta, beta_marked, beta_oracle, EnumError, EnumerationResult};
pub use faces::FaceDegreeSequence;
pub use map::{build_map, CanonicalForm, Dart, MapError, RootedMap};
pub use sample::{sample_uniform, SampleBatch, SampleError};
pub use stats::StatsError;
