//! Villarceau grids, resolving sets and exact metric dimension.

pub mod claims;
pub mod error;
pub mod generators;
pub mod graph;
pub mod resolver;

pub use error::{Error, Result};
pub use generators::{Family, GridSpec};
pub use graph::{Coord, DiagGraph, DistanceMatrix, Rational};
