use thiserror::Error;

use crate::graph::Coord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid GridSpec: {family} requires {constraint} (got m={m}, n={n})")]
    InvalidSpec {
        family: &'static str,
        constraint: &'static str,
        m: usize,
        n: usize,
    },
    #[error("unreachable vertex {0}")]
    Unreachable(Coord),
    #[error("{0} is not a vertex of the graph")]
    NotAVertex(Coord),
    #[error("duplicate landmark {0}")]
    DuplicateLandmark(Coord),
    #[error("landmark id {0} is out of range")]
    LandmarkOutOfRange(usize),
    #[error("landmark list is empty")]
    EmptyLandmarks,
    #[error("no explicit basis for {0}")]
    BasisNotClaimed(String),
    #[error("conjecture not applicable to {0}")]
    ConjectureNotApplicable(String),
    #[error("undefined average distance (fewer than two vertices)")]
    UndefinedAverage,
    #[error("line classes are only defined for Villarceau grids")]
    NotVillarceau,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
