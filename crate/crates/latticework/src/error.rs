//! Error type shared by the whole crate.

use std::fmt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which of the two bounds failed to exist for a pair of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),

    #[error("not a lattice: `{a}` and `{b}` have no unique {which}")]
    NotALattice {
        a: String,
        b: String,
        which: BoundKind,
    },

    #[error("poset is empty: no top or bottom element")]
    NoBounds,

    #[error("maximal chain count exceeds cap {cap}")]
    ChainExplosion { cap: usize },

    #[error("lattice is not modular")]
    NotModular,

    #[error("lattice is not distributive")]
    NotDistributive,

    #[error("lattice is not multiplicity free")]
    NotMultiplicityFree,

    #[error("`{lower}` is not below `{upper}`")]
    NotComparable { lower: String, upper: String },

    #[error("`{upper}` does not cover `{lower}`")]
    NotACover { lower: String, upper: String },

    #[error("{what} exceeds size limit {limit}")]
    SizeLimit { what: String, limit: usize },

    #[error("n = {n} exceeds the supported maximum {max}")]
    NTooLarge { n: u32, max: u32 },

    #[error("quiver has a directed cycle")]
    QuiverNotAcyclic,

    #[error("representation is decomposable (or zero)")]
    NotIndecomposable,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown vertex `{name}` at line {line}")]
    UnknownVertex { name: String, line: usize },

    #[error("vertex `{vertex}` has dimension {dim}; thin representations allow only 0 or 1")]
    DimNotThin { vertex: String, dim: u32 },

    #[error("conflicting cover labels: {0}")]
    LabelConflict(String),

    #[error("isomorphism verification failed: {0}")]
    IsoFailure(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
