//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while building groups and homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation image array is not a bijection")]
    NotABijection,
    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group too large: order exceeds cap {cap}")]
    GroupTooLarge { cap: usize },
    #[error("permutation is not an element of the group")]
    NotAnElement,
    #[error("generator image count {got} does not match generator count {expected}")]
    GeneratorCountMismatch { expected: usize, got: usize },
    #[error("generator images do not extend to a homomorphism")]
    NotAHomomorphism,
    #[error("homomorphism is not injective")]
    NotInjective,
    #[error("dihedral parameter must be at least 2, got {0}")]
    DihedralTooSmall(usize),
}

/// Errors raised while assembling or analysing an orbit complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("duplicate cell id `{0}`")]
    DuplicateCellId(String),
    #[error("incidence references unknown cell id `{0}`")]
    UnknownCellId(String),
    #[error("incidence `{cell}` -> `{face}` must drop dimension by exactly one")]
    BadIncidenceDims { cell: String, face: String },
    #[error("incidence `{cell}` -> `{face}`: inclusion domain/codomain do not match the cell stabilizers")]
    InclusionGroupMismatch { cell: String, face: String },
    #[error("complex failed validation:\n{0}")]
    Invalid(String),
    #[error("fast path requires exactly one 3-cell, found {0}")]
    NotSingleThreeCell(usize),
    #[error(
        "boundary subcomplex is not a closed surface: edge `{0}` has {1} boundary-face incidences"
    )]
    BoundaryNotClosed(String, usize),
    #[error("orientability cross-check failed on boundary component containing `{0}`")]
    OrientabilityMismatch(String),
    #[error("negative rank while evaluating {0}; input cannot come from a valid model")]
    NegativeRank(String),
    #[error("chain differentials do not compose to zero: d{0} . d{1} != 0")]
    NonzeroComposition(u8, u8),
    #[error(transparent)]
    Group(#[from] GroupError),
}
