//! Exact computation of the rational equivariant K-homology ranks of groups
//! acting cocompactly on 3-manifold models of the classifying space for
//! proper actions, from a finite combinatorial description of the orbit
//! complex.
//!
//! Two independent routes are implemented. The fast path works cell by cell:
//! degree 0 by merging stabilizer conjugacy classes along the 1-skeleton,
//! degree 3 by the closed-orientability of the quotient, degree 2 by
//! classifying boundary components and taking one ordinary Betti number, and
//! degree 1 from the Euler characteristic. The oracle assembles the full
//! weighted chain complex with induction-map differentials and reads off
//! homology ranks by exact rational elimination. Agreement of the two routes
//! on every input is the crate's central correctness property.
//!
//! All arithmetic is exact (big integers and rationals); results are
//! deterministic byte-for-byte across runs.
//!
//! ```
//! use orbk_core::{builders, bredon, ktheory};
//!
//! let complex = builders::heisenberg_z4()?;
//! assert!(complex.validate().is_valid());
//!
//! let fast = ktheory::compute(&complex)?;
//! assert_eq!((fast.k0_rank, fast.k1_rank), (5, 5));
//!
//! let oracle = bredon::homology_ranks(&bredon::assemble(&complex)?);
//! assert_eq!(fast.betas(), oracle);
//! # Ok::<(), orbk_core::ComplexError>(())
//! ```

pub mod bredon;
pub mod builders;
pub mod complex;
pub mod dihedral;
pub mod doc;
pub mod error;
pub mod group;
pub mod ktheory;
pub mod linalg;
pub mod perm;
pub mod perturb;
pub mod unionfind;

pub use complex::{
    BoundaryClassification, BoundaryComponent, Incidence, OrbitCell, OrbitComplex, SubTwoComplex,
    ValidationReport,
};
pub use error::{ComplexError, GroupError};
pub use group::{ClassMatrix, FiniteGroup, GroupHom};
pub use ktheory::{ClassificationSummary, KTheoryReport};
pub use linalg::RationalMatrix;
pub use perm::Permutation;
