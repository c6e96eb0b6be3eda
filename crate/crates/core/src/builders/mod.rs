//! Parametric constructors for the bundled orbit-complex families: the two
//! hyperbolic reflection families (an n-gon prism and a one-parameter cube),
//! the nil-geometry quotient with a Z4 symmetry, a split crystallographic
//! quotient, and torsion-free mapping tori of the 2-torus. These are the
//! regression corpus: every builder output passes validation, is fast-path
//! eligible, and its fast invariants agree with the chain-complex oracle.

mod crystallographic;
mod gamma;
mod heisenberg;
mod lambda;
mod mapping_torus;

pub use crystallographic::crystallographic_sym;
pub use gamma::gamma_n;
pub use heisenberg::heisenberg_z4;
pub use lambda::lambda_n;
pub use mapping_torus::{expected_mapping_torus_beta2, mapping_torus};

use std::sync::Arc;

use crate::complex::Incidence;
use crate::group::{FiniteGroup, GroupHom};

/// Incidence with the unique inclusion of a trivial stabilizer.
pub(crate) fn trivial_incidence(
    cell: &str,
    face: &str,
    degree: i64,
    codomain: &Arc<FiniteGroup>,
) -> Incidence {
    Incidence {
        cell: cell.to_string(),
        face: face.to_string(),
        degree,
        inclusion: GroupHom::from_trivial(codomain.clone()),
    }
}

pub(crate) fn incidence(cell: &str, face: &str, degree: i64, inclusion: GroupHom) -> Incidence {
    Incidence {
        cell: cell.to_string(),
        face: face.to_string(),
        degree,
        inclusion,
    }
}
