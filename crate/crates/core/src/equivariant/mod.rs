//! Finite matrix groups acting on projective space and the
//! construction of endomorphisms commuting with a given action.
//!
//! The pipeline: enumerate the group from generators, average
//! monomials into invariant forms, search the invariant span for a
//! form with smooth zero locus, and take gradient maps. The gradient
//! of an invariant intertwines the action with its dual, so composing
//! a dual-invariant gradient with an invariant gradient produces a
//! self-map that commutes with every group element.

pub mod endo;
pub mod group;
pub mod reynolds;
pub mod search;

pub use endo::{equivariant_endomorphism, verify_equivariance, EquivarianceMode};
pub use group::{dual_group, enumerate_group, FiniteMatrixGroup};
pub use reynolds::{invariant_basis, reynolds_project, InvariantBasis};
pub use search::{gradient_map, smooth_invariant_search, zero_locus_smooth};

#[cfg(test)]
pub(crate) mod fixtures {
    use super::group::{enumerate_group, FiniteMatrixGroup};
    use crate::algebra::{Matrix, NumberField};

    /// Order 8: the sign change diag(1, -1) and the swap of the two
    /// coordinates generate the symmetries of the coordinate cross.
    pub(crate) fn signed_swap_group() -> FiniteMatrixGroup {
        let field = NumberField::rationals();
        let flip = Matrix::from_integers(&field, 2, &[1, 0, 0, -1]);
        let swap = Matrix::from_integers(&field, 2, &[0, 1, 1, 0]);
        enumerate_group(&[flip, swap], 100).unwrap()
    }

    /// Order 24: the rotation group of the cube, generated by a
    /// quarter turn about the z axis and the rotation cycling the
    /// three coordinate axes.
    pub(crate) fn cube_rotation_group() -> FiniteMatrixGroup {
        let field = NumberField::rationals();
        let quarter = Matrix::from_integers(&field, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 1]);
        let cycle = Matrix::from_integers(&field, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
        enumerate_group(&[quarter, cycle], 100).unwrap()
    }

    /// Order 2: plus and minus the identity on the line.
    pub(crate) fn sign_group() -> FiniteMatrixGroup {
        let field = NumberField::rationals();
        let minus = Matrix::from_integers(&field, 2, &[-1, 0, 0, -1]);
        enumerate_group(&[minus], 10).unwrap()
    }

    /// Order 2: the swap of the two coordinates.
    pub(crate) fn swap_group() -> FiniteMatrixGroup {
        let field = NumberField::rationals();
        let swap = Matrix::from_integers(&field, 2, &[0, 1, 1, 0]);
        enumerate_group(&[swap], 10).unwrap()
    }

    /// Order 1 in the requested dimension.
    pub(crate) fn trivial_group(dim: usize) -> FiniteMatrixGroup {
        let field = NumberField::rationals();
        enumerate_group(&[Matrix::identity(&field, dim)], 10).unwrap()
    }
}
