//! The equivariant endomorphism attached to a finite group action:
//! the composition of the gradient maps of a smooth invariant and a
//! smooth dual invariant, verified against every group element.

use super::group::{dual_group, FiniteMatrixGroup};
use super::search::{gradient_map, smooth_invariant_search};
use crate::error::{Error, Result};
use crate::maps::{compose, stabilizer_check, ProjectiveMap};

/// Which commutation relation to check for every group element g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivarianceMode {
    /// F o g projectively equals g o F: F commutes with the action.
    Conjugation,
    /// F o g projectively equals (g^-1)^t o F: F carries the action to
    /// the dual action, as a gradient map of an invariant form does.
    Intertwining,
}

/// Exhaustive projective check of the chosen relation over the whole
/// element list.
pub fn verify_equivariance(
    f: &ProjectiveMap,
    group: &FiniteMatrixGroup,
    mode: EquivarianceMode,
) -> Result<bool> {
    if f.source_dim() + 1 != group.dim() || f.target_dim() + 1 != group.dim() {
        return Err(Error::DimensionMismatch);
    }
    for g in group.elements() {
        let holds = match mode {
            EquivarianceMode::Conjugation => stabilizer_check(f, g, None)?,
            EquivarianceMode::Intertwining => {
                // F o g = g^ o F rearranges to g^ o F o g^-1 = F, which
                // is the pair action of (g, g^) fixing F.
                let dual = g
                    .inverse()
                    .expect("group elements are invertible")
                    .transpose();
                stabilizer_check(f, g, Some(&dual))?
            }
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the equivariant endomorphism of degree (m-1)^2 for the given
/// group: the gradient of a smooth invariant intertwines the action
/// with its dual, the gradient of a smooth dual invariant carries the
/// dual back, and their composition commutes with the action on the
/// nose. The commutation is verified for every element before
/// returning; a failure would mean a bug in the pipeline and aborts.
pub fn equivariant_endomorphism(
    group: &FiniteMatrixGroup,
    m: usize,
    seed: u64,
    budget: usize,
) -> Result<ProjectiveMap> {
    if m < 2 {
        return Err(Error::DegreeTooSmall {
            minimum: 2,
            found: m,
        });
    }
    let invariant = smooth_invariant_search(group, m, seed, budget)?;
    let inner = gradient_map(&invariant)?;
    let dual = dual_group(group);
    let dual_invariant = smooth_invariant_search(&dual, m, seed, budget)?;
    let outer = gradient_map(&dual_invariant)?;
    let result = compose(&outer, &inner)?;
    for (index, g) in group.elements().iter().enumerate() {
        if !stabilizer_check(&result, g, None)? {
            return Err(Error::EquivarianceFailed { element: index });
        }
    }
    Ok(result)
}
