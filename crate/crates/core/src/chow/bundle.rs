//! Chern-class bookkeeping for a fiberwise degree-k endomorphism of a
//! projectivized rank-2 bundle: the twist that such a map forces, the
//! ramification divisor it produces, and the numerical constraints a
//! base pullback imposes.

use num::{One, Zero};

use crate::algebra::rational::{rat, Int, Rational};
use crate::chow::class::{chow_mul, ChowClass, Symbol};
use crate::error::{Error, Result};

/// Fiber degree k together with the base part D of the divisor
/// L = k*xi + D that carries the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    k: i64,
    twist: ChowClass,
}

impl TwistSpec {
    /// Requires k >= 1 and a xi-free twist of degree 1 (or zero).
    pub fn new(k: i64, twist: ChowClass) -> Result<TwistSpec> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!(
                "fiber degree must be at least 1, got {k}"
            )));
        }
        if twist.max_exponent(Symbol::Xi) > 0 {
            return Err(Error::InvalidParameter(
                "the twist must be a base class without xi".into(),
            ));
        }
        if let Some(degree) = twist.degree() {
            if degree != 1 {
                return Err(Error::InvalidParameter(format!(
                    "the twist must have degree 1, got {degree}"
                )));
            }
        }
        Ok(TwistSpec { k, twist })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn twist(&self) -> &ChowClass {
        &self.twist
    }

    /// The divisor L = k*xi + D.
    pub fn line_class(&self) -> ChowClass {
        ChowClass::symbol(Symbol::Xi)
            .scale(&rat(self.k))
            .try_add(&self.twist)
            .expect("divisor parts share degree 1")
    }
}

/// Second Chern class of the comparison bundle after twisting by L:
/// c2F + L*c1F + L^2, reduced.
pub fn c2_twist_expand(spec: &TwistSpec) -> ChowClass {
    let line = spec.line_class();
    let c1f = ChowClass::symbol(Symbol::C1F);
    let c2f = ChowClass::symbol(Symbol::C2F);
    c2f.try_add(&chow_mul(&line, &c1f))
        .and_then(|sum| sum.try_add(&chow_mul(&line, &line)))
        .expect("all three summands have degree 2")
}

/// Solves the xi-linear part of c2_twist_expand(k, D) = 0 for the
/// unknown base divisor D, using the formal D symbol as the unknown,
/// and checks the solution by substituting it back. The pure-base
/// part of the equation constrains second Chern classes instead of D
/// and is left alone.
pub fn solve_twist_degree(k: i64) -> Result<ChowClass> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "fiber degree must be at least 1, got {k}"
        )));
    }
    let formal = c2_twist_expand(&TwistSpec::new(k, ChowClass::symbol(Symbol::D))?);
    let (xi_part, _) = formal.split_xi();
    let unknown = [0, 0, 0, 0, 0, 1, 0];
    let leading = xi_part.coefficient(&unknown);
    if leading.is_zero() {
        return Err(Error::Internal("the twist equation lost its D term".into()));
    }
    let rest = xi_part.try_sub(&ChowClass::from_terms([(unknown, leading.clone())])?)?;
    if rest.max_exponent(Symbol::D) > 0 {
        return Err(Error::Internal(
            "the twist equation is not linear in D".into(),
        ));
    }
    let solution = rest.scale(&(-Rational::one() / leading));
    let check = c2_twist_expand(&TwistSpec::new(k, solution.clone())?);
    if !check.split_xi().0.is_zero() {
        return Err(Error::Internal(
            "the twist solution failed re-substitution".into(),
        ));
    }
    Ok(solution)
}

/// Difference of canonical classes between source and pulled-back
/// target for the fiberwise degree-k map. The base canonical class
/// and the comparison bundle drop out, leaving (2k-2)*xi + (k-1)*c1E.
pub fn ramification_class(k: i64) -> Result<ChowClass> {
    let twist = solve_twist_degree(k)?;
    let xi = ChowClass::symbol(Symbol::Xi);
    let base_canonical = ChowClass::symbol(Symbol::KB);
    let source_canonical = xi
        .scale(&rat(-2))
        .try_add(&base_canonical)?
        .try_sub(&ChowClass::symbol(Symbol::C1E))?;
    // The target's tautological divisor pulls back to k*xi + D.
    let pulled_xi = xi.scale(&rat(k)).try_add(&twist)?;
    let target_canonical = pulled_xi
        .scale(&rat(-2))
        .try_add(&base_canonical)?
        .try_sub(&ChowClass::symbol(Symbol::C1F))?;
    let difference = source_canonical.try_sub(&target_canonical)?;
    if difference.max_exponent(Symbol::KB) > 0 {
        return Err(Error::Internal(
            "the base canonical class failed to cancel".into(),
        ));
    }
    Ok(difference)
}

/// First Chern class of the l-th symmetric power of the dual of a
/// rank-2 bundle, twisted by a copies of its determinant:
/// (-l(l+1)/2 + (l+1)a) * c1E.
pub fn symmetric_power_det(l: i64, a: i64) -> Result<ChowClass> {
    if l < 0 {
        return Err(Error::InvalidParameter(format!(
            "symmetric power degree must be nonnegative, got {l}"
        )));
    }
    let l_big = Int::from(l);
    let next: Int = &l_big + Int::one();
    let half_pairs: Int = &l_big * &next / Int::from(2);
    let coefficient: Int = &next * Int::from(a) - half_pairs;
    Ok(ChowClass::symbol(Symbol::C1E).scale(&Rational::from_integer(coefficient)))
}

/// Constraints forced on a rank-2 bundle whose pullback along a map
/// multiplying c1 by k and c2 by k^2 is the bundle itself twisted by
/// a line bundle L: solves k*c1E = c1E + 2L for L, then reduces the
/// c2 equation to a k-independent relation between c1E^2 and c2E.
pub fn pullback_twist_constraint(k: i64) -> Result<(ChowClass, ChowClass)> {
    if k < 2 {
        return Err(Error::DegenerateTwist(k));
    }
    let c1e = ChowClass::symbol(Symbol::C1E);
    let c2e = ChowClass::symbol(Symbol::C2E);
    let line = c1e.scale(&Rational::new(Int::from(k - 1), Int::from(2)));
    let k_big = Int::from(k);
    let pulled = c2e.scale(&Rational::from_integer(&k_big * &k_big));
    let twisted = c2e
        .try_add(&chow_mul(&line, &c1e))?
        .try_add(&chow_mul(&line, &line))?;
    let difference = pulled.try_sub(&twisted)?;
    let normalizer = Rational::new(Int::from(-4), &k_big * &k_big - Int::one());
    Ok((line, difference.scale(&normalizer)))
}
