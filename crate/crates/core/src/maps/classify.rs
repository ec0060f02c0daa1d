//! Ramification of P^1 self-maps and the orbit-type trichotomy it
//! detects.
//!
//! For a degree-m regular self-map of the line, the Jacobian determinant
//! of the two components is a nonzero binary form of degree 2m - 2, and
//! no point can ramify with multiplicity m or more. Total ramification
//! at a point means multiplicity exactly m - 1 there. A map totally
//! ramified at two distinct points is carried to (x0^m, x1^m) by
//! independent coordinate changes on source and target (move the two
//! points and their images to the coordinate points); one totally
//! ramified point puts the map on the boundary of that orbit; no totally
//! ramified point leaves the orbit closed.

use super::factor::{squarefree_factorization, BinaryFormFactorization};
use super::map::{ProjectiveMap, Regularity};
use crate::algebra::Form;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitTag {
    TorusForm,
    Boundary,
    Closed,
}

impl OrbitTag {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitTag::TorusForm => "TorusForm",
            OrbitTag::Boundary => "Boundary",
            OrbitTag::Closed => "Closed",
        }
    }
}

/// Classification outcome together with the ramification factorization
/// that decided it.
#[derive(Clone, Debug)]
pub struct OrbitType {
    pub tag: OrbitTag,
    pub witness: BinaryFormFactorization,
}

fn require_regular_line_map(f: &ProjectiveMap) -> Result<()> {
    if f.source_dim() != 1 || f.target_dim() != 1 {
        return Err(Error::VariableCountMismatch {
            expected: 2,
            found: f.source_dim() + 1,
        });
    }
    if f.regularity() != Regularity::CertifiedRegular {
        return Err(Error::UncertifiedInput);
    }
    Ok(())
}

/// Jacobian determinant of the component pair, normalized to leading
/// coefficient 1: a binary form of degree exactly 2m - 2 vanishing on
/// the ramification points. Degree-1 maps ramify nowhere and yield the
/// constant form 1.
pub fn ramification_form(f: &ProjectiveMap) -> Result<Form> {
    require_regular_line_map(f)?;
    let field = f.field().clone();
    if f.degree() == 1 {
        return Form::monomial(&field, vec![0, 0], field.one());
    }
    let [f0, f1] = [&f.components()[0], &f.components()[1]];
    let jacobian = f0
        .partial(0)?
        .try_mul(&f1.partial(1)?)?
        .try_sub(&f0.partial(1)?.try_mul(&f1.partial(0)?)?)?;
    if jacobian.is_zero() {
        return Err(Error::Internal(
            "regular map produced an identically zero Jacobian".into(),
        ));
    }
    Ok(jacobian.normalize_leading().0)
}

/// Classifies the orbit of a regular degree-m self-map of P^1 (m >= 2)
/// under independent source and target coordinate changes, by counting
/// the geometric ramification points of each multiplicity.
pub fn classify_orbit(f: &ProjectiveMap) -> Result<OrbitType> {
    require_regular_line_map(f)?;
    let m = f.degree();
    if m < 2 {
        return Err(Error::DegreeTooSmall {
            minimum: 2,
            found: m,
        });
    }
    let ram = ramification_form(f)?;
    let witness = squarefree_factorization(&ram)?;
    let total_points = witness.distinct_points();
    let totally_ramified = witness.points_of_multiplicity(m - 1);
    let tag = if totally_ramified == 2 && total_points == 2 {
        OrbitTag::TorusForm
    } else if totally_ramified >= 1 {
        OrbitTag::Boundary
    } else {
        OrbitTag::Closed
    };
    Ok(OrbitType { tag, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Form, NumberField};
    use crate::maps::map::make_map;
    use crate::maps::regularity::certify_regular;

    fn binary(terms: &[(u32, i64)], degree: usize) -> Form {
        let field = NumberField::rationals();
        let terms: Vec<_> = terms
            .iter()
            .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
            .collect();
        Form::from_terms(&field, 2, degree, terms).unwrap()
    }

    fn certified(terms0: &[(u32, i64)], terms1: &[(u32, i64)], degree: usize) -> ProjectiveMap {
        let m = make_map(&[binary(terms0, degree), binary(terms1, degree)]).unwrap();
        certify_regular(&m).unwrap()
    }

    #[test]
    fn power_map_ramification() {
        // (x0^m, x1^m) ramifies at the two coordinate points with
        // multiplicity m - 1 each.
        for m in [2usize, 3, 5] {
            let f = certified(&[(m as u32, 1)], &[(0, 1)], m);
            let ram = ramification_form(&f).unwrap();
            let expected = binary(&[(m as u32 - 1, 1)], 2 * m - 2);
            assert_eq!(ram, expected);
        }
    }

    #[test]
    fn jacobian_of_mixed_cubic() {
        // (x0^3 + x1^3, x0 x1^2): Jacobian is 6 x0^3 x1 - 3 x1^4, which
        // normalizes to x0^3 x1 - x1^4 / 2.
        let f = certified(&[(3, 1), (0, 1)], &[(1, 1)], 3);
        let ram = ramification_form(&f).unwrap();
        assert_eq!(ram.degree(), 4);
        let field = NumberField::rationals();
        let expected = Form::from_terms(
            &field,
            2,
            4,
            vec![
                (vec![3, 1], field.one()),
                (vec![0, 4], field.rational(crate::algebra::rational::ratio(-1, 2))),
            ],
        )
        .unwrap();
        assert_eq!(ram, expected);
    }

    #[test]
    fn degree_one_map_has_no_ramification() {
        let f = certified(&[(1, 1)], &[(0, 1)], 1);
        let ram = ramification_form(&f).unwrap();
        assert_eq!(ram.degree(), 0);
        assert!(!ram.is_zero());
        assert!(matches!(
            classify_orbit(&f),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn power_map_is_torus_form() {
        let f = certified(&[(3, 1)], &[(0, 1)], 3);
        let orbit = classify_orbit(&f).unwrap();
        assert_eq!(orbit.tag, OrbitTag::TorusForm);
        assert_eq!(orbit.witness.distinct_points(), 2);
    }

    #[test]
    fn shifted_cubes_stay_in_the_torus_orbit() {
        // (x0^3 + x1^3, x1^3) is the image of (x0^3, x1^3) under the
        // target shear [[1,1],[0,1]]; its ramification x0^2 x1^2 has two
        // points of multiplicity m - 1, so it classifies identically to
        // the power map.
        let f = certified(&[(3, 1), (0, 1)], &[(0, 1)], 3);
        let orbit = classify_orbit(&f).unwrap();
        assert_eq!(orbit.tag, OrbitTag::TorusForm);
        assert_eq!(orbit.witness.points_of_multiplicity(2), 2);
    }

    #[test]
    fn single_totally_ramified_point_is_boundary() {
        // (x0^3 + x0^2 x1, x1^3): the Jacobian is 3 x1^2 (3 x0^2 + 2 x0 x1),
        // with only (1:0) totally ramified.
        let f = certified(&[(3, 1), (2, 1)], &[(0, 1)], 3);
        let orbit = classify_orbit(&f).unwrap();
        assert_eq!(orbit.tag, OrbitTag::Boundary);
        assert_eq!(orbit.witness.points_of_multiplicity(2), 1);
        assert_eq!(orbit.witness.distinct_points(), 3);
    }

    #[test]
    fn simple_ramification_everywhere_is_closed() {
        // (x0^3 + x1^3, x0 x1^2) has four distinct simple ramification
        // points: x1 = 0 and the three roots of 2 x0^3 = x1^3.
        let f = certified(&[(3, 1), (0, 1)], &[(1, 1)], 3);
        let orbit = classify_orbit(&f).unwrap();
        assert_eq!(orbit.tag, OrbitTag::Closed);
        assert_eq!(orbit.witness.distinct_points(), 4);
        assert_eq!(orbit.witness.points_of_multiplicity(1), 4);
    }

    #[test]
    fn every_regular_quadratic_is_a_torus_form() {
        // Degree 2 covers of the line ramify simply at exactly two
        // points, so both are totally ramified (m - 1 = 1).
        for (t0, t1) in [
            (vec![(2u32, 1i64)], vec![(0u32, 1i64)]),
            (vec![(2, 1), (0, 1)], vec![(1, 1)]),
            (vec![(2, 1), (1, 1)], vec![(0, 1)]),
        ] {
            let f = certified(&t0, &t1, 2);
            assert_eq!(classify_orbit(&f).unwrap().tag, OrbitTag::TorusForm);
        }
    }

    #[test]
    fn uncertified_input_rejected() {
        let m = make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        assert!(matches!(ramification_form(&m), Err(Error::UncertifiedInput)));
        assert!(matches!(classify_orbit(&m), Err(Error::UncertifiedInput)));
    }
}
