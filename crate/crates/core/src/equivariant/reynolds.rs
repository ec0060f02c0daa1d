//! Averaging over a finite group: the projection onto invariant forms
//! and bases of invariant spaces by degree.

use std::collections::BTreeMap;

use super::group::FiniteMatrixGroup;
use crate::algebra::monomial::monomials_of_degree;
use crate::algebra::{FieldElement, Form};
use crate::error::{Error, Result};

/// Basis of the space of G-invariant forms of one degree. Members are
/// exactly invariant (not merely projectively) and normalized to
/// leading coefficient 1.
#[derive(Clone)]
pub struct InvariantBasis {
    pub degree: usize,
    pub basis: Vec<Form>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Group average (1/|G|) sum over g of f(g^-1 x). The image is exactly
/// invariant under every element, and invariant forms are fixed, so
/// the operator is an idempotent projection onto the invariant
/// subspace.
pub fn reynolds_project(group: &FiniteMatrixGroup, f: &Form) -> Result<Form> {
    if f.num_vars() != group.dim() {
        return Err(Error::VariableCountMismatch {
            expected: group.dim(),
            found: f.num_vars(),
        });
    }
    if !f.field().same_field(group.field()) {
        return Err(Error::FieldMismatch);
    }
    let mut acc = Form::zero(f.field(), f.num_vars(), f.degree());
    for g in group.elements() {
        let g_inv = g.inverse().expect("group elements are invertible");
        acc = acc.try_add(&f.substitute_linear(&g_inv)?)?;
    }
    let order_inv = group.field().integer(group.order() as i64).inverse()?;
    acc.scale(&order_inv)
}

/// Projects every monomial of degree m and keeps a maximal linearly
/// independent subset of the images, found by incremental exact
/// elimination on graded-lex coefficient vectors.
pub fn invariant_basis(group: &FiniteMatrixGroup, m: usize) -> Result<InvariantBasis> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "invariant basis degree must be at least 1".into(),
        ));
    }
    let monos = monomials_of_degree(group.dim(), m);
    let column: BTreeMap<_, usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, mono)| (mono, i))
        .collect();
    let field = group.field();

    // Echelon rows with their pivot columns, kept reduced as we go.
    let mut pivots: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    let mut basis = Vec::new();

    for mono in &monos {
        let seed = Form::monomial(field, mono.exponents().to_vec(), field.one())?;
        let projected = reynolds_project(group, &seed)?;
        if projected.is_zero() {
            continue;
        }

        let mut row = vec![field.zero(); monos.len()];
        for (mono, coeff) in projected.terms() {
            row[column[mono]] = coeff.clone();
        }
        for (pivot, existing) in pivots.iter().zip(&rows) {
            if !row[*pivot].is_zero() {
                let factor = row[*pivot].clone();
                for (r, e) in row.iter_mut().zip(existing) {
                    *r = r.try_sub(&e.try_mul(&factor)?)?;
                }
            }
        }
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let lead_inv = row[pivot].inverse()?;
        for r in row.iter_mut() {
            *r = r.try_mul(&lead_inv)?;
        }
        pivots.push(pivot);
        rows.push(row);
        basis.push(projected.normalize_leading().0);
    }

    Ok(InvariantBasis { degree: m, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;
    use crate::algebra::{Matrix, NumberField};
    use crate::equivariant::fixtures::{
        cube_rotation_group, sign_group, signed_swap_group, swap_group, trivial_group,
    };
    use std::sync::Arc;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn binary(terms: &[(u32, i64)], degree: usize) -> Form {
        let field = q();
        let terms: Vec<_> = terms
            .iter()
            .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
            .collect();
        Form::from_terms(&field, 2, degree, terms).unwrap()
    }

    #[test]
    fn odd_degree_dies_under_the_sign_group() {
        let g = sign_group();
        let cube = binary(&[(3, 1)], 3);
        assert!(reynolds_project(&g, &cube).unwrap().is_zero());
    }

    #[test]
    fn swap_average_symmetrizes() {
        let g = swap_group();
        let projected = reynolds_project(&g, &binary(&[(2, 1)], 2)).unwrap();
        let expected = binary(&[(2, 1), (0, 1)], 2).scale_rational(&ratio(1, 2));
        assert_eq!(projected, expected);
    }

    #[test]
    fn signed_swap_average_of_a_fourth_power() {
        let g = signed_swap_group();
        let projected = reynolds_project(&g, &binary(&[(4, 1)], 4)).unwrap();
        let expected = binary(&[(4, 1), (0, 1)], 4).scale_rational(&ratio(1, 2));
        assert_eq!(projected, expected);
    }

    #[test]
    fn projection_is_idempotent_and_invariant() {
        let g = signed_swap_group();
        let f = binary(&[(4, 2), (3, 1), (2, -5)], 4);
        let once = reynolds_project(&g, &f).unwrap();
        assert_eq!(reynolds_project(&g, &once).unwrap(), once);
        for elem in g.elements() {
            let moved = once.substitute_linear(&elem.inverse().unwrap()).unwrap();
            assert_eq!(moved, once);
        }
    }

    #[test]
    fn sign_group_has_no_odd_invariants() {
        let basis = invariant_basis(&sign_group(), 3).unwrap();
        assert_eq!(basis.dim(), 0);
    }

    #[test]
    fn signed_swap_quartic_invariants() {
        let basis = invariant_basis(&signed_swap_group(), 4).unwrap();
        assert_eq!(basis.dim(), 2);
        assert_eq!(basis.basis[0], binary(&[(4, 1), (0, 1)], 4));
        assert_eq!(basis.basis[1], binary(&[(2, 1)], 4));
    }

    #[test]
    fn cube_rotations_fix_the_quadric() {
        let basis = invariant_basis(&cube_rotation_group(), 2).unwrap();
        assert_eq!(basis.dim(), 1);
        let field = q();
        let quadric = Form::from_terms(
            &field,
            3,
            2,
            [
                (vec![2, 0, 0], field.one()),
                (vec![0, 2, 0], field.one()),
                (vec![0, 0, 2], field.one()),
            ],
        )
        .unwrap();
        assert_eq!(basis.basis[0], quadric);
    }

    #[test]
    fn trivial_group_fixes_everything() {
        // dim of the full space of quartics in two variables.
        let basis = invariant_basis(&trivial_group(2), 4).unwrap();
        assert_eq!(basis.dim(), 5);
        let basis = invariant_basis(&trivial_group(3), 2).unwrap();
        assert_eq!(basis.dim(), 6);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let g = cube_rotation_group();
        match reynolds_project(&g, &binary(&[(2, 1)], 2)) {
            Err(Error::VariableCountMismatch {
                expected: 3,
                found: 2,
            }) => {}
            _ => panic!("expected a variable count mismatch"),
        }
    }

    #[test]
    fn basis_members_are_invariant_under_a_nonorthogonal_lift() {
        // Conjugated swap: same abstract group, non-orthogonal
        // matrices, so invariance genuinely exercises the inverse.
        let field = q();
        let t = Matrix::from_integers(&field, 2, &[1, 1, 0, 1]);
        let swap = Matrix::from_integers(&field, 2, &[0, 1, 1, 0]);
        let conj = t
            .try_mul(&swap)
            .unwrap()
            .try_mul(&t.inverse().unwrap())
            .unwrap();
        let g = crate::equivariant::enumerate_group(&[conj], 10).unwrap();
        assert_eq!(g.order(), 2);
        let basis = invariant_basis(&g, 2).unwrap();
        assert_eq!(basis.dim(), 2);
        for f in &basis.basis {
            for elem in g.elements() {
                let moved = f.substitute_linear(&elem.inverse().unwrap()).unwrap();
                assert_eq!(&moved, f);
            }
        }
    }
}
