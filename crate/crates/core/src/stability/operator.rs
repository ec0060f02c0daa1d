//! The conjugation action on map coefficients, linearized: a degree-m
//! self-map tuple on n variables lives in a coefficient space of
//! dimension n * C(m+n-1, n-1), and F -> g.F.g^{-1} acts on it by an
//! invertible matrix. Eigenanalysis of that matrix finds fixed maps.

use std::sync::Arc;

use crate::algebra::monomial::monomials_of_degree;
use crate::algebra::{FieldElement, Form, Matrix, NumberField};
use crate::error::{Error, Result};
use crate::maps::map::pair_components;

/// The matrix of F -> g.F.g^{-1} on the coefficient space of degree-m
/// tuples, in the basis ordered by component index first, then by
/// descending graded-lex monomial within each component.
pub struct CoefficientOperator {
    degree: usize,
    num_vars: usize,
    matrix: Matrix,
}

impl CoefficientOperator {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Side length: num_vars * (number of degree-m monomials).
    pub fn size(&self) -> usize {
        self.matrix.row_count()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.matrix.mul_vec(coeffs)
    }
}

/// Flattens a tuple of same-degree forms into the operator's basis
/// order. Zero coefficients are materialized, so the result always has
/// the full length.
pub fn coefficient_vector(components: &[Form]) -> Result<Vec<FieldElement>> {
    let first = components
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty tuple has no coefficients".into()))?;
    let field = first.field().clone();
    let num_vars = first.num_vars();
    let degree = first.degree();
    let monos = monomials_of_degree(num_vars, degree);
    let mut out = Vec::with_capacity(components.len() * monos.len());
    for c in components {
        if c.num_vars() != num_vars {
            return Err(Error::VariableCountMismatch {
                expected: num_vars,
                found: c.num_vars(),
            });
        }
        if c.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: c.degree(),
            });
        }
        for mono in &monos {
            out.push(c.coefficient(mono).cloned().unwrap_or_else(|| field.zero()));
        }
    }
    Ok(out)
}

/// Inverse of coefficient_vector: reassembles a tuple of num_vars
/// degree-m forms from a flat coefficient vector.
pub fn tuple_from_coefficients(
    field: &Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    coeffs: &[FieldElement],
) -> Result<Vec<Form>> {
    let monos = monomials_of_degree(num_vars, degree);
    if coeffs.len() != num_vars * monos.len() {
        return Err(Error::DimensionMismatch);
    }
    (0..num_vars)
        .map(|i| {
            let terms: Vec<_> = monos
                .iter()
                .enumerate()
                .filter(|(p, _)| !coeffs[i * monos.len() + p].is_zero())
                .map(|(p, mono)| {
                    (
                        mono.exponents().to_vec(),
                        coeffs[i * monos.len() + p].clone(),
                    )
                })
                .collect();
            Form::from_terms(field, num_vars, degree, terms)
        })
        .collect()
}

/// Builds the conjugation operator of g on degree-m tuples, column by
/// column from the images of the basis monomial tuples. Functorial:
/// the operator of a product is the product of the operators.
pub fn coefficient_operator(g: &Matrix, m: usize) -> Result<CoefficientOperator> {
    if !g.is_square() || g.row_count() < 2 {
        return Err(Error::DimensionMismatch);
    }
    if m == 0 {
        return Err(Error::InvalidParameter(
            "coefficient space needs degree at least 1".into(),
        ));
    }
    let num_vars = g.row_count();
    let field = g.field().clone();
    let g_inv = g.inverse()?;
    let monos = monomials_of_degree(num_vars, m);
    let size = num_vars * monos.len();
    let mut matrix = Matrix::zero(&field, size, size);
    for comp in 0..num_vars {
        for (pos, mono) in monos.iter().enumerate() {
            let mut basis_tuple = vec![Form::zero(&field, num_vars, m); num_vars];
            basis_tuple[comp] =
                Form::monomial(&field, mono.exponents().to_vec(), field.one())?;
            let image = pair_components(&g_inv, g, &basis_tuple)?;
            let column = coefficient_vector(&image)?;
            for (row, value) in column.into_iter().enumerate() {
                if !value.is_zero() {
                    matrix.set(row, comp * monos.len() + pos, value);
                }
            }
        }
    }
    Ok(CoefficientOperator {
        degree: m,
        num_vars,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;
    use crate::maps::{conjugate_act, make_map, projectively_equal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        let field = q();
        loop {
            let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
            let m = Matrix::from_integers(&field, n, &entries);
            if !m.det().unwrap().is_zero() {
                return m;
            }
        }
    }

    fn random_tuple(rng: &mut ChaCha8Rng, num_vars: usize, degree: usize) -> Vec<Form> {
        let field = q();
        let monos = monomials_of_degree(num_vars, degree);
        loop {
            let tuple: Vec<Form> = (0..num_vars)
                .map(|_| {
                    let terms: Vec<_> = monos
                        .iter()
                        .filter_map(|mono| {
                            let c = rng.gen_range(-4i64..=4);
                            (c != 0).then(|| (mono.exponents().to_vec(), field.integer(c)))
                        })
                        .collect();
                    Form::from_terms(&field, num_vars, degree, terms).unwrap()
                })
                .collect();
            if tuple.iter().any(|f| !f.is_zero()) {
                return tuple;
            }
        }
    }

    #[test]
    fn identity_matrix_gives_the_identity_operator() {
        let field = q();
        for (n, m) in [(2, 3), (3, 2)] {
            let op = coefficient_operator(&Matrix::identity(&field, n), m).unwrap();
            assert!(op.matrix().is_identity());
            let monos = monomials_of_degree(n, m).len();
            assert_eq!(op.size(), n * monos);
        }
    }

    #[test]
    fn diagonal_matrices_act_by_monomial_weights() {
        // g = diag(1, 2) scales the coefficient of x0^i x1^(m-i) in
        // component j by 2^(a_j - <a, e>) with a = (0, 1).
        let field = q();
        let g = Matrix::from_integers(&field, 2, &[1, 0, 0, 2]);
        let op = coefficient_operator(&g, 3).unwrap();
        let a = [0i64, 1];
        let monos = monomials_of_degree(2, 3);
        for comp in 0..2 {
            for (pos, mono) in monos.iter().enumerate() {
                let idx = comp * monos.len() + pos;
                let pairing: i64 = mono
                    .exponents()
                    .iter()
                    .zip(&a)
                    .map(|(&e, &w)| w * e as i64)
                    .sum();
                let delta = a[comp] - pairing;
                let expected = if delta >= 0 {
                    field.rational(ratio(1 << delta, 1))
                } else {
                    field.rational(ratio(1, 1 << (-delta)))
                };
                for row in 0..op.size() {
                    let want = if row == idx { &expected } else { &field.zero() };
                    assert_eq!(op.matrix().get(row, idx), want);
                }
            }
        }
    }

    #[test]
    fn operator_is_functorial_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(12_000);
        for _ in 0..20 {
            let g1 = random_invertible(&mut rng, 2);
            let g2 = random_invertible(&mut rng, 2);
            let product = g1.try_mul(&g2).unwrap();
            let lhs = coefficient_operator(&product, 2).unwrap();
            let rhs = coefficient_operator(&g1, 2)
                .unwrap()
                .matrix()
                .try_mul(coefficient_operator(&g2, 2).unwrap().matrix())
                .unwrap();
            assert_eq!(*lhs.matrix(), rhs);
        }
    }

    #[test]
    fn operator_matches_raw_conjugation_on_random_tuples() {
        let mut rng = ChaCha8Rng::seed_from_u64(12_500);
        for _ in 0..10 {
            let g = random_invertible(&mut rng, 2);
            let tuple = random_tuple(&mut rng, 2, 3);
            let op = coefficient_operator(&g, 3).unwrap();
            let moved = op.apply(&coefficient_vector(&tuple).unwrap()).unwrap();
            let raw = pair_components(&g.inverse().unwrap(), &g, &tuple).unwrap();
            assert_eq!(moved, coefficient_vector(&raw).unwrap());
        }
    }

    #[test]
    fn operator_agrees_with_the_normalized_action_projectively() {
        let field = q();
        let mut rng = ChaCha8Rng::seed_from_u64(13_000);
        let mut checked = 0;
        while checked < 10 {
            let g = random_invertible(&mut rng, 2);
            let tuple = random_tuple(&mut rng, 2, 3);
            let Ok(map) = make_map(&tuple) else { continue };
            if map.degree() != 3 {
                continue;
            }
            let op = coefficient_operator(&g, 3).unwrap();
            let moved = op
                .apply(&coefficient_vector(map.components()).unwrap())
                .unwrap();
            let moved_map =
                make_map(&tuple_from_coefficients(&field, 2, 3, &moved).unwrap()).unwrap();
            assert!(projectively_equal(&moved_map, &conjugate_act(&g, &map).unwrap()));
            checked += 1;
        }
    }

    #[test]
    fn operator_of_an_invertible_matrix_is_invertible() {
        let field = q();
        let g = Matrix::from_integers(&field, 2, &[1, 1, 0, 1]);
        let op = coefficient_operator(&g, 4).unwrap();
        assert!(!op.matrix().det().unwrap().is_zero());
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let field = q();
        let g = Matrix::from_integers(&field, 2, &[1, 2, 2, 4]);
        match coefficient_operator(&g, 2) {
            Err(Error::SingularMatrix) => {}
            _ => panic!("rank-1 matrix must be rejected"),
        }
    }

    #[test]
    fn coefficient_vector_round_trips() {
        let field = q();
        let mut rng = ChaCha8Rng::seed_from_u64(13_500);
        for _ in 0..20 {
            let tuple = random_tuple(&mut rng, 3, 2);
            let coeffs = coefficient_vector(&tuple).unwrap();
            let back = tuple_from_coefficients(&field, 3, 2, &coeffs).unwrap();
            assert_eq!(tuple, back);
        }
    }
}
