//! Seeded random generators shared by the integration suites. Every
//! suite that samples instances funnels through these, so a failure
//! reproduces from the test's fixed seed alone.
#![allow(dead_code)]

use std::sync::Arc;

use projendo::algebra::monomial::monomials_of_degree;
use projendo::algebra::rational::ratio;
use projendo::algebra::{FieldElement, Form, Matrix, NumberField, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rationals() -> Arc<NumberField> {
    NumberField::rationals()
}

/// Quadratic field adjoining a square root of 2.
pub fn sqrt2_field() -> Arc<NumberField> {
    NumberField::new(vec![ratio(-2, 1), ratio(0, 1), ratio(1, 1)]).expect("t^2 - 2 is irreducible")
}

/// Cubic field on t^3 - t - 1, which has no rational root.
pub fn cubic_field() -> Arc<NumberField> {
    NumberField::new(vec![ratio(-1, 1), ratio(-1, 1), ratio(0, 1), ratio(1, 1)])
        .expect("t^3 - t - 1 is irreducible")
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn random_element(rng: &mut ChaCha8Rng, field: &Arc<NumberField>, bound: i64) -> FieldElement {
    let coords = (0..field.degree())
        .map(|_| random_rational(rng, bound))
        .collect();
    field.element(coords).expect("coordinate count matches")
}

/// Form with integer coefficients drawn uniformly from [-bound, bound]
/// for every monomial of the given degree; zero draws keep it sparse.
pub fn random_form(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    bound: i64,
) -> Form {
    let terms: Vec<_> = monomials_of_degree(num_vars, degree)
        .into_iter()
        .map(|m| {
            (
                m.exponents().to_vec(),
                field.integer(rng.gen_range(-bound..=bound)),
            )
        })
        .collect();
    Form::from_terms(field, num_vars, degree, terms).expect("degrees are consistent")
}

pub fn random_nonzero_form(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    bound: i64,
) -> Form {
    loop {
        let f = random_form(rng, field, num_vars, degree, bound);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Pair of nonzero binary forms of one degree, as raw component data
/// for maps of the projective line.
pub fn random_binary_pair(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> (Form, Form) {
    let field = rationals();
    (
        random_nonzero_form(rng, &field, 2, degree, bound),
        random_nonzero_form(rng, &field, 2, degree, bound),
    )
}

pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    n: usize,
    bound: i64,
) -> Matrix {
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-bound..=bound)).collect();
    Matrix::from_integers(field, n, &entries)
}

pub fn random_invertible(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    n: usize,
    bound: i64,
) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, bound);
        if !m.det().expect("square by construction").is_zero() {
            return m;
        }
    }
}
