//! Randomized checks of the arithmetic foundations: field axioms in
//! the quotient-ring representation, the Euler relation for
//! homogeneous forms, and functoriality of linear substitution. Each
//! check runs at least a hundred seeded instances.

mod common;

use common::{
    cubic_field, random_element, random_form, random_invertible, random_matrix, rationals, rng,
    sqrt2_field,
};
use projendo::algebra::{Form, NumberField};
use std::sync::Arc;

const INSTANCES: usize = 120;

fn fields_under_test() -> Vec<Arc<NumberField>> {
    vec![rationals(), sqrt2_field(), cubic_field()]
}

#[test]
fn field_axioms_hold_on_random_elements() {
    for (fi, field) in fields_under_test().into_iter().enumerate() {
        let mut rng = rng(1000 + fi as u64);
        for _ in 0..INSTANCES {
            let a = random_element(&mut rng, &field, 6);
            let b = random_element(&mut rng, &field, 6);
            let c = random_element(&mut rng, &field, 6);

            let ab = a.try_add(&b).unwrap();
            assert_eq!(ab, b.try_add(&a).unwrap());
            assert_eq!(
                ab.try_add(&c).unwrap(),
                a.try_add(&b.try_add(&c).unwrap()).unwrap()
            );

            let prod = a.try_mul(&b).unwrap();
            assert_eq!(prod, b.try_mul(&a).unwrap());
            assert_eq!(
                prod.try_mul(&c).unwrap(),
                a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
            );

            let lhs = a.try_mul(&ab.try_add(&c).unwrap()).unwrap();
            let rhs = a
                .try_mul(&ab)
                .unwrap()
                .try_add(&a.try_mul(&c).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);

            assert_eq!(a.try_sub(&a).unwrap(), field.zero());
            assert_eq!(a.try_mul(&field.one()).unwrap(), a);
            assert_eq!(a.try_mul(&field.zero()).unwrap(), field.zero());

            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                assert_eq!(a.try_mul(&inv).unwrap(), field.one());
            }

            let cubed = a.try_mul(&a).unwrap().try_mul(&a).unwrap();
            assert_eq!(a.pow(3), cubed);
        }
    }
}

#[test]
fn generator_satisfies_its_minimal_polynomial() {
    for field in [sqrt2_field(), cubic_field()] {
        let alpha = field.generator();
        let mut acc = field.zero();
        for (i, coeff) in field.min_poly().iter().enumerate() {
            let term = alpha.pow(i as u32).try_mul(&field.rational(coeff.clone()));
            acc = acc.try_add(&term.unwrap()).unwrap();
        }
        assert!(acc.is_zero());
    }
}

#[test]
fn euler_relation_holds_on_random_forms() {
    let field = rationals();
    let mut rng = rng(2000);
    for i in 0..INSTANCES {
        let num_vars = 2 + i % 2;
        let degree = 1 + i % 4;
        let f = random_form(&mut rng, &field, num_vars, degree, 5);

        let mut acc = Form::zero(&field, num_vars, degree);
        for v in 0..num_vars {
            let mut exps = vec![0; num_vars];
            exps[v] = 1;
            let xv = Form::monomial(&field, exps, field.one()).unwrap();
            acc = acc.try_add(&xv.try_mul(&f.partial(v).unwrap()).unwrap()).unwrap();
        }
        assert_eq!(acc, f.scale(&field.integer(degree as i64)).unwrap());
    }
}

#[test]
fn linear_substitution_is_functorial() {
    let field = rationals();
    let mut rng = rng(3000);
    for i in 0..INSTANCES {
        let num_vars = 2 + i % 2;
        let degree = 1 + i % 3;
        let f = random_form(&mut rng, &field, num_vars, degree, 4);
        let m = random_matrix(&mut rng, &field, num_vars, 3);
        let n = random_matrix(&mut rng, &field, num_vars, 3);

        // Substituting M then N plugs N x into f(M x), which is the
        // same as the single substitution by the product M N.
        let stepwise = f
            .substitute_linear(&m)
            .unwrap()
            .substitute_linear(&n)
            .unwrap();
        let direct = f.substitute_linear(&m.try_mul(&n).unwrap()).unwrap();
        assert_eq!(stepwise, direct);
    }
}

#[test]
fn linear_substitution_matches_evaluation() {
    let field = rationals();
    let mut rng = rng(4000);
    for i in 0..INSTANCES {
        let num_vars = 2 + i % 2;
        let degree = 1 + i % 3;
        let f = random_form(&mut rng, &field, num_vars, degree, 4);
        let m = random_invertible(&mut rng, &field, num_vars, 3);
        let point: Vec<_> = (0..num_vars)
            .map(|_| random_element(&mut rng, &field, 4))
            .collect();

        let moved = m.mul_vec(&point).unwrap();
        assert_eq!(
            f.substitute_linear(&m).unwrap().evaluate(&point).unwrap(),
            f.evaluate(&moved).unwrap()
        );
    }
}
