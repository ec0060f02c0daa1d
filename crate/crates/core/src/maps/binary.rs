//! Conversions between binary forms and univariate polynomials, and the
//! gcd arithmetic built on them.
//!
//! A binary form splits as x1^a * h with x1 not dividing h; then h is
//! the homogenization of the univariate polynomial h(t, 1), which has
//! full degree because the x0-pure term of h survives. All gcd and
//! division questions reduce to that picture.

use crate::algebra::{Form, KPoly, NumberField};
use crate::error::{Error, Result};
use std::sync::Arc;

/// Largest power of x1 dividing the form (0 for the zero form).
pub fn x1_valuation(f: &Form) -> u32 {
    f.terms().map(|(m, _)| m.exponent(1)).min().unwrap_or(0)
}

/// For f = x1^a * h with x1 not dividing h, returns (a, h(t, 1)).
/// The polynomial part has degree exactly deg f - a.
pub fn split_x1(f: &Form) -> (u32, KPoly) {
    let a = x1_valuation(f);
    let mut coeffs = vec![f.field().zero(); f.degree() + 1 - a as usize];
    for (mono, c) in f.terms() {
        coeffs[mono.exponent(0) as usize] = c.clone();
    }
    (a, KPoly::new(f.field(), coeffs))
}

/// Homogenizes a univariate polynomial to a binary form of the given
/// degree, padding with powers of x1: t^i becomes x0^i x1^(degree-i).
pub fn homogenize(field: &Arc<NumberField>, p: &KPoly, degree: usize) -> Result<Form> {
    let d = p.degree().unwrap_or(0);
    if !p.is_zero() && d > degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: d,
        });
    }
    let terms: Vec<_> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| (vec![i as u32, (degree - i) as u32], c.clone()))
        .collect();
    Form::from_terms(field, 2, degree, terms)
}

/// Gcd of two binary forms, normalized to leading coefficient 1.
/// gcd(f, 0) = normalized f; gcd(0, 0) is the zero form.
pub fn binary_gcd(f: &Form, g: &Form) -> Result<Form> {
    if f.num_vars() != 2 || g.num_vars() != 2 {
        return Err(Error::VariableCountMismatch {
            expected: 2,
            found: f.num_vars().max(g.num_vars()),
        });
    }
    if !f.field().same_field(g.field()) {
        return Err(Error::FieldMismatch);
    }
    if f.is_zero() {
        return Ok(g.normalize_leading().0);
    }
    if g.is_zero() {
        return Ok(f.normalize_leading().0);
    }
    let (af, pf) = split_x1(f);
    let (ag, pg) = split_x1(g);
    let d = pf.gcd(&pg);
    let a = af.min(ag);
    let poly_part = homogenize(f.field(), &d, d.degree().unwrap_or(0))?;
    let x1_part = Form::monomial(f.field(), vec![0, a], f.field().one())?;
    let gcd = poly_part.try_mul(&x1_part)?;
    Ok(gcd.normalize_leading().0)
}

/// Exact division of binary forms; the divisor must divide f.
pub fn binary_divide_exact(f: &Form, d: &Form) -> Result<Form> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.is_zero() {
        let degree = f
            .degree()
            .checked_sub(d.degree())
            .ok_or_else(|| Error::Internal("divisor degree exceeds form degree".into()))?;
        return Ok(Form::zero(f.field(), 2, degree));
    }
    let (af, pf) = split_x1(f);
    let (ad, pd) = split_x1(d);
    if ad > af {
        return Err(Error::Internal("divisor does not divide the form".into()));
    }
    let q = pf.div_exact(&pd)?;
    let qdeg = q.degree().unwrap_or(0);
    let qform = homogenize(f.field(), &q, qdeg)?;
    let x1_part = Form::monomial(f.field(), vec![0, af - ad], f.field().one())?;
    qform.try_mul(&x1_part)
}
