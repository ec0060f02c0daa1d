//! Sylvester resultants of binary forms.

use crate::algebra::{FieldElement, Form, Matrix};
use crate::error::{Error, Result};

/// Coefficients of a binary form along descending powers of the first
/// variable: position j holds the coefficient of x0^(d-j) x1^j, with d
/// the nominal degree. Using the nominal degree (rather than trimming)
/// keeps roots at (1:0) visible to the resultant.
fn descending_coefficients(f: &Form) -> Vec<FieldElement> {
    let d = f.degree();
    let mut coeffs = vec![f.field().zero(); d + 1];
    for (mono, c) in f.terms() {
        coeffs[d - mono.exponent(0) as usize] = c.clone();
    }
    coeffs
}

/// Sylvester resultant of two binary forms, taken at their nominal
/// degrees. Zero iff the forms share a projective root over the
/// algebraic closure; the zero form shares every root.
pub fn sylvester_resultant(f: &Form, g: &Form) -> Result<FieldElement> {
    for h in [f, g] {
        if h.num_vars() != 2 {
            return Err(Error::VariableCountMismatch {
                expected: 2,
                found: h.num_vars(),
            });
        }
    }
    if !f.field().same_field(g.field()) {
        return Err(Error::FieldMismatch);
    }
    let field = f.field().clone();
    let (df, dg) = (f.degree(), g.degree());
    let n = df + dg;
    if n == 0 {
        // Two constants never share a projective root.
        return Ok(field.one());
    }
    let fc = descending_coefficients(f);
    let gc = descending_coefficients(g);
    let mut m = Matrix::zero(&field, n, n);
    for shift in 0..dg {
        for (j, c) in fc.iter().enumerate() {
            m.set(shift, shift + j, c.clone());
        }
    }
    for shift in 0..df {
        for (j, c) in gc.iter().enumerate() {
            m.set(dg + shift, shift + j, c.clone());
        }
    }
    m.det()
}
