//! Finite matrix groups, enumerated exhaustively from generators.

use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::rational::format_rational;
use crate::algebra::{Matrix, NumberField};
use crate::error::{Error, Result};

/// A finite subgroup of GL(dim) with its full element list. The list
/// is closed under products and inverses, starts with the identity,
/// and is deduplicated by exact matrix equality, so a group given by
/// linear lifts may be larger than its projective image; projective
/// comparisons downstream absorb the difference.
#[derive(Clone)]
pub struct FiniteMatrixGroup {
    field: Arc<NumberField>,
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

impl FiniteMatrixGroup {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Matrix size; the group acts on forms in this many variables.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Stable dedup key: every coordinate of every entry in reduced form.
pub(crate) fn matrix_key(m: &Matrix) -> String {
    let mut key = String::new();
    for i in 0..m.row_count() {
        for j in 0..m.col_count() {
            for c in m.get(i, j).coords() {
                key.push_str(&format_rational(c));
                key.push(',');
            }
        }
    }
    key
}

/// Breadth-first closure of the generators under multiplication. The
/// generated semigroup of invertible matrices is a group whenever it
/// is finite, so hitting the cap means the generators almost certainly
/// span an infinite group.
pub fn enumerate_group(generators: &[Matrix], cap: usize) -> Result<FiniteMatrixGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidParameter("at least one generator is required".into()))?;
    if cap == 0 {
        return Err(Error::InvalidParameter("enumeration cap must be positive".into()));
    }
    let field = first.field().clone();
    let dim = first.row_count();
    for g in generators {
        if !g.is_square() || g.row_count() != dim {
            return Err(Error::DimensionMismatch);
        }
        if !g.field().same_field(&field) {
            return Err(Error::FieldMismatch);
        }
        if g.det()?.is_zero() {
            return Err(Error::SingularGenerator);
        }
    }

    let identity = Matrix::identity(&field, dim);
    let mut seen = HashSet::new();
    seen.insert(matrix_key(&identity));
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        for g in generators {
            let product = elements[next].try_mul(g)?;
            if seen.insert(matrix_key(&product)) {
                if elements.len() == cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                elements.push(product);
            }
        }
        next += 1;
    }

    Ok(FiniteMatrixGroup {
        field,
        dim,
        generators: generators.to_vec(),
        elements,
    })
}

/// The image of the group under g -> (g^-1)^t. That map is a group
/// homomorphism, so transforming the element list elementwise yields a
/// closed group of the same order.
pub fn dual_group(group: &FiniteMatrixGroup) -> FiniteMatrixGroup {
    let dualize = |m: &Matrix| {
        m.inverse()
            .expect("group elements are invertible")
            .transpose()
    };
    FiniteMatrixGroup {
        field: group.field.clone(),
        dim: group.dim,
        generators: group.generators.iter().map(dualize).collect(),
        elements: group.elements.iter().map(dualize).collect(),
    }
}
