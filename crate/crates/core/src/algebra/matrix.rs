//! Dense matrices over a number field with exact elimination.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{FieldElement, NumberField};
use super::kpoly::KPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Matrix {
    field: Arc<NumberField>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(
        field: &Arc<NumberField>,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch);
        }
        for entry in &data {
            if !field.same_field(entry.field()) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: &Arc<NumberField>, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch);
        }
        Matrix::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn zero(field: &Arc<NumberField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<NumberField>, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Square matrix with integer entries, row-major.
    pub fn from_integers(field: &Arc<NumberField>, n: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), n * n);
        Matrix {
            field: Arc::clone(field),
            rows: n,
            cols: n,
            data: entries.iter().map(|&e| field.integer(e)).collect(),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        if !self.field.same_field(&other.field) {
            return Err(Error::FieldMismatch);
        }
        let mut out = Matrix::zero(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).try_add(&a.try_mul(b)?)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if a.is_zero() || x.is_zero() {
                    continue;
                }
                *slot = slot.try_add(&a.try_mul(x)?)?;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Matrix> {
        let mut out = self.clone();
        for entry in &mut out.data {
            *entry = entry.try_mul(c)?;
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.try_add(b)?;
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let Some(p) = pivot_row else { continue };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inverse().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(row, j).try_mul(&inv).expect("same field");
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self
                        .get(r, j)
                        .try_sub(&factor.try_mul(self.get(row, j)).expect("same field"))
                        .expect("same field");
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot_row else {
                return Ok(self.field.zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = det.try_mul(&pivot)?;
            let inv = pivot.inverse()?;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).try_mul(&inv)?;
                for j in col..n {
                    let v = m
                        .get(r, j)
                        .try_sub(&factor.try_mul(m.get(col, j))?)?;
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        // Augment with the identity and reduce.
        let mut aug = Matrix::zero(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).any(|&p| p >= n) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if i == j && !e.is_one() {
                    return false;
                }
                if i != j && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.try_add(self.get(i, i))?;
        }
        Ok(t)
    }

    /// Characteristic polynomial det(lambda*I - A) by the
    /// Faddeev-LeVerrier recursion; exact over characteristic zero.
    pub fn charpoly(&self) -> Result<KPoly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut coeffs = vec![self.field.zero(); n + 1];
        coeffs[n] = self.field.one();
        let mut m = Matrix::identity(&self.field, n);
        for k in 1..=n {
            m = self.try_mul(&m)?;
            let c = m
                .trace()?
                .scale(&(-Rational::new(1.into(), (k as i64).into())));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let v = m.get(i, i).try_add(&c)?;
                m.set(i, i, v);
            }
        }
        Ok(KPoly::new(&self.field, coeffs))
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field.same_field(&other.field)
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        for e in &self.data {
            e.hash(state);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
