//! Dense univariate polynomials with number-field coefficients.
//!
//! Used for characteristic polynomials, Euclidean gcds of dehomogenized
//! binary forms, and Yun's squarefree decomposition.

use std::fmt;
use std::sync::Arc;

use super::field::{FieldElement, NumberField};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct KPoly {
    field: Arc<NumberField>,
    coeffs: Vec<FieldElement>,
}

impl KPoly {
    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn new(field: &Arc<NumberField>, mut coeffs: Vec<FieldElement>) -> KPoly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        KPoly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<NumberField>) -> KPoly {
        KPoly {
            field: Arc::clone(field),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> KPoly {
        let field = Arc::clone(c.field());
        KPoly::new(&field, vec![c])
    }

    pub fn x(field: &Arc<NumberField>) -> KPoly {
        KPoly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &KPoly) -> KPoly {
        let mut out = vec![self.field.zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].try_add(c).expect("same field");
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].try_add(c).expect("same field");
        }
        KPoly::new(&self.field, out)
    }

    pub fn neg(&self) -> KPoly {
        KPoly {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &KPoly) -> KPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &KPoly) -> KPoly {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j]
                    .try_add(&a.try_mul(b).expect("same field"))
                    .expect("same field");
            }
        }
        KPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElement) -> KPoly {
        KPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .map(|a| a.try_mul(c).expect("same field"))
                .collect(),
        )
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, divisor: &KPoly) -> Result<(KPoly, KPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((KPoly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        while rem.len() > dd {
            let last = rem.last().unwrap();
            if last.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dd;
            let factor = last.try_mul(&lead_inv)?;
            quot[shift] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let adj = factor.try_mul(c)?;
                rem[shift + i] = rem[shift + i].try_sub(&adj)?;
            }
            rem.pop();
        }
        Ok((KPoly::new(&self.field, quot), KPoly::new(&self.field, rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &KPoly) -> Result<KPoly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact polynomial division".into()))
        }
    }

    pub fn monic(&self) -> KPoly {
        match self.leading() {
            None => self.clone(),
            Some(lead) => self.scale(&lead.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic Euclidean gcd.
    pub fn gcd(&self, other: &KPoly) -> KPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> KPoly {
        if self.coeffs.len() <= 1 {
            return KPoly::zero(&self.field);
        }
        KPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .try_mul(x)
                .and_then(|v| v.try_add(c))
                .expect("same field");
        }
        acc
    }

    /// Yun's squarefree decomposition: returns pairwise-coprime monic
    /// squarefree factors with multiplicities, ascending in multiplicity,
    /// so that input = leading * prod factor^multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(KPoly, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if b.degree() == Some(0) {
                break;
            }
            let ai = b.gcd(&d);
            if ai.degree().unwrap_or(0) > 0 {
                out.push((ai.clone(), i));
            }
            b = b.div_exact(&ai).expect("gcd divides");
            c = d.div_exact(&ai).expect("gcd divides");
            i += 1;
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> KPoly {
        let mut base = self.clone();
        let mut acc = KPoly::constant(self.field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c:?}"),
                1 => format!("({c:?})*t"),
                _ => format!("({c:?})*t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
