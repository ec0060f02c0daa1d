//! Simple number fields Q(alpha) = Q[t]/(mu(t)) and their elements.
//!
//! The minimal polynomial is monic over Q. Up to degree 4 the constructor
//! proves irreducibility; higher degrees must be asserted by the caller
//! and the field records that the assertion was not checked. The
//! rationals themselves are the degree-1 field with mu = t.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num::{One, Zero};
use once_cell::sync::Lazy;

use super::qpoly;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Whether the minimal polynomial's irreducibility was proven or taken
/// on the caller's word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    VerifiedOverQ,
    AssertedByCaller,
}

pub struct NumberField {
    min_poly: Vec<Rational>,
    degree: usize,
    irreducibility: Irreducibility,
}

static RATIONALS: Lazy<Arc<NumberField>> = Lazy::new(|| {
    Arc::new(NumberField {
        min_poly: vec![Rational::zero(), Rational::one()],
        degree: 1,
        irreducibility: Irreducibility::VerifiedOverQ,
    })
});

impl NumberField {
    /// The field of rational numbers, as the quotient by mu(t) = t.
    pub fn rationals() -> Arc<NumberField> {
        Arc::clone(&RATIONALS)
    }

    /// Builds Q[t]/(mu). Proves irreducibility for deg(mu) <= 4 and
    /// rejects higher degrees; see [`NumberField::new_asserted`].
    pub fn new(min_poly: Vec<Rational>) -> Result<Arc<NumberField>> {
        let min_poly = qpoly::trim(min_poly);
        Self::validate_monic(&min_poly)?;
        if min_poly.len() - 1 > 4 {
            return Err(Error::IrreducibilityNotChecked);
        }
        if !qpoly::irreducible_over_q(&min_poly)? {
            return Err(Error::ReducibleMinimalPolynomial);
        }
        Ok(Arc::new(NumberField {
            degree: min_poly.len() - 1,
            min_poly,
            irreducibility: Irreducibility::VerifiedOverQ,
        }))
    }

    /// Builds Q[t]/(mu) taking irreducibility on the caller's word when
    /// the degree exceeds 4; low degrees are still proven.
    pub fn new_asserted(min_poly: Vec<Rational>) -> Result<Arc<NumberField>> {
        let min_poly = qpoly::trim(min_poly);
        Self::validate_monic(&min_poly)?;
        let degree = min_poly.len() - 1;
        if degree <= 4 {
            return Self::new(min_poly);
        }
        Ok(Arc::new(NumberField {
            degree,
            min_poly,
            irreducibility: Irreducibility::AssertedByCaller,
        }))
    }

    fn validate_monic(min_poly: &[Rational]) -> Result<()> {
        if min_poly.len() < 2 || !min_poly.last().unwrap().is_one() {
            return Err(Error::BadMinimalPolynomial);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Structural equality of the defining polynomial.
    pub fn same_field(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.min_poly == other.min_poly
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.rational(Rational::zero())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.rational(Rational::one())
    }

    pub fn integer(self: &Arc<Self>, n: i64) -> FieldElement {
        self.rational(Rational::from_integer(n.into()))
    }

    /// Embeds a rational as the constant coordinate.
    pub fn rational(self: &Arc<Self>, r: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree];
        coords[0] = r;
        FieldElement {
            field: Arc::clone(self),
            coords,
        }
    }

    /// The residue class of t, i.e. the field generator alpha.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        if self.degree == 1 {
            // t is congruent to 0 modulo mu = t.
            return self.zero();
        }
        let mut coords = vec![Rational::zero(); self.degree];
        coords[1] = Rational::one();
        FieldElement {
            field: Arc::clone(self),
            coords,
        }
    }

    /// Element from coordinates in the power basis 1, alpha, ..., alpha^(d-1).
    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: coords.len(),
            });
        }
        Ok(FieldElement {
            field: Arc::clone(self),
            coords,
        })
    }

    /// Reduces an arbitrary-length coordinate vector modulo mu.
    fn reduce(self: &Arc<Self>, mut coords: Vec<Rational>) -> FieldElement {
        let d = self.degree;
        while coords.len() > d {
            let top = coords.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coords.len() - d;
            for (i, mc) in self.min_poly.iter().take(d).enumerate() {
                let adj = &top * mc;
                coords[shift + i] -= adj;
            }
        }
        coords.resize(d, Rational::zero());
        FieldElement {
            field: Arc::clone(self),
            coords,
        }
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(deg {}, mu = ", self.degree)?;
        let strs: Vec<String> = self.min_poly.iter().map(format_rational).collect();
        write!(f, "[{}])", strs.join(", "))
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for NumberField {}

/// An element of a [`NumberField`] in power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when every higher coordinate vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coords,
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coords,
        })
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let d = self.field.degree;
        let mut conv = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        Ok(self.field.reduce(conv))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// modulo mu. With an asserted (unverified) modulus a nonzero
    /// element can fail to be invertible; that reports `NotInvertible`.
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = qpoly::trim(self.coords.clone());
        let (g, s, _) = qpoly::ext_gcd(&a, self.field.min_poly());
        if g.len() != 1 {
            return Err(Error::NotInvertible);
        }
        // g is monic, hence exactly 1; s is the inverse.
        Ok(self.field.reduce(s))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut exp: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.try_mul(&base).expect("same field");
            }
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.min_poly.len().hash(state);
        for c in &self.coords {
            c.hash(state);
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", format_rational(r));
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*a", format_rational(c)),
                _ => format!("{}*a^{}", format_rational(c), i),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $checked:ident, $msg:literal) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect($msg)
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect($msg)
            }
        }
    };
}

element_binop!(Add, add, try_add, "field mismatch in +");
element_binop!(Sub, sub, try_sub, "field mismatch in -");
element_binop!(Mul, mul, try_mul, "field mismatch in *");

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
