//! Sparse homogeneous multivariate polynomials over a number field.
//!
//! A `Form` carries its variable count and total degree even when it has
//! no terms, so the zero form of any degree is representable. Only
//! nonzero coefficients are stored, keyed by monomial in graded-lex
//! order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{FieldElement, NumberField};
use super::matrix::Matrix;
use super::monomial::Monomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Form {
    field: Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Form {
    pub fn zero(field: &Arc<NumberField>, num_vars: usize, degree: usize) -> Form {
        assert!(num_vars >= 1, "need at least one variable");
        Form {
            field: Arc::clone(field),
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single-term form c * x^exponents.
    pub fn monomial(
        field: &Arc<NumberField>,
        exponents: Vec<u32>,
        coefficient: FieldElement,
    ) -> Result<Form> {
        let mono = Monomial::new(exponents);
        let mut f = Form::zero(field, mono.num_vars(), mono.total_degree());
        f.check_coefficient(&coefficient)?;
        if !coefficient.is_zero() {
            f.terms.insert(mono, coefficient);
        }
        Ok(f)
    }

    /// Builds a form from (exponents, coefficient) pairs, rejecting
    /// terms whose total degree differs from `degree`.
    pub fn from_terms(
        field: &Arc<NumberField>,
        num_vars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, FieldElement)>,
    ) -> Result<Form> {
        let mut f = Form::zero(field, num_vars, degree);
        for (exponents, coeff) in terms {
            if exponents.len() != num_vars {
                return Err(Error::VariableCountMismatch {
                    expected: num_vars,
                    found: exponents.len(),
                });
            }
            let mono = Monomial::new(exponents);
            if mono.total_degree() != degree {
                return Err(Error::NotHomogeneous);
            }
            f.check_coefficient(&coeff)?;
            f.add_term(mono, coeff);
        }
        Ok(f)
    }

    fn check_coefficient(&self, c: &FieldElement) -> Result<()> {
        if self.field.same_field(c.field()) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn add_term(&mut self, mono: Monomial, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(existing) => {
                let sum = existing.try_add(&coeff).expect("same field");
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    /// Terms leading-first (descending graded-lex).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&FieldElement> {
        self.terms.get(mono)
    }

    /// Largest monomial present, i.e. the graded-lex leading term.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    fn check_compatible(&self, other: &Form) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VariableCountMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        if !self.field.same_field(&other.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(mono.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = -&*coeff;
        }
        out
    }

    pub fn try_mul(&self, other: &Form) -> Result<Form> {
        self.check_compatible(other)?;
        let mut out = Form::zero(&self.field, self.num_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.try_mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Form> {
        self.check_coefficient(c)?;
        if c.is_zero() {
            return Ok(Form::zero(&self.field, self.num_vars, self.degree));
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = coeff.try_mul(c)?;
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &Rational) -> Form {
        self.scale(&self.field.rational(r.clone()))
            .expect("scalar from own field")
    }

    /// Partial derivative with respect to x_i; degree drops by one.
    pub fn partial(&self, i: usize) -> Result<Form> {
        if i >= self.num_vars {
            return Err(Error::VariableCountMismatch {
                expected: self.num_vars,
                found: i + 1,
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeTooSmall {
                minimum: 1,
                found: 0,
            });
        }
        let mut out = Form::zero(&self.field, self.num_vars, self.degree - 1);
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = mono.exponents().to_vec();
            exps[i] -= 1;
            let scaled = coeff.scale(&Rational::from_integer((e as i64).into()));
            out.add_term(Monomial::new(exps), scaled);
        }
        Ok(out)
    }

    /// Evaluates at a point with coordinates in the same field.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::VariableCountMismatch {
                expected: self.num_vars,
                found: point.len(),
            });
        }
        for c in point {
            self.check_coefficient(c)?;
        }
        let mut acc = self.field.zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&point[i].pow(e))?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Substitution x -> Mx: the result is `self` composed with the
    /// linear map given by the square matrix M, so result(x) = f(Mx).
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Form> {
        if m.row_count() != self.num_vars || m.col_count() != self.num_vars {
            return Err(Error::DimensionMismatch);
        }
        if !self.field.same_field(m.field()) {
            return Err(Error::FieldMismatch);
        }
        // Row i of M is the linear form substituted for x_i.
        let rows: Vec<Form> = (0..self.num_vars)
            .map(|i| {
                let mut row = Form::zero(&self.field, self.num_vars, 1);
                for j in 0..self.num_vars {
                    row.add_term(Monomial::var(self.num_vars, j), m.get(i, j).clone());
                }
                row
            })
            .collect();
        let mut power_cache: Vec<Vec<Form>> = (0..self.num_vars)
            .map(|i| vec![Form::monomial(&self.field, vec![0; self.num_vars], self.field.one())
                .expect("constant"), rows[i].clone()])
            .collect();
        let power = |cache: &mut Vec<Vec<Form>>, i: usize, e: u32| -> Form {
            while cache[i].len() <= e as usize {
                let last = cache[i].last().unwrap().clone();
                cache[i].push(last.try_mul(&rows[i]).expect("compatible"));
            }
            cache[i][e as usize].clone()
        };
        let mut out = Form::zero(&self.field, self.num_vars, self.degree);
        for (mono, coeff) in &self.terms {
            let mut term =
                Form::monomial(&self.field, vec![0; self.num_vars], coeff.clone())?;
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&power(&mut power_cache, i, e))?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Substitutes a form for every variable: with one substituent s_i of
    /// a common degree d per variable, the result is f(s_0, ..., s_n), a
    /// form of degree (deg f) * d in the substituents' variables.
    pub fn substitute_forms(&self, subs: &[Form]) -> Result<Form> {
        if subs.len() != self.num_vars || subs.is_empty() {
            return Err(Error::VariableCountMismatch {
                expected: self.num_vars,
                found: subs.len(),
            });
        }
        let sub_vars = subs[0].num_vars();
        let sub_degree = subs[0].degree();
        for s in subs {
            if !s.field().same_field(&self.field) {
                return Err(Error::FieldMismatch);
            }
            if s.num_vars() != sub_vars {
                return Err(Error::VariableCountMismatch {
                    expected: sub_vars,
                    found: s.num_vars(),
                });
            }
            if s.degree() != sub_degree {
                return Err(Error::DegreeMismatch {
                    expected: sub_degree,
                    found: s.degree(),
                });
            }
        }
        let one = Form::monomial(&self.field, vec![0; sub_vars], self.field.one())?;
        let mut power_cache: Vec<Vec<Form>> =
            subs.iter().map(|s| vec![one.clone(), s.clone()]).collect();
        let power = |cache: &mut Vec<Vec<Form>>, i: usize, e: u32| -> Result<Form> {
            while cache[i].len() <= e as usize {
                let last = cache[i].last().unwrap().clone();
                cache[i].push(last.try_mul(&subs[i])?);
            }
            Ok(cache[i][e as usize].clone())
        };
        let mut out = Form::zero(&self.field, sub_vars, self.degree * sub_degree);
        for (mono, coeff) in &self.terms {
            let mut term = Form::monomial(&self.field, vec![0; sub_vars], coeff.clone())?;
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&power(&mut power_cache, i, e)?)?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Greatest monomial dividing every term; the constant monomial for
    /// the zero form.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        match iter.next() {
            None => Monomial::one(self.num_vars),
            Some(first) => iter.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Exact division by a monomial that divides every term.
    pub fn divide_by_monomial(&self, mono: &Monomial) -> Result<Form> {
        let mut out = Form::zero(
            &self.field,
            self.num_vars,
            self.degree
                .checked_sub(mono.total_degree())
                .ok_or(Error::NotHomogeneous)?,
        );
        for (m, c) in &self.terms {
            let q = m
                .checked_div(mono)
                .ok_or_else(|| Error::Internal("monomial does not divide form".into()))?;
            out.terms.insert(q, c.clone());
        }
        Ok(out)
    }

    /// Scales so the graded-lex leading coefficient becomes 1; returns
    /// the scalar that multiplied the form. Zero forms pass through.
    pub fn normalize_leading(&self) -> (Form, FieldElement) {
        match self.leading() {
            None => (self.clone(), self.field.one()),
            Some((_, lead)) => {
                let inv = lead.inverse().expect("leading coefficient is nonzero");
                (self.scale(&inv).expect("same field"), inv)
            }
        }
    }
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field)
            && self.num_vars == other.num_vars
            && self.degree == other.degree
            && self.terms == other.terms
    }
}

impl Eq for Form {}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0[deg {}]", self.degree);
        }
        let parts: Vec<String> = self
            .terms_desc()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c:?}")
                } else if c.is_one() {
                    format!("{m:?}")
                } else {
                    format!("({c:?})*{m:?}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
