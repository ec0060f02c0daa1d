//! A formal intersection ring for the projectivization of a rank-2
//! bundle: free commutative polynomials over named base symbols, with
//! the single fiber relation xi^2 = -xi*c1E - c2E applied on every
//! product.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::algebra::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// The formal generators, in canonical order. Base classes commute
/// freely and satisfy no relations; only the tautological divisor xi
/// is subject to reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// Tautological divisor of the bundle.
    Xi,
    /// First Chern class of the bundle being projectivized.
    C1E,
    /// Second Chern class of the same bundle.
    C2E,
    /// First Chern class of the comparison bundle.
    C1F,
    /// Second Chern class of the comparison bundle.
    C2F,
    /// An otherwise unconstrained degree-1 base divisor; doubles as
    /// the unknown when solving twist equations.
    D,
    /// Canonical class of the base.
    KB,
}

const NAMES: [&str; 7] = ["xi", "c1E", "c2E", "c1F", "c2F", "D", "KB"];
const WEIGHTS: [u32; 7] = [1, 1, 2, 1, 2, 1, 1];

impl Symbol {
    fn index(self) -> usize {
        match self {
            Symbol::Xi => 0,
            Symbol::C1E => 1,
            Symbol::C2E => 2,
            Symbol::C1F => 3,
            Symbol::C2F => 4,
            Symbol::D => 5,
            Symbol::KB => 6,
        }
    }
}

type Exps = [u32; 7];
pub(crate) type TermMap = BTreeMap<Exps, Rational>;

/// Total degree for the grading in which divisors weigh 1 and second
/// Chern classes weigh 2.
fn weighted_degree(exps: &Exps) -> u32 {
    exps.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum()
}

fn insert_term(map: &mut TermMap, exps: Exps, coeff: Rational) {
    use std::collections::btree_map::Entry;
    if coeff.is_zero() {
        return;
    }
    match map.entry(exps) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get() + coeff;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn raw_mul(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut exps = *ea;
            for (x, y) in exps.iter_mut().zip(eb) {
                *x += *y;
            }
            insert_term(&mut out, exps, ca * cb);
        }
    }
    out
}

/// Rewrites every xi power above 1 through the fiber relation; each
/// step trades xi^k for xi^(k-1)*c1E and xi^(k-2)*c2E, so the top xi
/// exponent strictly drops and the loop terminates.
pub(crate) fn reduce(mut terms: TermMap) -> TermMap {
    while let Some((&exps, _)) = terms.iter().find(|(exps, _)| exps[0] >= 2) {
        let coeff = terms.remove(&exps).unwrap();
        let mut with_c1 = exps;
        with_c1[0] -= 1;
        with_c1[1] += 1;
        let mut with_c2 = exps;
        with_c2[0] -= 2;
        with_c2[2] += 1;
        insert_term(&mut terms, with_c1, -&coeff);
        insert_term(&mut terms, with_c2, -coeff);
    }
    terms
}

/// A ring element, kept reduced (xi-exponent at most 1) and
/// homogeneous for the weighted grading.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    terms: TermMap,
}

impl ChowClass {
    pub fn zero() -> ChowClass {
        ChowClass {
            terms: TermMap::new(),
        }
    }

    pub fn constant(value: Rational) -> ChowClass {
        let mut terms = TermMap::new();
        insert_term(&mut terms, [0; 7], value);
        ChowClass { terms }
    }

    pub fn symbol(symbol: Symbol) -> ChowClass {
        let mut exps = [0; 7];
        exps[symbol.index()] = 1;
        let mut terms = TermMap::new();
        insert_term(&mut terms, exps, Rational::one());
        ChowClass { terms }
    }

    /// Sums the given terms, reduces xi powers, and checks that what
    /// remains is homogeneous.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, Rational)>) -> Result<ChowClass> {
        let mut map = TermMap::new();
        for (exps, coeff) in terms {
            insert_term(&mut map, exps, coeff);
        }
        let map = reduce(map);
        let mut degrees = map.keys().map(weighted_degree);
        if let Some(first) = degrees.next() {
            if degrees.any(|d| d != first) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(ChowClass { terms: map })
    }

    #[cfg(test)]
    pub(crate) fn raw(&self) -> &TermMap {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree, or None for the zero class.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(weighted_degree)
    }

    pub fn coefficient(&self, exps: &Exps) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest power of the symbol appearing in any term.
    pub fn max_exponent(&self, symbol: Symbol) -> u32 {
        let i = symbol.index();
        self.terms.keys().map(|exps| exps[i]).max().unwrap_or(0)
    }

    /// Terms in graded-lex descending order.
    pub fn terms_desc(&self) -> Vec<(Exps, Rational)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(exps, coeff)| (*exps, coeff.clone()))
            .collect();
        out.sort_by(|(a, _), (b, _)| {
            weighted_degree(b)
                .cmp(&weighted_degree(a))
                .then_with(|| b.cmp(a))
        });
        out
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass> {
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) if a != b => return Err(Error::NotHomogeneous),
            _ => {}
        }
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            insert_term(&mut terms, *exps, coeff.clone());
        }
        Ok(ChowClass { terms })
    }

    pub fn try_sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.try_add(&other.scale(&(-Rational::one())))
    }

    pub fn scale(&self, factor: &Rational) -> ChowClass {
        if factor.is_zero() {
            return ChowClass::zero();
        }
        ChowClass {
            terms: self
                .terms
                .iter()
                .map(|(exps, coeff)| (*exps, coeff * factor))
                .collect(),
        }
    }

    /// Splits a reduced class as xi * first + second with both parts
    /// free of xi.
    pub fn split_xi(&self) -> (ChowClass, ChowClass) {
        let mut with_xi = TermMap::new();
        let mut base = TermMap::new();
        for (exps, coeff) in &self.terms {
            if exps[0] == 0 {
                base.insert(*exps, coeff.clone());
            } else {
                let mut stripped = *exps;
                stripped[0] = 0;
                with_xi.insert(stripped, coeff.clone());
            }
        }
        (ChowClass { terms: with_xi }, ChowClass { terms: base })
    }
}

/// Ring product, reduced to fiber-linear form.
pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> ChowClass {
    ChowClass {
        terms: reduce(raw_mul(&a.terms, &b.terms)),
    }
}

fn format_monomial(exps: &Exps) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(NAMES[i].to_string()),
            _ => parts.push(format!("{}^{e}", NAMES[i])),
        }
    }
    parts.join("*")
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, (exps, coeff)) in self.terms_desc().into_iter().enumerate() {
            let sign = if coeff.is_negative() { "-" } else { "+" };
            match (position, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                (_, s) => write!(f, " {s} ")?,
            }
            let monomial = format_monomial(&exps);
            let magnitude = coeff.abs();
            if monomial.is_empty() {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{}*{monomial}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
