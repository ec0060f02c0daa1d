//! Squarefree factorization of binary forms, with linear factors split
//! off over the rationals.

use super::binary::{homogenize, split_x1};
use crate::algebra::qpoly;
use crate::algebra::rational::Rational;
use crate::algebra::{FieldElement, Form, KPoly, Monomial};
use crate::error::{Error, Result};

/// One factor of a binary form. Linear factors are irreducible by
/// definition; higher-degree factors are squarefree but their
/// irreducibility over the base field is not certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFactor {
    pub form: Form,
    pub multiplicity: usize,
    pub certified_irreducible: bool,
}

/// Factorization of a binary form into a constant times normalized
/// squarefree factors with multiplicities. Multiplying everything back
/// together reproduces the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFormFactorization {
    pub constant: FieldElement,
    pub factors: Vec<BinaryFactor>,
}

impl BinaryFormFactorization {
    /// Recombines constant and factors; used to validate the
    /// factorization invariant.
    pub fn expand(&self, num_vars: usize, degree: usize) -> Result<Form> {
        let field = self.constant.field();
        let mut acc = Form::monomial(field, vec![0; num_vars], self.constant.clone())?;
        for factor in &self.factors {
            for _ in 0..factor.multiplicity {
                acc = acc.try_mul(&factor.form)?;
            }
        }
        if acc.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: acc.degree(),
            });
        }
        Ok(acc)
    }

    /// Number of geometric points in the zero locus: an irreducible
    /// factor of degree d vanishes at d distinct points of the
    /// projective line over the algebraic closure, and squarefree
    /// factors of distinct multiplicity share no roots.
    pub fn distinct_points(&self) -> usize {
        self.factors.iter().map(|f| f.form.degree()).sum()
    }

    /// Geometric points whose multiplicity in the form equals `mult`.
    pub fn points_of_multiplicity(&self, mult: usize) -> usize {
        self.factors
            .iter()
            .filter(|f| f.multiplicity == mult)
            .map(|f| f.form.degree())
            .sum()
    }
}

/// Squarefree factorization of a nonzero binary form. The coordinate
/// factors x0, x1 are split off first; the rest is decomposed by Yun's
/// algorithm on the dehomogenization, which is multiplicity-exact over
/// any field of characteristic zero. Over the rationals each squarefree
/// part is further split into linear factors (complete, by the rational
/// root theorem) times an unsplit remainder.
pub fn squarefree_factorization(f: &Form) -> Result<BinaryFormFactorization> {
    if f.num_vars() != 2 {
        return Err(Error::VariableCountMismatch {
            expected: 2,
            found: f.num_vars(),
        });
    }
    if f.is_zero() {
        return Err(Error::InvalidParameter(
            "the zero form has no factorization".into(),
        ));
    }
    let field = f.field().clone();
    let mut factors: Vec<BinaryFactor> = Vec::new();

    // Coordinate content first: f = x0^b x1^a h with h coprime to both.
    let content = f.monomial_content();
    let (b, a) = (content.exponent(0), content.exponent(1));
    let h = f.divide_by_monomial(&Monomial::new(vec![b, a]))?;
    for (var, mult) in [(0usize, b), (1usize, a)] {
        if mult > 0 {
            factors.push(BinaryFactor {
                form: Form::monomial(&field, Monomial::var(2, var).exponents().to_vec(), field.one())?,
                multiplicity: mult as usize,
                certified_irreducible: true,
            });
        }
    }

    // Yun's decomposition of the dehomogenized remainder. Zero roots
    // cannot occur: x0 was already stripped, so u(0) != 0.
    let (residual_val, u) = split_x1(&h);
    debug_assert_eq!(residual_val, 0);
    let constant = u.leading().cloned().unwrap_or_else(|| field.one());
    for (part, mult) in u.squarefree_decomposition() {
        if part.degree() == Some(0) {
            continue;
        }
        let mut remaining = part;
        if field.is_rationals() {
            let as_rationals: Vec<Rational> = remaining
                .coeffs()
                .iter()
                .map(|c| c.as_rational().expect("rational coefficients").clone())
                .collect();
            // Root extraction can fail when a coefficient is too large to
            // factor; the part then stays whole, which only coarsens the
            // witness, never the multiplicity data.
            let roots = match qpoly::rational_roots(&as_rationals) {
                Ok(roots) => roots,
                Err(Error::IrreducibilityVerificationFailed) => Vec::new(),
                Err(e) => return Err(e),
            };
            for (root, _) in roots {
                let linear = KPoly::new(
                    &field,
                    vec![field.rational(-root.clone()), field.one()],
                );
                factors.push(BinaryFactor {
                    form: homogenize(&field, &linear, 1)?,
                    multiplicity: mult,
                    certified_irreducible: true,
                });
                remaining = remaining.div_exact(&linear)?;
            }
        }
        match remaining.degree() {
            None | Some(0) => {}
            Some(1) => factors.push(BinaryFactor {
                form: homogenize(&field, &remaining, 1)?,
                multiplicity: mult,
                certified_irreducible: true,
            }),
            Some(d) => factors.push(BinaryFactor {
                form: homogenize(&field, &remaining, d)?,
                multiplicity: mult,
                certified_irreducible: false,
            }),
        }
    }
    Ok(BinaryFormFactorization { constant, factors })
}
