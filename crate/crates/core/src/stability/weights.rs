//! Torus weights of map tuples and one-parameter limits on the line.
//!
//! A diagonal one-parameter subgroup acts on each coefficient of a map
//! tuple by a power of the parameter; those integer powers are the
//! weights. A tuple is projectively fixed exactly when all its weights
//! agree, and the limit at zero keeps the terms of globally minimal
//! weight.

use crate::algebra::{Form, Monomial};
use crate::error::{Error, Result};
use crate::maps::{certify_regular, make_map, ProjectiveMap, Regularity};

/// One term of a tuple together with its weight under the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermWeight {
    pub component: usize,
    pub monomial: Monomial,
    pub weight: i64,
}

#[derive(Clone, Debug)]
pub struct WeightProfile {
    pub exponents: Vec<i64>,
    pub weights: Vec<TermWeight>,
}

/// Weights of every term of the tuple under conjugation by
/// diag(t^e_0, ..., t^e_{n-1}): a monomial x^a in component i weighs
/// e_i - <a, e>. The boolean reports whether all weights agree, which
/// is exactly projective fixedness under the whole subgroup.
///
/// Raw forms are accepted rather than a finished map so that
/// non-reduced tuples, as produced by eigenspace bases, can be
/// profiled too.
pub fn torus_weight_analysis(
    exponents: &[i64],
    components: &[Form],
) -> Result<(WeightProfile, bool)> {
    if components.is_empty() || components.len() != exponents.len() {
        return Err(Error::DimensionMismatch);
    }
    let num_vars = components[0].num_vars();
    if num_vars != exponents.len() {
        return Err(Error::DimensionMismatch);
    }
    let degree = components[0].degree();
    for c in components {
        if c.num_vars() != num_vars {
            return Err(Error::VariableCountMismatch {
                expected: num_vars,
                found: c.num_vars(),
            });
        }
        if c.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: c.degree(),
            });
        }
    }
    if components.iter().all(|c| c.is_zero()) {
        return Err(Error::AllComponentsZero);
    }
    let mut weights = Vec::new();
    for (i, component) in components.iter().enumerate() {
        for (mono, _) in component.terms_desc() {
            let pairing: i128 = mono
                .exponents()
                .iter()
                .zip(exponents)
                .map(|(&a, &e)| a as i128 * e as i128)
                .sum();
            let weight = i64::try_from(exponents[i] as i128 - pairing).map_err(|_| {
                Error::InvalidParameter("torus weight exceeds the 64-bit range".into())
            })?;
            weights.push(TermWeight {
                component: i,
                monomial: mono.clone(),
                weight,
            });
        }
    }
    let fixed = weights.iter().all(|w| w.weight == weights[0].weight);
    Ok((
        WeightProfile {
            exponents: exponents.to_vec(),
            weights,
        },
        fixed,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitTag {
    /// The limit tuple is a regular map of the same degree.
    RegularLimit,
    /// The limit drops out of the regular locus: a constant map or a
    /// degenerate tuple (common factor, base point, zero component).
    ConstantOrDegenerate,
}

impl LimitTag {
    pub fn as_str(self) -> &'static str {
        match self {
            LimitTag::RegularLimit => "regular-limit",
            LimitTag::ConstantOrDegenerate => "constant-or-degenerate",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LimitResult {
    pub tag: LimitTag,
    /// Surviving terms with their original coefficients, one form per
    /// component, before any normalization.
    pub limit: Vec<Form>,
    pub minimal_weight: i64,
    pub surviving: Vec<TermWeight>,
    /// The normalized certified limit when the tag is RegularLimit.
    pub limit_map: Option<ProjectiveMap>,
}

/// Limit of a self-map of the line under the subgroup with parameters
/// (c, b): the monomial x_0^i x_1^(m-i) weighs (2i - m)c - b in the
/// first component and (2i - m)c + b in the second, and the limit at
/// zero keeps the terms of globally minimal weight. The tag records
/// whether that limit is still a regular degree-m map.
pub fn one_param_limit(f: &ProjectiveMap, c: i64, b: i64) -> Result<LimitResult> {
    if f.source_dim() != 1 {
        return Err(Error::VariableCountMismatch {
            expected: 2,
            found: f.source_dim() + 1,
        });
    }
    if f.target_dim() != 1 {
        return Err(Error::VariableCountMismatch {
            expected: 2,
            found: f.target_dim() + 1,
        });
    }
    if c == 0 && b == 0 {
        return Err(Error::ZeroSubgroup);
    }
    let field = f.field().clone();
    let m = f.degree();
    let mut weights = Vec::new();
    for (comp, component) in f.components().iter().enumerate() {
        let sign = if comp == 0 { -1i128 } else { 1i128 };
        for (mono, _) in component.terms_desc() {
            let i = mono.exponents()[0] as i128;
            let raw = (2 * i - m as i128) * c as i128 + sign * b as i128;
            let weight = i64::try_from(raw).map_err(|_| {
                Error::InvalidParameter("subgroup weight exceeds the 64-bit range".into())
            })?;
            weights.push(TermWeight {
                component: comp,
                monomial: mono.clone(),
                weight,
            });
        }
    }
    let minimal_weight = weights
        .iter()
        .map(|w| w.weight)
        .min()
        .expect("a map has at least one nonzero term");
    let surviving: Vec<TermWeight> = weights
        .into_iter()
        .filter(|w| w.weight == minimal_weight)
        .collect();
    let limit = (0..2)
        .map(|comp| {
            let terms: Vec<_> = surviving
                .iter()
                .filter(|w| w.component == comp)
                .map(|w| {
                    let coeff = f.components()[comp]
                        .coefficient(&w.monomial)
                        .expect("surviving terms come from the component")
                        .clone();
                    (w.monomial.exponents().to_vec(), coeff)
                })
                .collect();
            Form::from_terms(&field, 2, m, terms)
        })
        .collect::<Result<Vec<Form>>>()?;
    let (tag, limit_map) = match make_map(&limit) {
        Err(Error::AllComponentsZero | Error::ConstantAfterReduction) => {
            (LimitTag::ConstantOrDegenerate, None)
        }
        Err(e) => return Err(e),
        Ok(map) if map.degree() != m => (LimitTag::ConstantOrDegenerate, None),
        Ok(map) => {
            let certified = certify_regular(&map)?;
            if certified.regularity() == Regularity::CertifiedRegular {
                (LimitTag::RegularLimit, Some(certified))
            } else {
                (LimitTag::ConstantOrDegenerate, None)
            }
        }
    };
    Ok(LimitResult {
        tag,
        limit,
        minimal_weight,
        surviving,
        limit_map,
    })
}
