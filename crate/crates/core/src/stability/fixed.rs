//! Fixed maps of a matrix acting by conjugation: base-field
//! eigenvalues of the coefficient operator, their eigenspaces as
//! spaces of map tuples, and a per-eigenspace verdict on whether any
//! member is a regular map.

use std::collections::HashMap;

use num::Zero;

use super::operator::{coefficient_operator, tuple_from_coefficients};
use crate::algebra::rational::{clear_denominators, positive_divisors, Rational};
use crate::algebra::{FieldElement, Form, KPoly, Matrix, Monomial};
use crate::equivariant::search::stage_vectors;
use crate::error::{Error, Result};
use crate::maps::{certify_regular, make_map, ProjectiveMap, Regularity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenspaceVerdict {
    /// Some member of the eigenspace is a certified-regular map; a
    /// witness accompanies the verdict.
    ContainsRegularMap,
    /// The resultant vanishes identically on the eigenspace (or every
    /// member shares a base point), so no member is regular.
    ContainsNoRegularMap,
    /// The searches were inconclusive at this scale.
    Undecided,
}

impl EigenspaceVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenspaceVerdict::ContainsRegularMap => "contains-a-regular-map",
            EigenspaceVerdict::ContainsNoRegularMap => "contains-no-regular-map",
            EigenspaceVerdict::Undecided => "undecided",
        }
    }
}

pub struct Eigenspace {
    pub eigenvalue: FieldElement,
    /// Algebraic multiplicity in the characteristic polynomial.
    pub multiplicity: usize,
    /// Kernel basis of (operator - eigenvalue), as map tuples. Members
    /// need not be valid projective maps; degenerate tuples are kept.
    pub basis: Vec<Vec<Form>>,
    pub verdict: EigenspaceVerdict,
    pub witness: Option<ProjectiveMap>,
}

pub struct FixedMapReport {
    pub degree: usize,
    pub num_vars: usize,
    pub charpoly: KPoly,
    pub eigenspaces: Vec<Eigenspace>,
    /// The characteristic polynomial with all base-field linear
    /// factors divided out; eigenvalues in extension fields are left
    /// here unfactored.
    pub remainder: KPoly,
}

/// Eigenanalysis of the conjugation action of g on degree-m tuples.
/// Rational eigenvalues are extracted completely (candidates come from
/// the rational root theorem and every one is verified by exact
/// evaluation); roots that generate a proper extension are not chased
/// and stay in the remainder polynomial.
pub fn fixed_maps(g: &Matrix, m: usize) -> Result<FixedMapReport> {
    let op = coefficient_operator(g, m)?;
    let field = g.field().clone();
    let num_vars = op.num_vars();
    let charpoly = op.matrix().charpoly()?;
    let roots = rational_roots(&charpoly)?;
    let mut remainder = charpoly.clone();
    let mut eigenspaces = Vec::with_capacity(roots.len());
    for (value, multiplicity) in roots {
        let lambda = field.rational(value);
        let linear = KPoly::new(&field, vec![-&lambda, field.one()]);
        for _ in 0..multiplicity {
            remainder = remainder.div_exact(&linear)?;
        }
        let shifted = op
            .matrix()
            .try_add(&Matrix::identity(&field, op.size()).scale(&-&lambda)?)?;
        let basis = shifted
            .kernel_basis()
            .iter()
            .map(|v| tuple_from_coefficients(&field, num_vars, m, v))
            .collect::<Result<Vec<_>>>()?;
        let (verdict, witness) = eigenspace_verdict(m, &basis)?;
        eigenspaces.push(Eigenspace {
            eigenvalue: lambda,
            multiplicity,
            basis,
            verdict,
            witness,
        });
    }
    Ok(FixedMapReport {
        degree: m,
        num_vars,
        charpoly,
        eigenspaces,
        remainder,
    })
}

/// All rational roots of a polynomial over the base field, with
/// multiplicities, ascending. A rational root must be a root of every
/// coordinate polynomial, so candidates are drawn from the first
/// nonzero one and then verified against the full polynomial.
fn rational_roots(poly: &KPoly) -> Result<Vec<(Rational, usize)>> {
    let field = poly.field().clone();
    let coords = (0..field.degree())
        .map(|j| {
            poly.coeffs()
                .iter()
                .map(|c| c.coords()[j].clone())
                .collect::<Vec<Rational>>()
        })
        .find(|coeffs| coeffs.iter().any(|c| !c.is_zero()))
        .expect("a nonzero polynomial has a nonzero coordinate");
    let (ints, _) = clear_denominators(&coords);
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let high = ints.iter().rposition(|c| !c.is_zero()).unwrap();
    let incomplete = || {
        Error::InvalidParameter(
            "eigenvalue candidates exceed the integer factoring bound".into(),
        )
    };
    let mut candidates: Vec<Rational> = Vec::new();
    if low > 0 {
        candidates.push(Rational::zero());
    }
    if high > low {
        let numerators = positive_divisors(&ints[low]).ok_or_else(incomplete)?;
        let denominators = positive_divisors(&ints[high]).ok_or_else(incomplete)?;
        for p in &numerators {
            for q in &denominators {
                let r = Rational::new(p.clone(), q.clone());
                candidates.push(-r.clone());
                candidates.push(r);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    let mut work = poly.clone();
    for r in candidates {
        let x = field.rational(r.clone());
        if !poly.eval(&x).is_zero() {
            continue;
        }
        let linear = KPoly::new(&field, vec![-&x, field.one()]);
        let mut multiplicity = 0;
        loop {
            let (quotient, rem) = work.divrem(&linear)?;
            if !rem.is_zero() {
                break;
            }
            work = quotient;
            multiplicity += 1;
        }
        out.push((r, multiplicity));
    }
    Ok(out)
}

/// Integer linear combination of basis tuples, componentwise.
fn combine_tuple(tuples: &[Vec<Form>], coeffs: &[i64]) -> Result<Vec<Form>> {
    let field = tuples[0][0].field().clone();
    let num_vars = tuples[0][0].num_vars();
    let degree = tuples[0][0].degree();
    (0..tuples[0].len())
        .map(|comp| {
            let mut acc = Form::zero(&field, num_vars, degree);
            for (tuple, &k) in tuples.iter().zip(coeffs) {
                if k != 0 {
                    acc = acc.try_add(&tuple[comp].scale(&field.integer(k))?)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Determinant of a square matrix of homogeneous degree-1 forms, by
/// dynamic programming over column subsets: the minor on the first k
/// rows and a k-column subset expands along its last row.
fn form_determinant(rows: &[Vec<Form>]) -> Result<Form> {
    let n = rows.len();
    let field = rows[0][0].field().clone();
    let num_vars = rows[0][0].num_vars();
    let mut minors: HashMap<u32, Form> = HashMap::with_capacity(1 << n);
    minors.insert(0, Form::monomial(&field, vec![0; num_vars], field.one())?);
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        let mut acc = Form::zero(&field, num_vars, k);
        let mut pos = 0;
        for (j, row_entry) in rows[k - 1].iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            if !row_entry.is_zero() {
                let term = row_entry.try_mul(&minors[&(mask ^ (1 << j))])?;
                acc = if (k - 1 + pos).is_multiple_of(2) {
                    acc.try_add(&term)?
                } else {
                    acc.try_sub(&term)?
                };
            }
            pos += 1;
        }
        minors.insert(mask, acc);
    }
    Ok(minors.remove(&((1u32 << n) - 1)).expect("full minor"))
}

/// The Sylvester determinant of the generic member sum_j t_j * basis_j
/// of a space of binary pairs, expanded as a form in the parameters t.
fn symbolic_resultant(m: usize, tuples: &[Vec<Form>]) -> Result<Form> {
    let field = tuples[0][0].field().clone();
    let dim = tuples.len();
    let coefficient_form = |comp: usize, i: usize| -> Result<Form> {
        let mono = Monomial::new(vec![(m - i) as u32, i as u32]);
        let terms: Vec<_> = tuples
            .iter()
            .enumerate()
            .filter_map(|(j, tuple)| {
                tuple[comp].coefficient(&mono).map(|v| {
                    let mut e = vec![0u32; dim];
                    e[j] = 1;
                    (e, v.clone())
                })
            })
            .collect();
        Form::from_terms(&field, dim, 1, terms)
    };
    let n = 2 * m;
    let mut rows = vec![vec![Form::zero(&field, dim, 1); n]; n];
    for comp in 0..2 {
        for shift in 0..m {
            for i in 0..=m {
                rows[comp * m + shift][shift + i] = coefficient_form(comp, i)?;
            }
        }
    }
    form_determinant(&rows)
}

/// A small projective point at which every basis form vanishes, if the
/// scan finds one; any such point is a base point of every member.
fn common_projective_zero(tuples: &[Vec<Form>]) -> Result<Option<Vec<FieldElement>>> {
    let field = tuples[0][0].field().clone();
    let num_vars = tuples[0][0].num_vars();
    for bound in 1..=2 {
        for v in stage_vectors(num_vars, bound, 4000) {
            let point: Vec<FieldElement> = v.iter().map(|&k| field.integer(k)).collect();
            let mut shared = true;
            'tuples: for tuple in tuples {
                for form in tuple {
                    if !form.evaluate(&point)?.is_zero() {
                        shared = false;
                        break 'tuples;
                    }
                }
            }
            if shared {
                return Ok(Some(point));
            }
        }
    }
    Ok(None)
}

/// Decides whether the span of the basis tuples contains a regular
/// map. On the line the symbolic resultant settles it exactly: either
/// it vanishes identically, or a nonzero grid specialization must
/// exist within max-entry m and is returned as a witness. In more
/// variables a shared base point proves the negative and a certified
/// grid member proves the positive; otherwise undecided.
fn eigenspace_verdict(
    m: usize,
    tuples: &[Vec<Form>],
) -> Result<(EigenspaceVerdict, Option<ProjectiveMap>)> {
    if tuples.is_empty() {
        return Ok((EigenspaceVerdict::ContainsNoRegularMap, None));
    }
    let field = tuples[0][0].field().clone();
    let num_vars = tuples[0][0].num_vars();
    let dim = tuples.len();
    if num_vars == 2 {
        let det = symbolic_resultant(m, tuples)?;
        if det.is_zero() {
            return Ok((EigenspaceVerdict::ContainsNoRegularMap, None));
        }
        for bound in 1..=(m as i64) {
            for v in stage_vectors(dim, bound, usize::MAX) {
                let point: Vec<FieldElement> = v.iter().map(|&k| field.integer(k)).collect();
                if det.evaluate(&point)?.is_zero() {
                    continue;
                }
                let map = certify_regular(&make_map(&combine_tuple(tuples, &v)?)?)?;
                debug_assert_eq!(map.regularity(), Regularity::CertifiedRegular);
                debug_assert_eq!(map.degree(), m);
                return Ok((EigenspaceVerdict::ContainsRegularMap, Some(map)));
            }
        }
        return Ok((EigenspaceVerdict::Undecided, None));
    }
    if common_projective_zero(tuples)?.is_some() {
        return Ok((EigenspaceVerdict::ContainsNoRegularMap, None));
    }
    for bound in 1..=2 {
        for v in stage_vectors(dim, bound, 2000) {
            let Ok(map) = make_map(&combine_tuple(tuples, &v)?) else {
                continue;
            };
            if map.degree() != m {
                continue;
            }
            let map = certify_regular(&map)?;
            if map.regularity() == Regularity::CertifiedRegular {
                return Ok((EigenspaceVerdict::ContainsRegularMap, Some(map)));
            }
        }
    }
    Ok((EigenspaceVerdict::Undecided, None))
}
