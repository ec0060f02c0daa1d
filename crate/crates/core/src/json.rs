//! JSON encoding for the command-line surface: rationals as "p/q"
//! strings, field elements tagged with the minimal polynomial of
//! their field, and form terms in descending graded-lex order.
//! Parsing is lenient where emission is strict: a bare rational
//! string is accepted wherever a field element is expected.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::{FieldElement, Form, KPoly, Matrix, NumberField};
use crate::equivariant::{enumerate_group, FiniteMatrixGroup};
use crate::error::{Error, Result};
use crate::maps::{BinaryFormFactorization, ProjectiveMap};
use crate::stability::{FixedMapReport, LimitResult, TermWeight, WeightProfile};

#[derive(Clone, Serialize)]
pub struct FieldElementDto {
    pub field: Vec<String>,
    pub coords: Vec<String>,
}

pub fn field_element_dto(element: &FieldElement) -> FieldElementDto {
    FieldElementDto {
        field: element
            .field()
            .min_poly()
            .iter()
            .map(format_rational)
            .collect(),
        coords: element.coords().iter().map(format_rational).collect(),
    }
}

/// Accepted spellings of a field element: the full emitted schema, or
/// a bare rational string meaning that multiple of one.
#[derive(Clone, Deserialize)]
#[serde(untagged)]
pub enum FieldElementIn {
    Scalar(String),
    Full {
        field: Vec<String>,
        coords: Vec<String>,
    },
}

fn field_from_strings(min_poly: &[String]) -> Result<Arc<NumberField>> {
    let coeffs = min_poly
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() <= 2 {
        return Ok(NumberField::rationals());
    }
    NumberField::new(coeffs)
}

/// Resolves the coefficient field of a document: the first explicit
/// minimal polynomial wins and every later one must agree.
fn resolve_field<'a>(
    elements: impl IntoIterator<Item = &'a FieldElementIn>,
    explicit: Option<&[String]>,
) -> Result<Arc<NumberField>> {
    let mut field: Option<Arc<NumberField>> = match explicit {
        Some(strings) => Some(field_from_strings(strings)?),
        None => None,
    };
    for element in elements {
        if let FieldElementIn::Full { field: strings, .. } = element {
            let candidate = field_from_strings(strings)?;
            match &field {
                None => field = Some(candidate),
                Some(existing) if existing.same_field(&candidate) => {}
                Some(_) => return Err(Error::FieldMismatch),
            }
        }
    }
    Ok(field.unwrap_or_else(NumberField::rationals))
}

fn parse_element(input: &FieldElementIn, field: &Arc<NumberField>) -> Result<FieldElement> {
    match input {
        FieldElementIn::Scalar(s) => Ok(field.rational(parse_rational(s)?)),
        FieldElementIn::Full { coords, .. } => {
            let coords = coords
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()?;
            field.element(coords)
        }
    }
}

#[derive(Serialize)]
pub struct FormDto {
    pub vars: usize,
    pub degree: usize,
    pub terms: Vec<(Vec<u32>, FieldElementDto)>,
}

pub fn form_dto(form: &Form) -> FormDto {
    FormDto {
        vars: form.num_vars(),
        degree: form.degree(),
        terms: form
            .terms_desc()
            .map(|(mono, coeff)| (mono.exponents().to_vec(), field_element_dto(coeff)))
            .collect(),
    }
}

#[derive(Deserialize)]
pub struct FormIn {
    pub vars: usize,
    pub degree: usize,
    pub terms: Vec<(Vec<u32>, FieldElementIn)>,
}

pub fn parse_form(input: &FormIn) -> Result<Form> {
    let field = resolve_field(input.terms.iter().map(|(_, c)| c), None)?;
    let terms = input
        .terms
        .iter()
        .map(|(exps, coeff)| Ok((exps.clone(), parse_element(coeff, &field)?)))
        .collect::<Result<Vec<_>>>()?;
    Form::from_terms(&field, input.vars, input.degree, terms)
}

#[derive(Serialize)]
pub struct MapDto {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub components: Vec<FormDto>,
    pub regularity: String,
}

pub fn map_dto(map: &ProjectiveMap) -> MapDto {
    MapDto {
        degree: map.degree(),
        source_dim: map.source_dim(),
        target_dim: map.target_dim(),
        components: map.components().iter().map(form_dto).collect(),
        regularity: map.regularity().as_str().to_string(),
    }
}

/// Input schema for anything that is a tuple of forms; extra keys
/// from an emitted map document are ignored.
#[derive(Deserialize)]
pub struct MapIn {
    pub components: Vec<FormIn>,
}

pub fn parse_components(input: &MapIn) -> Result<Vec<Form>> {
    input.components.iter().map(parse_form).collect()
}

#[derive(Deserialize)]
pub struct MatrixIn {
    #[serde(default)]
    pub field: Option<Vec<String>>,
    pub size: usize,
    pub entries: Vec<FieldElementIn>,
}

pub fn parse_matrix(input: &MatrixIn) -> Result<Matrix> {
    if input.entries.len() != input.size * input.size {
        return Err(Error::DimensionMismatch);
    }
    let field = resolve_field(&input.entries, input.field.as_deref())?;
    let entries = input
        .entries
        .iter()
        .map(|e| parse_element(e, &field))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(&field, input.size, input.size, entries)
}

#[derive(Deserialize)]
pub struct GroupIn {
    #[serde(default)]
    pub field: Option<Vec<String>>,
    pub generators: Vec<Vec<FieldElementIn>>,
    #[serde(default)]
    pub cap: Option<usize>,
}

const DEFAULT_GROUP_CAP: usize = 10_000;

pub fn parse_group(input: &GroupIn) -> Result<FiniteMatrixGroup> {
    if input.generators.is_empty() {
        return Err(Error::InvalidParameter(
            "a group document needs at least one generator".into(),
        ));
    }
    let field = resolve_field(
        input.generators.iter().flatten(),
        input.field.as_deref(),
    )?;
    let mut matrices = Vec::with_capacity(input.generators.len());
    for flat in &input.generators {
        let n = (1..=flat.len())
            .find(|n| n * n == flat.len())
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "generator entry count {} is not a perfect square",
                    flat.len()
                ))
            })?;
        let entries = flat
            .iter()
            .map(|e| parse_element(e, &field))
            .collect::<Result<Vec<_>>>()?;
        matrices.push(Matrix::new(&field, n, n, entries)?);
    }
    enumerate_group(&matrices, input.cap.unwrap_or(DEFAULT_GROUP_CAP))
}

#[derive(Serialize)]
pub struct PolyDto {
    pub coefficients: Vec<FieldElementDto>,
}

pub fn poly_dto(poly: &KPoly) -> PolyDto {
    PolyDto {
        coefficients: poly.coeffs().iter().map(field_element_dto).collect(),
    }
}

#[derive(Serialize)]
pub struct FactorDto {
    pub form: FormDto,
    pub multiplicity: usize,
    pub certified_irreducible: bool,
}

#[derive(Serialize)]
pub struct FactorizationDto {
    pub constant: FieldElementDto,
    pub factors: Vec<FactorDto>,
}

pub fn factorization_dto(factorization: &BinaryFormFactorization) -> FactorizationDto {
    FactorizationDto {
        constant: field_element_dto(&factorization.constant),
        factors: factorization
            .factors
            .iter()
            .map(|factor| FactorDto {
                form: form_dto(&factor.form),
                multiplicity: factor.multiplicity,
                certified_irreducible: factor.certified_irreducible,
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct TermWeightDto {
    pub component: usize,
    pub exponents: Vec<u32>,
    pub weight: i64,
}

fn term_weight_dto(w: &TermWeight) -> TermWeightDto {
    TermWeightDto {
        component: w.component,
        exponents: w.monomial.exponents().to_vec(),
        weight: w.weight,
    }
}

#[derive(Serialize)]
pub struct TorusCheckDto {
    pub exponents: Vec<i64>,
    pub fixed: bool,
    pub weights: Vec<TermWeightDto>,
}

pub fn torus_check_dto(profile: &WeightProfile, fixed: bool) -> TorusCheckDto {
    TorusCheckDto {
        exponents: profile.exponents.clone(),
        fixed,
        weights: profile.weights.iter().map(term_weight_dto).collect(),
    }
}

#[derive(Serialize)]
pub struct LimitDto {
    pub c: i64,
    pub b: i64,
    pub tag: String,
    pub minimal_weight: i64,
    pub surviving: Vec<TermWeightDto>,
    pub limit: Vec<FormDto>,
    pub limit_map: Option<MapDto>,
}

pub fn limit_dto(c: i64, b: i64, result: &LimitResult) -> LimitDto {
    LimitDto {
        c,
        b,
        tag: result.tag.as_str().to_string(),
        minimal_weight: result.minimal_weight,
        surviving: result.surviving.iter().map(term_weight_dto).collect(),
        limit: result.limit.iter().map(form_dto).collect(),
        limit_map: result.limit_map.as_ref().map(map_dto),
    }
}

#[derive(Serialize)]
pub struct EigenspaceDto {
    pub eigenvalue: FieldElementDto,
    pub multiplicity: usize,
    pub dimension: usize,
    pub basis: Vec<Vec<FormDto>>,
    pub verdict: String,
    pub witness: Option<MapDto>,
}

#[derive(Serialize)]
pub struct FixedMapsDto {
    pub degree: usize,
    pub vars: usize,
    pub charpoly: PolyDto,
    pub eigenspaces: Vec<EigenspaceDto>,
    pub remainder: PolyDto,
}

pub fn fixed_maps_dto(report: &FixedMapReport) -> FixedMapsDto {
    FixedMapsDto {
        degree: report.degree,
        vars: report.num_vars,
        charpoly: poly_dto(&report.charpoly),
        eigenspaces: report
            .eigenspaces
            .iter()
            .map(|space| EigenspaceDto {
                eigenvalue: field_element_dto(&space.eigenvalue),
                multiplicity: space.multiplicity,
                dimension: space.basis.len(),
                basis: space
                    .basis
                    .iter()
                    .map(|tuple| tuple.iter().map(form_dto).collect())
                    .collect(),
                verdict: space.verdict.as_str().to_string(),
                witness: space.witness.as_ref().map(map_dto),
            })
            .collect(),
        remainder: poly_dto(&report.remainder),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;
    use crate::maps::make_map;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn torus_cubic() -> ProjectiveMap {
        let field = q();
        let f0 = Form::monomial(&field, vec![3, 0], field.one()).unwrap();
        let f1 = Form::monomial(&field, vec![0, 3], field.one()).unwrap();
        make_map(&[f0, f1]).unwrap()
    }

    #[test]
    fn maps_survive_a_round_trip() {
        let map = torus_cubic();
        let text = serde_json::to_string(&map_dto(&map)).unwrap();
        let parsed: MapIn = serde_json::from_str(&text).unwrap();
        let back = make_map(&parse_components(&parsed).unwrap()).unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn bare_rational_strings_are_accepted_as_coefficients() {
        let text = r#"{
            "components": [
                {"vars": 2, "degree": 2, "terms": [[[2, 0], "1"], [[0, 2], "-1/2"]]},
                {"vars": 2, "degree": 2, "terms": [[[1, 1], "3"]]}
            ]
        }"#;
        let parsed: MapIn = serde_json::from_str(text).unwrap();
        let components = parse_components(&parsed).unwrap();
        let field = q();
        assert_eq!(
            components[0].coefficient(&crate::algebra::Monomial::new(vec![0, 2])),
            Some(&field.rational(ratio(-1, 2)))
        );
        assert_eq!(components[1].num_terms(), 1);
    }

    #[test]
    fn extension_coefficients_keep_their_field() {
        let field = NumberField::new(vec![ratio(-2, 1), ratio(0, 1), ratio(1, 1)]).unwrap();
        let sqrt2 = field.generator();
        let form = Form::monomial(&field, vec![1, 1], sqrt2).unwrap();
        let text = serde_json::to_string(&form_dto(&form)).unwrap();
        let parsed: FormIn = serde_json::from_str(&text).unwrap();
        let back = parse_form(&parsed).unwrap();
        assert_eq!(back, form);
        assert_eq!(back.field().degree(), 2);
    }

    #[test]
    fn mixed_fields_in_one_document_are_rejected() {
        let text = r#"{
            "vars": 2, "degree": 1,
            "terms": [
                [[1, 0], {"field": ["-2", "0", "1"], "coords": ["0", "1"]}],
                [[0, 1], {"field": ["-3", "0", "1"], "coords": ["0", "1"]}]
            ]
        }"#;
        let parsed: FormIn = serde_json::from_str(text).unwrap();
        assert!(matches!(parse_form(&parsed), Err(Error::FieldMismatch)));
    }

    #[test]
    fn group_documents_enumerate_their_closure() {
        let text = r#"{
            "generators": [["0", "1", "1", "0"], ["1", "0", "0", "-1"]]
        }"#;
        let parsed: GroupIn = serde_json::from_str(text).unwrap();
        let group = parse_group(&parsed).unwrap();
        assert_eq!(group.dim(), 2);
        assert_eq!(group.order(), 8);
    }

    #[test]
    fn non_square_generator_lists_are_rejected() {
        let text = r#"{"generators": [["1", "0", "0", "1", "1"]]}"#;
        let parsed: GroupIn = serde_json::from_str(text).unwrap();
        assert!(parse_group(&parsed).is_err());
    }

    #[test]
    fn matrices_parse_from_entry_lists() {
        let text = r#"{"size": 2, "entries": ["1", "1", "0", "1"]}"#;
        let parsed: MatrixIn = serde_json::from_str(text).unwrap();
        let matrix = parse_matrix(&parsed).unwrap();
        assert_eq!(matrix.get(0, 1), &q().one());
    }
}
