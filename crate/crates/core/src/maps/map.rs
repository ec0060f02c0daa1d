//! Maps between projective spaces as normalized tuples of forms, with
//! the two group actions used throughout: the pair action (independent
//! source and target changes of coordinates) and conjugation.

use super::binary::{binary_divide_exact, binary_gcd};
use crate::algebra::{Form, Matrix, Monomial, NumberField};
use crate::error::{Error, Result};
use std::sync::Arc;

/// What is known about the base locus of a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// Proven to have no common projective zero over the closure.
    CertifiedRegular,
    /// A common projective zero is proven to exist.
    CertifiedIrregular,
    /// Nothing certified yet.
    Unchecked,
}

impl Regularity {
    pub fn as_str(self) -> &'static str {
        match self {
            Regularity::CertifiedRegular => "certified-regular",
            Regularity::CertifiedIrregular => "certified-irregular",
            Regularity::Unchecked => "unchecked",
        }
    }
}

/// A degree-m map P^r -> P^s given by s+1 forms of degree m in r+1
/// variables. Construction reduces common factors and fixes the global
/// scalar, so equal tuples mean projectively equal maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMap {
    components: Vec<Form>,
    regularity: Regularity,
}

impl ProjectiveMap {
    pub fn components(&self) -> &[Form] {
        &self.components
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.components[0].field()
    }

    /// r, for a map out of P^r.
    pub fn source_dim(&self) -> usize {
        self.components[0].num_vars() - 1
    }

    /// s, for a map into P^s.
    pub fn target_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    pub fn regularity(&self) -> Regularity {
        self.regularity
    }

    pub(crate) fn with_regularity(mut self, regularity: Regularity) -> ProjectiveMap {
        self.regularity = regularity;
        self
    }

    /// The identity self-map of P^(n-1) in n variables.
    pub fn identity(field: &Arc<NumberField>, num_vars: usize) -> ProjectiveMap {
        let components = (0..num_vars)
            .map(|i| {
                Form::monomial(field, Monomial::var(num_vars, i).exponents().to_vec(), field.one())
                    .expect("valid monomial")
            })
            .collect::<Vec<_>>();
        make_map(&components).expect("identity components are valid")
    }
}

/// Divides out the common content of the components: the full form gcd
/// for binary forms, the shared monomial factor otherwise. Zero
/// components are re-issued at the reduced degree.
fn reduce_content(components: &[Form]) -> Result<Vec<Form>> {
    let field = components[0].field().clone();
    let num_vars = components[0].num_vars();
    if num_vars == 2 {
        let mut gcd = Form::zero(&field, 2, components[0].degree());
        for c in components.iter().filter(|c| !c.is_zero()) {
            gcd = binary_gcd(&gcd, c)?;
        }
        if gcd.degree() == 0 {
            return Ok(components.to_vec());
        }
        let new_degree = components[0].degree() - gcd.degree();
        components
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(Form::zero(&field, 2, new_degree))
                } else {
                    binary_divide_exact(c, &gcd)
                }
            })
            .collect()
    } else {
        let mut content: Option<Monomial> = None;
        for c in components.iter().filter(|c| !c.is_zero()) {
            let mc = c.monomial_content();
            content = Some(match content {
                None => mc,
                Some(acc) => acc.gcd(&mc),
            });
        }
        let content = content.expect("at least one nonzero component");
        if content.is_one() {
            return Ok(components.to_vec());
        }
        let new_degree = components[0].degree() - content.total_degree();
        components
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(Form::zero(&field, num_vars, new_degree))
                } else {
                    c.divide_by_monomial(&content)
                }
            })
            .collect()
    }
}

/// Builds a map from raw components: validates the common shape,
/// removes common factors, and rescales so the first nonzero leading
/// coefficient (in component order) is 1. Regularity starts unchecked.
pub fn make_map(components: &[Form]) -> Result<ProjectiveMap> {
    let first = components
        .first()
        .ok_or_else(|| Error::InvalidParameter("a map needs at least one component".into()))?;
    let field = first.field().clone();
    let num_vars = first.num_vars();
    if num_vars < 2 {
        return Err(Error::InvalidParameter(
            "a projective source needs at least 2 variables".into(),
        ));
    }
    let degree = first.degree();
    for c in components {
        if !c.field().same_field(&field) {
            return Err(Error::FieldMismatch);
        }
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
    let reduced = reduce_content(components)?;
    if reduced[0].degree() == 0 {
        return Err(Error::ConstantAfterReduction);
    }
    let scale = reduced
        .iter()
        .find_map(|c| c.leading().map(|(_, coeff)| coeff.clone()))
        .expect("a nonzero component survives reduction");
    let inv = scale.inverse()?;
    let components = reduced
        .iter()
        .map(|c| c.scale(&inv))
        .collect::<Result<Vec<Form>>>()?;
    Ok(ProjectiveMap {
        components,
        regularity: Regularity::Unchecked,
    })
}

/// Composition f after g; both maps must be certified regular, which
/// makes the composite regular by construction (the base locus of the
/// composite would map into the base locus of f).
pub fn compose(f: &ProjectiveMap, g: &ProjectiveMap) -> Result<ProjectiveMap> {
    if !f.field().same_field(g.field()) {
        return Err(Error::FieldMismatch);
    }
    if g.target_dim() != f.source_dim() {
        return Err(Error::DimensionMismatch);
    }
    if f.regularity() != Regularity::CertifiedRegular
        || g.regularity() != Regularity::CertifiedRegular
    {
        return Err(Error::UncertifiedInput);
    }
    let components = f
        .components()
        .iter()
        .map(|c| c.substitute_forms(g.components()))
        .collect::<Result<Vec<Form>>>()?;
    let composed = make_map(&components)?;
    debug_assert_eq!(composed.degree(), f.degree() * g.degree());
    Ok(composed.with_regularity(Regularity::CertifiedRegular))
}

/// Raw components of h . F . g^{-1} given g^{-1} directly, without the
/// normalization pass. The coefficient-space linearization needs this
/// un-normalized version; everything else goes through pair_act.
pub(crate) fn pair_components(
    g_inv: &Matrix,
    h: &Matrix,
    components: &[Form],
) -> Result<Vec<Form>> {
    let transformed = components
        .iter()
        .map(|c| c.substitute_linear(g_inv))
        .collect::<Result<Vec<Form>>>()?;
    let field = components[0].field().clone();
    let num_vars = components[0].num_vars();
    let degree = components[0].degree();
    (0..h.row_count())
        .map(|i| {
            let mut acc = Form::zero(&field, num_vars, degree);
            for (j, t) in transformed.iter().enumerate() {
                let coeff = h.get(i, j);
                if !coeff.is_zero() {
                    acc = acc.try_add(&t.scale(coeff)?)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// The pair action (g, h) . F = h . F . g^{-1}: g changes coordinates on
/// the source, h on the target. This is a left action in both slots.
/// Regularity is carried over, since invertible coordinate changes
/// biject base loci.
pub fn pair_act(g: &Matrix, h: &Matrix, f: &ProjectiveMap) -> Result<ProjectiveMap> {
    if g.row_count() != f.source_dim() + 1 || !g.is_square() {
        return Err(Error::DimensionMismatch);
    }
    if h.row_count() != f.target_dim() + 1 || !h.is_square() {
        return Err(Error::DimensionMismatch);
    }
    if !g.field().same_field(f.field()) || !h.field().same_field(f.field()) {
        return Err(Error::FieldMismatch);
    }
    let g_inv = g.inverse()?;
    if h.det()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let raw = pair_components(&g_inv, h, f.components())?;
    Ok(make_map(&raw)?.with_regularity(f.regularity()))
}

/// Conjugation g . F = g . F . g^{-1}, the self-map action.
pub fn conjugate_act(g: &Matrix, f: &ProjectiveMap) -> Result<ProjectiveMap> {
    if f.source_dim() != f.target_dim() {
        return Err(Error::DimensionMismatch);
    }
    pair_act(g, g, f)
}

/// True iff the maps agree up to one global nonzero scalar. Both sides
/// are stored normalized, so this is componentwise equality; shape
/// mismatches compare as unequal.
pub fn projectively_equal(f: &ProjectiveMap, g: &ProjectiveMap) -> bool {
    f.components() == g.components()
}

/// Whether (g, h) stabilizes F projectively; with h absent the
/// conjugation action is checked instead.
pub fn stabilizer_check(f: &ProjectiveMap, g: &Matrix, h: Option<&Matrix>) -> Result<bool> {
    let moved = match h {
        Some(h) => pair_act(g, h, f)?,
        None => conjugate_act(g, f)?,
    };
    Ok(projectively_equal(&moved, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    fn field() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn binary(terms: &[(u32, i64)], degree: usize) -> Form {
        let field = field();
        let terms: Vec<_> = terms
            .iter()
            .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
            .collect();
        Form::from_terms(&field, 2, degree, terms).unwrap()
    }

    fn regular(components: &[Form]) -> ProjectiveMap {
        make_map(components)
            .unwrap()
            .with_regularity(Regularity::CertifiedRegular)
    }

    #[test]
    fn scalar_normalization() {
        let m = make_map(&[binary(&[(2, 2)], 2), binary(&[(0, 2)], 2)]).unwrap();
        assert_eq!(m.components()[0], binary(&[(2, 1)], 2));
        assert_eq!(m.components()[1], binary(&[(0, 1)], 2));
        assert_eq!(m.regularity(), Regularity::Unchecked);
    }

    #[test]
    fn common_factor_reduction() {
        // (x0^2 x1, x0 x1^2) has content x0 x1 and reduces to degree 1.
        let m = make_map(&[binary(&[(2, 1)], 3), binary(&[(1, 1)], 3)]).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(m.components()[0], binary(&[(1, 1)], 1));
        assert_eq!(m.components()[1], binary(&[(0, 1)], 1));
    }

    #[test]
    fn all_zero_rejected() {
        let f = field();
        let z = Form::zero(&f, 2, 2);
        assert!(matches!(
            make_map(&[z.clone(), z]),
            Err(Error::AllComponentsZero)
        ));
    }

    #[test]
    fn constant_reduction_rejected() {
        // (x0, x0) reduces to a constant tuple.
        let m = make_map(&[binary(&[(1, 1)], 1), binary(&[(1, 1)], 1)]);
        assert!(matches!(m, Err(Error::ConstantAfterReduction)));
    }

    #[test]
    fn monomial_content_beyond_binary() {
        let f = field();
        let a = Form::monomial(&f, vec![2, 1, 0], f.integer(3)).unwrap();
        let b = Form::monomial(&f, vec![2, 0, 1], f.integer(3)).unwrap();
        let m = make_map(&[a, b]).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(m.source_dim(), 2);
        assert_eq!(m.target_dim(), 1);
    }

    #[test]
    fn composition_of_squares() {
        let sq = regular(&[binary(&[(2, 1)], 2), binary(&[(0, 1)], 2)]);
        let quartic = compose(&sq, &sq).unwrap();
        assert_eq!(quartic.degree(), 4);
        assert_eq!(quartic.components()[0], binary(&[(4, 1)], 4));
        assert_eq!(quartic.components()[1], binary(&[(0, 1)], 4));
        assert_eq!(quartic.regularity(), Regularity::CertifiedRegular);
    }

    #[test]
    fn composition_with_identity() {
        let f = regular(&[binary(&[(2, 1), (0, 1)], 2), binary(&[(1, 1)], 2)]);
        let id = ProjectiveMap::identity(&field(), 2)
            .with_regularity(Regularity::CertifiedRegular);
        assert!(projectively_equal(&compose(&f, &id).unwrap(), &f));
        assert!(projectively_equal(&compose(&id, &f).unwrap(), &f));
    }

    #[test]
    fn composition_by_substitution() {
        // (x0^2 + x1^2, x0 x1) after (x0^2, x1^2) is (x0^4 + x1^4, x0^2 x1^2).
        let outer = regular(&[binary(&[(2, 1), (0, 1)], 2), binary(&[(1, 1)], 2)]);
        let inner = regular(&[binary(&[(2, 1)], 2), binary(&[(0, 1)], 2)]);
        let got = compose(&outer, &inner).unwrap();
        assert_eq!(got.components()[0], binary(&[(4, 1), (0, 1)], 4));
        assert_eq!(got.components()[1], binary(&[(2, 1)], 4));
    }

    #[test]
    fn uncertified_composition_rejected() {
        let f = make_map(&[binary(&[(2, 1)], 2), binary(&[(0, 1)], 2)]).unwrap();
        assert!(matches!(
            compose(&f, &f),
            Err(Error::UncertifiedInput)
        ));
    }

    #[test]
    fn pair_action_by_swap() {
        let f = field();
        let cubes = make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        let swap = Matrix::from_integers(&f, 2, &[0, 1, 1, 0]);
        let id = Matrix::identity(&f, 2);
        let moved = pair_act(&swap, &id, &cubes).unwrap();
        assert_eq!(moved.components()[0], binary(&[(0, 1)], 3));
        assert_eq!(moved.components()[1], binary(&[(3, 1)], 3));
    }

    #[test]
    fn pair_action_by_target_shear() {
        // h = [[1,0],[-1,1]] on (x0^3 + x1^3, x1^3) replaces the second
        // component by -x0^3.
        let f = field();
        let m = make_map(&[binary(&[(3, 1), (0, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        let h = Matrix::from_integers(&f, 2, &[1, 0, -1, 1]);
        let id = Matrix::identity(&f, 2);
        let moved = pair_act(&id, &h, &m).unwrap();
        assert_eq!(moved.components()[0], binary(&[(3, 1), (0, 1)], 3));
        assert_eq!(moved.components()[1], binary(&[(3, -1)], 3));
    }

    #[test]
    fn conjugation_scales_by_inverse_power() {
        // g = diag(1, 2): g . F(g^{-1} x) on (x0^3, x1^3) turns the
        // second component into 2 * (x1/2)^3 = x1^3 / 4.
        let f = field();
        let cubes = make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        let g = Matrix::from_integers(&f, 2, &[1, 0, 0, 2]);
        let moved = conjugate_act(&g, &cubes).unwrap();
        assert_eq!(moved.components()[0], binary(&[(3, 1)], 3));
        let quarter = binary(&[(0, 1)], 3).scale(&f.rational(ratio(1, 4))).unwrap();
        assert_eq!(moved.components()[1], quarter);
    }

    #[test]
    fn conjugation_by_swap_fixes_power_map() {
        let f = field();
        let cubes = make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        let swap = Matrix::from_integers(&f, 2, &[0, 1, 1, 0]);
        let moved = conjugate_act(&swap, &cubes).unwrap();
        assert!(projectively_equal(&moved, &cubes));
    }

    #[test]
    fn projective_equality_ignores_global_scalar() {
        let m1 = make_map(&[binary(&[(2, 1)], 2), binary(&[(0, 1)], 2)]).unwrap();
        let m2 = make_map(&[binary(&[(2, 7)], 2), binary(&[(0, 7)], 2)]).unwrap();
        let m3 = make_map(&[binary(&[(2, 1)], 2), binary(&[(0, 2)], 2)]).unwrap();
        assert!(projectively_equal(&m1, &m2));
        assert!(!projectively_equal(&m1, &m3));
    }

    #[test]
    fn stabilizer_examples() {
        let f = field();
        let cubes = make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        let id = Matrix::identity(&f, 2);
        assert!(stabilizer_check(&cubes, &id, None).unwrap());
        // diag(1,2) alone scales the components unequally, so neither
        // conjugation nor the (g, g) pair fixes the map; the matching
        // target change diag(1, 8) = diag(1, 2^3) does.
        let g = Matrix::from_integers(&f, 2, &[1, 0, 0, 2]);
        assert!(!stabilizer_check(&cubes, &g, None).unwrap());
        assert!(!stabilizer_check(&cubes, &g, Some(&g)).unwrap());
        let h = Matrix::from_integers(&f, 2, &[1, 0, 0, 8]);
        assert!(stabilizer_check(&cubes, &g, Some(&h)).unwrap());
    }

    #[test]
    fn pair_action_composes_as_left_action() {
        let f = field();
        let m = make_map(&[binary(&[(2, 1), (1, 1)], 2), binary(&[(0, 1), (2, 3)], 2)]).unwrap();
        let g1 = Matrix::from_integers(&f, 2, &[1, 2, 0, 1]);
        let g2 = Matrix::from_integers(&f, 2, &[1, 0, 3, 1]);
        let h1 = Matrix::from_integers(&f, 2, &[2, 1, 1, 1]);
        let h2 = Matrix::from_integers(&f, 2, &[1, -1, 1, 1]);
        let stepwise = pair_act(&g1, &h1, &pair_act(&g2, &h2, &m).unwrap()).unwrap();
        let combined = pair_act(
            &g1.try_mul(&g2).unwrap(),
            &h1.try_mul(&h2).unwrap(),
            &m,
        )
        .unwrap();
        assert!(projectively_equal(&stepwise, &combined));
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = field();
        let m = make_map(&[binary(&[(2, 1)], 2), binary(&[(0, 1)], 2)]).unwrap();
        let sing = Matrix::from_integers(&f, 2, &[1, 1, 1, 1]);
        assert!(matches!(
            conjugate_act(&sing, &m),
            Err(Error::SingularMatrix)
        ));
    }
}
