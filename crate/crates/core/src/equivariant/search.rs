//! Seeded search for invariant forms with smooth zero locus, and the
//! gradient map such a form induces.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::group::FiniteMatrixGroup;
use super::reynolds::invariant_basis;
use crate::algebra::Form;
use crate::error::{Error, Result};
use crate::maps::{certify_regular, make_map, sylvester_resultant, ProjectiveMap, Regularity};

/// Whether the zero locus of f is certified to be a smooth
/// hypersurface: the partial derivatives must have no common
/// projective zero. In two variables the Sylvester resultant of the
/// partials decides this completely; in more variables the regularity
/// certificate of the gradient tuple is consulted and an unconfirmed
/// certificate counts as not smooth.
pub fn zero_locus_smooth(f: &Form) -> Result<bool> {
    if f.degree() == 0 {
        return Err(Error::InvalidParameter(
            "smoothness is about the zero locus of a nonconstant form".into(),
        ));
    }
    if f.is_zero() {
        return Ok(false);
    }
    if f.degree() == 1 {
        // A hyperplane; the gradient is a nonzero constant vector.
        return Ok(true);
    }
    let partials = (0..f.num_vars())
        .map(|i| f.partial(i))
        .collect::<Result<Vec<_>>>()?;
    if f.num_vars() == 2 {
        return Ok(!sylvester_resultant(&partials[0], &partials[1])?.is_zero());
    }
    match make_map(&partials) {
        // A degenerate gradient tuple vanishes somewhere for sure.
        Err(Error::AllComponentsZero) | Err(Error::ConstantAfterReduction) => Ok(false),
        Err(e) => Err(e),
        Ok(map) => {
            if map.degree() != f.degree() - 1 {
                // Normalization divided out a common factor, whose
                // zeros the raw partials share.
                return Ok(false);
            }
            Ok(certify_regular(&map)?.regularity() == Regularity::CertifiedRegular)
        }
    }
}

/// The map whose components are the partial derivatives of f,
/// certified regular. The smoothness certificate is recomputed here,
/// so the operation stands on its own.
pub fn gradient_map(f: &Form) -> Result<ProjectiveMap> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            minimum: 2,
            found: f.degree(),
        });
    }
    if !zero_locus_smooth(f)? {
        return Err(Error::SmoothnessNotCertified);
    }
    let partials = (0..f.num_vars())
        .map(|i| f.partial(i))
        .collect::<Result<Vec<_>>>()?;
    let map = certify_regular(&make_map(&partials)?)?;
    debug_assert_eq!(map.regularity(), Regularity::CertifiedRegular);
    Ok(map)
}

/// Coefficient vectors of one sweep stage: entries bounded by `bound`
/// in absolute value with the bound attained, fewest nonzero entries
/// first, first nonzero entry positive (a sign flip cuts the same
/// locus). Stops once `cap` vectors are collected.
pub(crate) fn stage_vectors(k: usize, bound: i64, cap: usize) -> Vec<Vec<i64>> {
    struct Sweep {
        bound: i64,
        cap: usize,
        current: Vec<i64>,
        out: Vec<Vec<i64>>,
    }

    impl Sweep {
        fn fill(&mut self, positions: &[usize], idx: usize, attained: bool) {
            if self.out.len() >= self.cap {
                return;
            }
            if idx == positions.len() {
                if attained {
                    self.out.push(self.current.clone());
                }
                return;
            }
            let low = if idx == 0 { 1 } else { -self.bound };
            for v in low..=self.bound {
                if v == 0 {
                    continue;
                }
                self.current[positions[idx]] = v;
                self.fill(positions, idx + 1, attained || v.abs() == self.bound);
            }
            self.current[positions[idx]] = 0;
        }

        fn choose(&mut self, k: usize, nnz: usize, start: usize, positions: &mut Vec<usize>) {
            if self.out.len() >= self.cap {
                return;
            }
            if positions.len() == nnz {
                self.fill(positions, 0, false);
                return;
            }
            for p in start..k {
                positions.push(p);
                self.choose(k, nnz, p + 1, positions);
                positions.pop();
            }
        }
    }

    let mut sweep = Sweep {
        bound,
        cap,
        current: vec![0i64; k],
        out: Vec::new(),
    };
    for nnz in 1..=k {
        sweep.choose(k, nnz, 0, &mut Vec::new());
        if sweep.out.len() >= cap {
            break;
        }
    }
    sweep.out
}

fn combine(basis: &[Form], coeffs: &[i64]) -> Result<Form> {
    let field = basis[0].field().clone();
    let mut acc = Form::zero(&field, basis[0].num_vars(), basis[0].degree());
    for (f, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.try_add(&f.scale(&field.integer(c))?)?;
        }
    }
    Ok(acc)
}

/// Deterministic sweep of small integer combinations of the invariant
/// basis, returning the first one whose zero locus certifies smooth.
/// The coefficient bound grows stage by stage; seed 0 keeps the
/// canonical stage order and any other seed shuffles each stage.
/// Spending the whole budget without a certificate is an error, not a
/// silent miss.
pub fn smooth_invariant_search(
    group: &FiniteMatrixGroup,
    m: usize,
    seed: u64,
    budget: usize,
) -> Result<Form> {
    let basis = invariant_basis(group, m)?;
    if basis.dim() == 0 {
        return Err(Error::NoInvariants);
    }
    let mut rng = if seed == 0 {
        None
    } else {
        Some(ChaCha8Rng::seed_from_u64(seed))
    };
    let mut remaining = budget;
    let mut bound = 1i64;
    while remaining > 0 {
        let mut chunk = stage_vectors(basis.dim(), bound, remaining);
        if let Some(rng) = rng.as_mut() {
            chunk.shuffle(rng);
        }
        for coeffs in &chunk {
            let candidate = combine(&basis.basis, coeffs)?;
            if zero_locus_smooth(&candidate)? {
                return Ok(candidate);
            }
        }
        remaining -= chunk.len();
        bound += 1;
    }
    Err(Error::SearchBudgetExhausted { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NumberField;
    use crate::equivariant::fixtures::{
        cube_rotation_group, sign_group, signed_swap_group, trivial_group,
    };
    use crate::maps::projectively_equal;
    use std::sync::Arc;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn binary(terms: &[(u32, i64)], degree: usize) -> Form {
        let field = q();
        let terms: Vec<_> = terms
            .iter()
            .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
            .collect();
        Form::from_terms(&field, 2, degree, terms).unwrap()
    }

    fn fermat(num_vars: usize, degree: u32) -> Form {
        let field = q();
        let terms: Vec<_> = (0..num_vars)
            .map(|v| {
                let mut exps = vec![0u32; num_vars];
                exps[v] = degree;
                (exps, field.one())
            })
            .collect();
        Form::from_terms(&field, num_vars, degree as usize, terms).unwrap()
    }

    #[test]
    fn power_sums_are_smooth_and_double_lines_are_not() {
        assert!(zero_locus_smooth(&binary(&[(4, 1), (0, 1)], 4)).unwrap());
        assert!(!zero_locus_smooth(&binary(&[(2, 1)], 4)).unwrap());
        assert!(zero_locus_smooth(&fermat(3, 4)).unwrap());
        // A cone: x^4 + y^4 is singular at (0 : 0 : 1).
        let field = q();
        let cone = Form::from_terms(
            &field,
            3,
            4,
            [(vec![4, 0, 0], field.one()), (vec![0, 4, 0], field.one())],
        )
        .unwrap();
        assert!(!zero_locus_smooth(&cone).unwrap());
    }

    #[test]
    fn search_finds_the_power_sum_for_signed_swaps() {
        let f = smooth_invariant_search(&signed_swap_group(), 4, 0, 100).unwrap();
        assert_eq!(f, binary(&[(4, 1), (0, 1)], 4));
    }

    #[test]
    fn search_finds_the_fermat_quartic_for_cube_rotations() {
        let f = smooth_invariant_search(&cube_rotation_group(), 4, 0, 100).unwrap();
        assert_eq!(f, fermat(3, 4));
    }

    #[test]
    fn search_reports_missing_invariants() {
        match smooth_invariant_search(&sign_group(), 3, 0, 100) {
            Err(Error::NoInvariants) => {}
            _ => panic!("odd degrees have no sign-group invariants"),
        }
    }

    #[test]
    fn search_reports_an_exhausted_budget() {
        // The canonical sweep tests x0^2 first, which is a double
        // line, so one candidate is not enough for the trivial group.
        match smooth_invariant_search(&trivial_group(2), 2, 0, 1) {
            Err(Error::SearchBudgetExhausted { budget: 1 }) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn seeds_change_the_candidate_order_but_stay_smooth() {
        let canonical = smooth_invariant_search(&trivial_group(2), 2, 0, 50).unwrap();
        assert_eq!(canonical, binary(&[(1, 1)], 2));
        for seed in 1..5 {
            let f = smooth_invariant_search(&trivial_group(2), 2, seed, 50).unwrap();
            assert!(zero_locus_smooth(&f).unwrap());
        }
    }

    #[test]
    fn gradient_maps_normalize_their_components() {
        let quartic = binary(&[(4, 1), (0, 1)], 4);
        let map = gradient_map(&quartic).unwrap();
        assert_eq!(map.regularity(), Regularity::CertifiedRegular);
        let cubes = crate::maps::make_map(&[binary(&[(3, 1)], 3), binary(&[(0, 1)], 3)]).unwrap();
        assert!(projectively_equal(&map, &cubes));

        let fermat_map = gradient_map(&fermat(3, 4)).unwrap();
        assert_eq!(fermat_map.degree(), 3);
        assert_eq!(fermat_map.regularity(), Regularity::CertifiedRegular);

        let circle = gradient_map(&binary(&[(2, 1), (0, 1)], 2)).unwrap();
        assert_eq!(circle.degree(), 1);
    }

    #[test]
    fn gradient_map_refuses_singular_input() {
        match gradient_map(&binary(&[(2, 1)], 4)) {
            Err(Error::SmoothnessNotCertified) => {}
            _ => panic!("x0^2 x1^2 has a singular zero locus"),
        }
    }
}
