//! Randomized cross-checks of the stability layer. Fixed tuples of
//! regular maps force constant torus exponents (and conversely), and
//! one-parameter limits that stay regular always land on torus forms,
//! with the input sitting in an orbit that touches them.

mod common;

use common::{random_binary_pair, random_nonzero_form, rationals, rng};
use projendo::algebra::Form;
use projendo::maps::{
    certify_regular, classify_orbit, make_map, projectively_equal, sylvester_resultant,
    OrbitTag, ProjectiveMap, Regularity,
};
use projendo::stability::{one_param_limit, torus_weight_analysis, LimitTag};
use rand::Rng;

fn binary(terms: &[(u32, i64)], degree: usize) -> Form {
    let field = rationals();
    let terms: Vec<_> = terms
        .iter()
        .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
        .collect();
    Form::from_terms(&field, 2, degree, terms).unwrap()
}

fn power_map(m: u32) -> ProjectiveMap {
    make_map(&[binary(&[(m, 1)], m as usize), binary(&[(0, 1)], m as usize)]).unwrap()
}

#[test]
fn regular_maps_are_fixed_exactly_by_constant_exponent_vectors() {
    let mut rng = rng(21_000);
    let mut kept = 0;
    while kept < 120 {
        let m = rng.gen_range(2..=4usize);
        let (f0, f1) = random_binary_pair(&mut rng, m, 3);
        let Ok(map) = make_map(&[f0, f1]) else { continue };
        if map.degree() < 2 {
            continue;
        }
        let map = certify_regular(&map).unwrap();
        assert_eq!(map.regularity(), Regularity::CertifiedRegular);
        let a = [rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64)];
        let (_, fixed) = torus_weight_analysis(&a, map.components()).unwrap();
        assert_eq!(fixed, a[0] == a[1]);
        kept += 1;
    }
}

#[test]
fn plane_maps_obey_the_same_fixedness_law() {
    let field = rationals();
    let mut rng = rng(21_500);
    let mut kept = 0;
    while kept < 40 {
        let comps: Vec<Form> = (0..3)
            .map(|_| random_nonzero_form(&mut rng, &field, 3, 2, 2))
            .collect();
        let Ok(map) = make_map(&comps) else { continue };
        if map.degree() != 2 {
            continue;
        }
        let map = certify_regular(&map).unwrap();
        if map.regularity() != Regularity::CertifiedRegular {
            continue;
        }
        let a = [
            rng.gen_range(-3..=3i64),
            rng.gen_range(-3..=3i64),
            rng.gen_range(-3..=3i64),
        ];
        let (_, fixed) = torus_weight_analysis(&a, map.components()).unwrap();
        assert_eq!(fixed, a[0] == a[1] && a[1] == a[2]);
        kept += 1;
    }
}

#[test]
fn unequal_exponents_can_fix_a_degenerate_tuple() {
    // The fixedness law above needs regularity: this pair shares a
    // zero, and a subgroup with unequal exponents fixes it.
    let tuple = [binary(&[(2, 1)], 2), binary(&[(1, 1)], 2)];
    let (_, fixed) = torus_weight_analysis(&[1, 2], &tuple).unwrap();
    assert!(fixed);
    assert!(sylvester_resultant(&tuple[0], &tuple[1])
        .unwrap()
        .is_zero());
}

#[test]
fn regular_limits_are_torus_forms_and_inputs_touch_them() {
    let mut rng = rng(22_000);
    let mut regular_hits = 0;
    let mut cases: Vec<(ProjectiveMap, i64, i64)> = vec![
        (
            make_map(&[binary(&[(3, 1), (0, 1)], 3), binary(&[(0, 1)], 3)]).unwrap(),
            -1,
            -3,
        ),
        (power_map(3), 1, 3),
    ];
    // Maps of the shape (x0^m + lower, x1^m) always limit onto the
    // power map along (c, b) = (-1, -m), so the regular branch is
    // exercised far beyond the two pinned cases.
    for _ in 0..30 {
        let m = rng.gen_range(2..=4usize);
        let mut terms = vec![(m as u32, 1i64)];
        for i in 0..m as u32 {
            let c = rng.gen_range(-3..=3i64);
            if c != 0 {
                terms.push((i, c));
            }
        }
        let f = make_map(&[binary(&terms, m), binary(&[(0, 1)], m)]).unwrap();
        cases.push((f, -1, -(m as i64)));
    }
    for _ in 0..150 {
        let m = rng.gen_range(2..=4usize);
        let (f0, f1) = random_binary_pair(&mut rng, m, 3);
        let Ok(map) = make_map(&[f0, f1]) else { continue };
        if map.degree() < 2 {
            continue;
        }
        let (c, b) = loop {
            let pair = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
            if pair != (0, 0) {
                break pair;
            }
        };
        cases.push((map, c, b));
    }
    for (map, c, b) in &cases {
        let m = map.degree();
        let result = one_param_limit(map, *c, *b).unwrap();
        assert!(!result.surviving.is_empty());
        assert!(result
            .surviving
            .iter()
            .all(|w| w.weight == result.minimal_weight));
        let limit_terms: usize = result.limit.iter().map(|f| f.terms().count()).sum();
        assert_eq!(limit_terms, result.surviving.len());
        match result.tag {
            LimitTag::RegularLimit => {
                regular_hits += 1;
                let limit = result.limit_map.as_ref().unwrap();
                assert_eq!(limit.degree(), m);
                assert_eq!(limit.regularity(), Regularity::CertifiedRegular);
                assert_eq!(classify_orbit(limit).unwrap().tag, OrbitTag::TorusForm);
                let input = certify_regular(map).unwrap();
                let tag = classify_orbit(&input).unwrap().tag;
                assert!(tag == OrbitTag::TorusForm || tag == OrbitTag::Boundary);
            }
            LimitTag::ConstantOrDegenerate => assert!(result.limit_map.is_none()),
        }
    }
    assert!(
        regular_hits >= 32,
        "only {regular_hits} regular limits in the sample"
    );
    // The first pinned case lands exactly on the power map.
    let pinned = one_param_limit(&cases[0].0, -1, -3).unwrap();
    assert!(projectively_equal(
        pinned.limit_map.as_ref().unwrap(),
        &power_map(3)
    ));
}
