//! Built-in diagnostic checks spanning every module, runnable from the
//! command line. Each check is self-contained, seeds its own
//! randomness, enforces its own wall-clock budget, and reports pass or
//! fail with enough detail to reproduce a failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::monomial::monomials_of_degree;
use crate::algebra::rational::ratio;
use crate::algebra::{FieldElement, Form, Int, Matrix, NumberField, Rational};
use crate::chow::{
    c2_twist_expand, chow_mul, pullback_twist_constraint, ramification_class,
    solve_twist_degree, symmetric_power_det, ChowClass, Symbol, TwistSpec,
};
use crate::equivariant::{
    enumerate_group, equivariant_endomorphism, reynolds_project, verify_equivariance,
    EquivarianceMode, FiniteMatrixGroup,
};
use crate::error::Error;
use crate::homcount::{
    brute_force_homs, builtin_group_data, builtin_perm_group, count_homs, GroupFamily,
};
use crate::maps::{
    certify_regular, classify_orbit, make_map, pair_act, projectively_equal, ramification_form,
    squarefree_factorization, sylvester_resultant, OrbitTag, ProjectiveMap, Regularity,
};
use crate::stability::{
    fixed_maps, one_param_limit, torus_weight_analysis, EigenspaceVerdict, LimitTag,
};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn from_problems(name: &'static str, ok_detail: String, problems: Vec<String>) -> CheckReport {
        if problems.is_empty() {
            CheckReport {
                name,
                passed: true,
                detail: ok_detail,
            }
        } else {
            CheckReport {
                name,
                passed: false,
                detail: problems.join("; "),
            }
        }
    }
}

/// Runs every check in a fixed order.
pub fn run_all() -> Vec<CheckReport> {
    vec![
        equivariant_fixture_groups(),
        orbit_classification_examples(),
        one_parameter_limits(),
        jordan_block_eigenspaces(),
        torus_weight_witnesses(),
        hom_count_oracles(),
        chow_identities(),
        infrastructure_properties(),
    ]
}

fn q() -> Arc<NumberField> {
    NumberField::rationals()
}

fn binary(field: &Arc<NumberField>, degree: usize, terms: &[(u32, i64)]) -> Form {
    let terms: Vec<_> = terms
        .iter()
        .map(|&(i, c)| (vec![i, degree as u32 - i], field.integer(c)))
        .collect();
    Form::from_terms(field, 2, degree, terms).expect("term degrees match")
}

fn power_map(m: usize) -> ProjectiveMap {
    let field = q();
    let components = [
        binary(&field, m, &[(m as u32, 1)]),
        binary(&field, m, &[(0, 1)]),
    ];
    certify_regular(&make_map(&components).expect("components are nonzero"))
        .expect("line maps are decidable")
}

/// Order-8 group generated by a sign flip and the coordinate swap on
/// the line.
fn signed_swap_group() -> FiniteMatrixGroup {
    let field = q();
    let flip = Matrix::from_integers(&field, 2, &[1, 0, 0, -1]);
    let swap = Matrix::from_integers(&field, 2, &[0, 1, 1, 0]);
    enumerate_group(&[flip, swap], 100).expect("closure has order 8")
}

/// Order-24 rotation group of the cube acting on the plane.
fn cube_rotation_group() -> FiniteMatrixGroup {
    let field = q();
    let quarter_turn = Matrix::from_integers(&field, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 1]);
    let corner_turn = Matrix::from_integers(&field, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
    enumerate_group(&[quarter_turn, corner_turn], 100).expect("closure has order 24")
}

fn random_form(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    bound: i64,
) -> Form {
    let terms: Vec<_> = monomials_of_degree(num_vars, degree)
        .into_iter()
        .map(|m| {
            (
                m.exponents().to_vec(),
                field.integer(rng.gen_range(-bound..=bound)),
            )
        })
        .collect();
    Form::from_terms(field, num_vars, degree, terms).expect("degrees are consistent")
}

fn random_nonzero_form(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    num_vars: usize,
    degree: usize,
    bound: i64,
) -> Form {
    loop {
        let f = random_form(rng, field, num_vars, degree, bound);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, field: &Arc<NumberField>, n: usize, bound: i64) -> Matrix {
    loop {
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-bound..=bound)).collect();
        let m = Matrix::from_integers(field, n, &entries);
        if !m.det().expect("square by construction").is_zero() {
            return m;
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, field: &Arc<NumberField>, bound: i64) -> FieldElement {
    let coords = (0..field.degree())
        .map(|_| ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3)))
        .collect();
    field.element(coords).expect("coordinate count matches")
}

fn enforce_budget(problems: &mut Vec<String>, started: Instant, limit: Duration, what: &str) {
    let elapsed = started.elapsed();
    if elapsed > limit {
        problems.push(format!(
            "{what} took {elapsed:.2?}, over the {limit:?} budget"
        ));
    }
}

/// Both built-in symmetry groups admit a degree-9 self-map commuting
/// with every element, built from degree-4 invariants.
pub fn equivariant_fixture_groups() -> CheckReport {
    let mut problems = Vec::new();
    let cases = [
        ("signed swap on the line", signed_swap_group()),
        ("cube rotations on the plane", cube_rotation_group()),
    ];
    for (label, group) in &cases {
        let started = Instant::now();
        match equivariant_endomorphism(group, 4, 0, 200) {
            Ok(endo) => {
                if endo.degree() != 9 {
                    problems.push(format!("{label}: degree {} instead of 9", endo.degree()));
                }
                if endo.regularity() != Regularity::CertifiedRegular {
                    problems.push(format!("{label}: map is not certified regular"));
                }
                match verify_equivariance(&endo, group, EquivarianceMode::Conjugation) {
                    Ok(true) => {}
                    Ok(false) => {
                        problems.push(format!("{label}: commutation fails on some element"))
                    }
                    Err(e) => problems.push(format!("{label}: verification error: {e}")),
                }
            }
            Err(e) => problems.push(format!("{label}: construction failed: {e}")),
        }
        enforce_budget(&mut problems, started, Duration::from_secs(10), label);
    }
    CheckReport::from_problems(
        "equivariant-fixture-groups",
        "both built-in groups yield certified-regular commuting maps of degree 9".into(),
        problems,
    )
}

/// The three cubic examples land on the three orbit tags, and the tag
/// is unchanged under random coordinate changes on both sides.
pub fn orbit_classification_examples() -> CheckReport {
    let started = Instant::now();
    let field = q();
    let mut problems = Vec::new();
    let examples = [
        (
            binary(&field, 3, &[(3, 1)]),
            binary(&field, 3, &[(0, 1)]),
            OrbitTag::TorusForm,
            "(x0^3, x1^3)",
        ),
        (
            binary(&field, 3, &[(3, 1), (0, 1)]),
            binary(&field, 3, &[(0, 1)]),
            OrbitTag::Boundary,
            "(x0^3 + x1^3, x1^3)",
        ),
        (
            binary(&field, 3, &[(3, 1), (0, 1)]),
            binary(&field, 3, &[(1, 1)]),
            OrbitTag::Closed,
            "(x0^3 + x1^3, x0 x1^2)",
        ),
    ];
    let mut classified = Vec::new();
    for (f0, f1, expected, label) in &examples {
        let map = match make_map(&[f0.clone(), f1.clone()]).and_then(|m| certify_regular(&m)) {
            Ok(map) => map,
            Err(e) => {
                problems.push(format!("{label}: construction failed: {e}"));
                continue;
            }
        };
        match classify_orbit(&map) {
            Ok(orbit) => {
                if orbit.tag != *expected {
                    problems.push(format!(
                        "{label}: classified {} instead of {}",
                        orbit.tag.as_str(),
                        expected.as_str()
                    ));
                }
                classified.push((map, orbit.tag, *label));
            }
            Err(e) => problems.push(format!("{label}: classification failed: {e}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41_000);
    for trial in 0..50 {
        let g = random_invertible(&mut rng, &field, 2, 3);
        let h = random_invertible(&mut rng, &field, 2, 3);
        for (map, tag, label) in &classified {
            let moved = match pair_act(&g, &h, map) {
                Ok(moved) => moved,
                Err(e) => {
                    problems.push(format!("trial {trial}, {label}: action failed: {e}"));
                    continue;
                }
            };
            match classify_orbit(&moved) {
                Ok(orbit) if orbit.tag == *tag => {}
                Ok(orbit) => problems.push(format!(
                    "trial {trial}, {label}: tag changed from {} to {}",
                    tag.as_str(),
                    orbit.tag.as_str()
                )),
                Err(e) => problems.push(format!("trial {trial}, {label}: {e}")),
            }
        }
    }
    enforce_budget(
        &mut problems,
        started,
        Duration::from_secs(5),
        "classification of the examples and 50 moved copies",
    );
    CheckReport::from_problems(
        "orbit-classification-examples",
        "three example tags as expected; tags invariant under 50 coordinate changes".into(),
        problems,
    )
}

/// Weighting the near-power cubic toward its leading terms lands
/// exactly on the power map; the opposite weighting degenerates power
/// maps to constants.
pub fn one_parameter_limits() -> CheckReport {
    let field = q();
    let mut problems = Vec::new();
    let start = make_map(&[
        binary(&field, 3, &[(3, 1), (0, 1)]),
        binary(&field, 3, &[(0, 1)]),
    ])
    .expect("components are nonzero");
    match one_param_limit(&start, -1, -3) {
        Ok(result) => {
            if result.tag != LimitTag::RegularLimit {
                problems.push(format!(
                    "(x0^3 + x1^3, x1^3) at (-1, -3): tag {}",
                    result.tag.as_str()
                ));
            }
            match &result.limit_map {
                Some(limit) => {
                    if !projectively_equal(limit, &power_map(3)) {
                        problems.push("limit map differs from (x0^3, x1^3)".into());
                    }
                    match classify_orbit(limit) {
                        Ok(orbit) if orbit.tag == OrbitTag::TorusForm => {}
                        Ok(orbit) => problems.push(format!(
                            "limit map classified {}",
                            orbit.tag.as_str()
                        )),
                        Err(e) => problems.push(format!("limit classification failed: {e}")),
                    }
                }
                None => problems.push("no limit map returned at (-1, -3)".into()),
            }
        }
        Err(e) => problems.push(format!("(x0^3 + x1^3, x1^3) at (-1, -3): {e}")),
    }
    for m in 2..=5 {
        match one_param_limit(&power_map(m), 0, 1) {
            Ok(result) => {
                if result.tag != LimitTag::ConstantOrDegenerate {
                    problems.push(format!(
                        "(x0^{m}, x1^{m}) at (0, 1): tag {}",
                        result.tag.as_str()
                    ));
                }
            }
            Err(e) => problems.push(format!("(x0^{m}, x1^{m}) at (0, 1): {e}")),
        }
    }
    CheckReport::from_problems(
        "one-parameter-limits",
        "the near-power cubic degenerates onto the power map; power maps degenerate to constants"
            .into(),
        problems,
    )
}

/// Conjugation by the 2-by-2 Jordan block fixes no regular map in
/// degrees 3 to 5, while in degree 1 it fixes the identity.
pub fn jordan_block_eigenspaces() -> CheckReport {
    let started = Instant::now();
    let field = q();
    let jordan = Matrix::from_integers(&field, 2, &[1, 1, 0, 1]);
    let mut problems = Vec::new();
    for m in [3usize, 4, 5] {
        match fixed_maps(&jordan, m) {
            Ok(report) => {
                for space in &report.eigenspaces {
                    if space.verdict != EigenspaceVerdict::ContainsNoRegularMap {
                        problems.push(format!(
                            "degree {m}: eigenspace verdict {}",
                            space.verdict.as_str()
                        ));
                    }
                }
            }
            Err(e) => problems.push(format!("degree {m}: {e}")),
        }
    }
    match fixed_maps(&jordan, 1) {
        Ok(report) => match report.eigenspaces.iter().find_map(|s| s.witness.as_ref()) {
            Some(witness) => {
                if !projectively_equal(witness, &ProjectiveMap::identity(&field, 2)) {
                    problems.push("degree 1: fixed regular map is not the identity".into());
                }
            }
            None => problems.push("degree 1: no fixed regular map found".into()),
        },
        Err(e) => problems.push(format!("degree 1: {e}")),
    }
    enforce_budget(
        &mut problems,
        started,
        Duration::from_secs(30),
        "eigenspace reports for degrees 1, 3, 4, 5",
    );
    CheckReport::from_problems(
        "jordan-block-eigenspaces",
        "no regular fixed map in degrees 3 to 5; the identity is fixed in degree 1".into(),
        problems,
    )
}

/// Power maps are moved by the weight-(0, 1) torus for every degree
/// above 1, while a degenerate pair with a common zero is fixed by
/// unequal weights.
pub fn torus_weight_witnesses() -> CheckReport {
    let field = q();
    let mut problems = Vec::new();
    for m in 2..=6usize {
        let components = [
            binary(&field, m, &[(m as u32, 1)]),
            binary(&field, m, &[(0, 1)]),
        ];
        match torus_weight_analysis(&[0, 1], &components) {
            Ok((_, fixed)) => {
                if fixed {
                    problems.push(format!(
                        "(x0^{m}, x1^{m}) reported fixed under weights (0, 1)"
                    ));
                }
            }
            Err(e) => problems.push(format!("(x0^{m}, x1^{m}): {e}")),
        }
    }
    let degenerate = [
        binary(&field, 2, &[(2, 1)]),
        binary(&field, 2, &[(1, 1)]),
    ];
    match torus_weight_analysis(&[1, 2], &degenerate) {
        Ok((_, fixed)) => {
            if !fixed {
                problems.push("(x0^2, x0 x1) not fixed under weights (1, 2)".into());
            }
        }
        Err(e) => problems.push(format!("(x0^2, x0 x1): {e}")),
    }
    match sylvester_resultant(&degenerate[0], &degenerate[1]) {
        Ok(res) => {
            if !res.is_zero() {
                problems.push("(x0^2, x0 x1) has a nonzero resultant".into());
            }
        }
        Err(e) => problems.push(format!("resultant of (x0^2, x0 x1): {e}")),
    }
    CheckReport::from_problems(
        "torus-weight-witnesses",
        "power maps move under weights (0, 1); the common-zero pair is fixed and irregular".into(),
        problems,
    )
}

/// The character-degree formula agrees with direct enumeration on four
/// small cases, counts exactly one homomorphism at genus 0, and every
/// built-in degree list satisfies the squared-degree sum identity.
pub fn hom_count_oracles() -> CheckReport {
    let started = Instant::now();
    let mut problems = Vec::new();
    let cases = [
        (GroupFamily::Cyclic(2), 1usize, 4u64, "C2 at genus 1"),
        (GroupFamily::A4, 1, 48, "A4 at genus 1"),
        (GroupFamily::Dihedral(3), 2, 486, "D3 at genus 2"),
        (GroupFamily::Cyclic(3), 2, 81, "C3 at genus 2"),
    ];
    for (family, genus, expected, label) in cases {
        let data = match builtin_group_data(family) {
            Ok(data) => data,
            Err(e) => {
                problems.push(format!("{label}: {e}"));
                continue;
            }
        };
        let counted = count_homs(&data, genus);
        if counted != Rational::from_integer(Int::from(expected)) {
            problems.push(format!(
                "{label}: formula gives {counted} instead of {expected}"
            ));
        }
        match builtin_perm_group(family).and_then(|g| brute_force_homs(&g, genus)) {
            Ok(brute) => {
                if Rational::from_integer(Int::from(brute)) != counted {
                    problems.push(format!(
                        "{label}: enumeration gives {brute}, formula gives {counted}"
                    ));
                }
            }
            Err(e) => problems.push(format!("{label}: enumeration failed: {e}")),
        }
    }
    let roster: Vec<GroupFamily> = (1..=8)
        .map(GroupFamily::Cyclic)
        .chain((3..=8).map(GroupFamily::Dihedral))
        .chain([GroupFamily::A4, GroupFamily::S4, GroupFamily::A5])
        .collect();
    for family in roster {
        let data = match builtin_group_data(family) {
            Ok(data) => data,
            Err(e) => {
                problems.push(format!("{family:?}: {e}"));
                continue;
            }
        };
        if count_homs(&data, 0) != Rational::from_integer(Int::from(1)) {
            problems.push(format!("{}: genus-0 count differs from 1", data.name()));
        }
        let square_sum: u64 = data.irrep_degrees().iter().map(|d| d * d).sum();
        if square_sum != data.order() {
            problems.push(format!(
                "{}: degree squares sum to {square_sum}, order is {}",
                data.name(),
                data.order()
            ));
        }
    }
    enforce_budget(
        &mut problems,
        started,
        Duration::from_secs(10),
        "four enumerations and the built-in roster",
    );
    CheckReport::from_problems(
        "hom-count-oracles",
        "formula matches enumeration on four cases; genus-0 and squared-degree identities hold"
            .into(),
        problems,
    )
}

/// Named identity families over the intersection-theory module, one
/// report per family.
pub fn chow_identity_checks() -> Vec<CheckReport> {
    let xi = ChowClass::symbol(Symbol::Xi);
    let c1e = ChowClass::symbol(Symbol::C1E);
    let c2e = ChowClass::symbol(Symbol::C2E);
    let c1f = ChowClass::symbol(Symbol::C1F);
    let mut rows = Vec::new();

    {
        let mut problems = Vec::new();
        let relation = chow_mul(&xi, &xi)
            .try_add(&chow_mul(&xi, &c1e))
            .and_then(|sum| sum.try_add(&c2e));
        match relation {
            Ok(r) if r.is_zero() => {}
            Ok(r) => problems.push(format!("xi^2 + xi c1E + c2E = {r}")),
            Err(e) => problems.push(e.to_string()),
        }
        rows.push(CheckReport::from_problems(
            "xi-relation",
            "xi^2 + xi c1E + c2E vanishes".into(),
            problems,
        ));
    }

    {
        let mut problems = Vec::new();
        for k in 1..=6i64 {
            let solved = match solve_twist_degree(k) {
                Ok(solved) => solved,
                Err(e) => {
                    problems.push(format!("k = {k}: {e}"));
                    continue;
                }
            };
            let expected = c1e
                .scale(&ratio(k, 2))
                .try_sub(&c1f.scale(&ratio(1, 2)))
                .expect("both sides have degree 1");
            if solved != expected {
                problems.push(format!("k = {k}: twist {solved} instead of {expected}"));
            }
            match TwistSpec::new(k, solved).map(|spec| c2_twist_expand(&spec)) {
                Ok(expanded) => {
                    let (xi_part, _) = expanded.split_xi();
                    if !xi_part.is_zero() {
                        problems.push(format!(
                            "k = {k}: xi component {xi_part} survives substitution"
                        ));
                    }
                }
                Err(e) => problems.push(format!("k = {k}: {e}")),
            }
        }
        rows.push(CheckReport::from_problems(
            "twist-degree",
            "solved twist matches (k c1E - c1F)/2 and kills the xi component, k = 1..6".into(),
            problems,
        ));
    }

    {
        let mut problems = Vec::new();
        match solve_twist_degree(1) {
            Ok(solved) => {
                let on_e = solved.coefficient(&[0, 1, 0, 0, 0, 0, 0]);
                let on_f = solved.coefficient(&[0, 0, 0, 1, 0, 0, 0]);
                if on_e + on_f != ratio(0, 1) {
                    problems.push(format!("k = 1 twist {solved} survives identifying F with E"));
                }
            }
            Err(e) => problems.push(e.to_string()),
        }
        rows.push(CheckReport::from_problems(
            "self-twist",
            "the k = 1 twist vanishes once F is identified with E".into(),
            problems,
        ));
    }

    {
        let mut problems = Vec::new();
        for k in 1..=6i64 {
            match ramification_class(k) {
                Ok(class) => {
                    let expected = xi
                        .scale(&ratio(2 * k - 2, 1))
                        .try_add(&c1e.scale(&ratio(k - 1, 1)))
                        .expect("both sides have degree 1");
                    if class != expected {
                        problems.push(format!("k = {k}: {class} instead of {expected}"));
                    }
                    if class.max_exponent(Symbol::KB) != 0 {
                        problems.push(format!("k = {k}: KB survives cancellation"));
                    }
                    if class.max_exponent(Symbol::C1F) != 0 {
                        problems.push(format!("k = {k}: c1F survives cancellation"));
                    }
                }
                Err(e) => problems.push(format!("k = {k}: {e}")),
            }
        }
        rows.push(CheckReport::from_problems(
            "ramification",
            "class equals (2k - 2) xi + (k - 1) c1E with KB and c1F cancelled, k = 1..6".into(),
            problems,
        ));
    }

    {
        let mut problems = Vec::new();
        for k in 1..=10i64 {
            match symmetric_power_det(2 * k - 2, k - 1) {
                Ok(class) => {
                    if !class.is_zero() {
                        problems.push(format!("l = {}, a = {}: {class}", 2 * k - 2, k - 1));
                    }
                }
                Err(e) => problems.push(format!("k = {k}: {e}")),
            }
        }
        match symmetric_power_det(2, 0) {
            Ok(class) => {
                let expected = c1e.scale(&ratio(-3, 1));
                if class != expected {
                    problems.push(format!("l = 2, a = 0: {class} instead of {expected}"));
                }
            }
            Err(e) => problems.push(format!("l = 2, a = 0: {e}")),
        }
        rows.push(CheckReport::from_problems(
            "symmetric-power",
            "det of S^(2k-2)E* twisted by (k-1) det E vanishes, k = 1..10".into(),
            problems,
        ));
    }

    {
        let mut problems = Vec::new();
        let expected_relation = chow_mul(&c1e, &c1e)
            .try_sub(&c2e.scale(&ratio(4, 1)))
            .expect("both sides have degree 2");
        for k in 2..=6i64 {
            match pullback_twist_constraint(k) {
                Ok((twist, relation)) => {
                    let expected_twist = c1e.scale(&ratio(k - 1, 2));
                    if twist != expected_twist {
                        problems.push(format!(
                            "k = {k}: twist {twist} instead of {expected_twist}"
                        ));
                    }
                    if relation != expected_relation {
                        problems.push(format!(
                            "k = {k}: relation {relation} instead of {expected_relation}"
                        ));
                    }
                }
                Err(e) => problems.push(format!("k = {k}: {e}")),
            }
        }
        if !matches!(pullback_twist_constraint(1), Err(Error::DegenerateTwist(1))) {
            problems.push("k = 1 does not report a degenerate system".into());
        }
        rows.push(CheckReport::from_problems(
            "pullback-constraint",
            "twist is (k-1)/2 c1E and the relation c1E^2 - 4 c2E is k-independent, k = 2..6"
                .into(),
            problems,
        ));
    }

    rows
}

/// Aggregate of the identity families, with a wall-clock budget.
pub fn chow_identities() -> CheckReport {
    let started = Instant::now();
    let rows = chow_identity_checks();
    let mut problems: Vec<String> = rows
        .iter()
        .filter(|row| !row.passed)
        .map(|row| format!("{}: {}", row.name, row.detail))
        .collect();
    enforce_budget(
        &mut problems,
        started,
        Duration::from_secs(1),
        "the identity families",
    );
    CheckReport::from_problems(
        "chow-identities",
        format!("{} identity families hold", rows.len()),
        problems,
    )
}

fn field_axiom_failures() -> Vec<String> {
    let mut problems = Vec::new();
    let sqrt2 = NumberField::new(vec![ratio(-2, 1), ratio(0, 1), ratio(1, 1)])
        .expect("t^2 - 2 is irreducible");
    let mut rng = ChaCha8Rng::seed_from_u64(61_000);
    for (label, field) in [("rationals", q()), ("adjoined root of 2", sqrt2)] {
        for instance in 0..50 {
            let a = random_element(&mut rng, &field, 6);
            let b = random_element(&mut rng, &field, 6);
            let c = random_element(&mut rng, &field, 6);
            let note = |what: &str| format!("{label}, instance {instance}: {what}");
            let left = a.try_add(&b).and_then(|s| s.try_add(&c));
            let right = b.try_add(&c).and_then(|s| a.try_add(&s));
            if left.ok() != right.ok() {
                problems.push(note("addition fails associativity"));
            }
            let spread = a.try_mul(&b).and_then(|ab| {
                let ac = a.try_mul(&c)?;
                ab.try_add(&ac)
            });
            let folded = b.try_add(&c).and_then(|s| a.try_mul(&s));
            if spread.ok() != folded.ok() {
                problems.push(note("multiplication fails distributivity"));
            }
            if !a.is_zero() {
                match a.inverse().and_then(|inv| a.try_mul(&inv)) {
                    Ok(product) if product.is_one() => {}
                    _ => problems.push(note("inverse fails")),
                }
            }
        }
    }
    problems
}

fn euler_identity_failures() -> Vec<String> {
    let field = q();
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(62_000);
    for instance in 0..100 {
        let num_vars = rng.gen_range(2..=3);
        let degree = rng.gen_range(2..=4usize);
        let f = random_nonzero_form(&mut rng, &field, num_vars, degree, 4);
        let mut sum = Form::zero(&field, num_vars, degree);
        let mut failed = false;
        for i in 0..num_vars {
            let mut exps = vec![0u32; num_vars];
            exps[i] = 1;
            let variable =
                Form::monomial(&field, exps, field.one()).expect("degree-1 monomial");
            match f.partial(i).and_then(|d| d.try_mul(&variable)) {
                Ok(term) => match sum.try_add(&term) {
                    Ok(next) => sum = next,
                    Err(e) => {
                        problems.push(format!("instance {instance}: {e}"));
                        failed = true;
                        break;
                    }
                },
                Err(e) => {
                    problems.push(format!("instance {instance}: {e}"));
                    failed = true;
                    break;
                }
            }
        }
        if !failed && sum != f.scale_rational(&ratio(degree as i64, 1)) {
            problems.push(format!(
                "instance {instance}: weighted partials differ from degree times the form"
            ));
        }
    }
    problems
}

fn substitution_functoriality_failures() -> Vec<String> {
    let field = q();
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(63_000);
    for instance in 0..100 {
        let num_vars = 2 + (instance % 2);
        let f = random_nonzero_form(&mut rng, &field, num_vars, 3, 3);
        let g = random_invertible(&mut rng, &field, num_vars, 3);
        let h = random_invertible(&mut rng, &field, num_vars, 3);
        let staged = f
            .substitute_linear(&g)
            .and_then(|fg| fg.substitute_linear(&h));
        let combined = g.try_mul(&h).and_then(|gh| f.substitute_linear(&gh));
        match (staged, combined) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    problems.push(format!(
                        "instance {instance}: staged substitution differs from the product"
                    ));
                }
            }
            (a, b) => problems.push(format!(
                "instance {instance}: substitution errored ({:?} vs {:?})",
                a.err(),
                b.err()
            )),
        }
    }
    problems
}

fn reynolds_failures() -> Vec<String> {
    let field = q();
    let group = signed_swap_group();
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(64_000);
    for instance in 0..100 {
        let f = random_nonzero_form(&mut rng, &field, 2, 4, 4);
        let projected = match reynolds_project(&group, &f) {
            Ok(projected) => projected,
            Err(e) => {
                problems.push(format!("instance {instance}: projection failed: {e}"));
                continue;
            }
        };
        match reynolds_project(&group, &projected) {
            Ok(twice) => {
                if twice != projected {
                    problems.push(format!("instance {instance}: projection is not idempotent"));
                }
            }
            Err(e) => problems.push(format!("instance {instance}: second projection: {e}")),
        }
        for g in group.elements() {
            match projected.substitute_linear(g) {
                Ok(moved) => {
                    if moved != projected {
                        problems.push(format!(
                            "instance {instance}: projection moves under a group element"
                        ));
                        break;
                    }
                }
                Err(e) => {
                    problems.push(format!("instance {instance}: substitution failed: {e}"));
                    break;
                }
            }
        }
    }
    problems
}

fn ramification_failures() -> Vec<String> {
    let field = q();
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(65_000);
    let mut kept = 0usize;
    while kept < 100 {
        let m = rng.gen_range(2..=4usize);
        let f0 = random_nonzero_form(&mut rng, &field, 2, m, 4);
        let f1 = random_nonzero_form(&mut rng, &field, 2, m, 4);
        let map = match make_map(&[f0, f1]).and_then(|map| certify_regular(&map)) {
            Ok(map) if map.regularity() == Regularity::CertifiedRegular && map.degree() == m => {
                map
            }
            _ => continue,
        };
        kept += 1;
        let ram = match ramification_form(&map) {
            Ok(ram) => ram,
            Err(e) => {
                problems.push(format!("instance {kept}: ramification failed: {e}"));
                continue;
            }
        };
        if ram.degree() != 2 * m - 2 {
            problems.push(format!(
                "instance {kept}: ramification degree {} for a degree-{m} map",
                ram.degree()
            ));
        }
        match squarefree_factorization(&ram) {
            Ok(factorization) => {
                for factor in &factorization.factors {
                    if factor.multiplicity >= m {
                        problems.push(format!(
                            "instance {kept}: multiplicity {} reaches the degree {m}",
                            factor.multiplicity
                        ));
                    }
                }
            }
            Err(e) => problems.push(format!("instance {kept}: factorization failed: {e}")),
        }
    }
    problems
}

/// Six foundational property families, each on at least 100 seeded
/// instances: field axioms, the Euler identity, substitution
/// functoriality, Reynolds idempotence and invariance, ramification
/// degree 2m - 2, and ramification multiplicities below the degree.
pub fn infrastructure_properties() -> CheckReport {
    let started = Instant::now();
    let mut problems = Vec::new();
    problems.extend(field_axiom_failures());
    problems.extend(euler_identity_failures());
    problems.extend(substitution_functoriality_failures());
    problems.extend(reynolds_failures());
    problems.extend(ramification_failures());
    enforce_budget(
        &mut problems,
        started,
        Duration::from_secs(60),
        "six property families",
    );
    CheckReport::from_problems(
        "infrastructure-properties",
        "six property families hold on 100 seeded instances each".into(),
        problems,
    )
}
