//! One test per built-in diagnostic check, in the order `projendo
//! selftest` runs them. Each prints its pass/fail line and then
//! asserts, so a failure carries the check's own detail. Wall-clock
//! budgets are enforced inside the checks themselves.

use projendo::selftest::{self, CheckReport};

fn assert_check(report: CheckReport) {
    let status = if report.passed { "pass" } else { "FAIL" };
    println!("{:<34} {status}", report.name);
    assert!(report.passed, "{}: {}", report.name, report.detail);
}

#[test]
fn equivariant_maps_exist_for_both_fixture_groups() {
    assert_check(selftest::equivariant_fixture_groups());
}

#[test]
fn cubic_examples_cover_the_three_orbit_types() {
    assert_check(selftest::orbit_classification_examples());
}

#[test]
fn weighted_limits_degenerate_as_expected() {
    assert_check(selftest::one_parameter_limits());
}

#[test]
fn jordan_block_fixes_no_regular_map_above_degree_one() {
    assert_check(selftest::jordan_block_eigenspaces());
}

#[test]
fn torus_weight_witnesses_separate_fixed_from_moved() {
    assert_check(selftest::torus_weight_witnesses());
}

#[test]
fn character_formula_matches_direct_enumeration() {
    assert_check(selftest::hom_count_oracles());
}

#[test]
fn chow_identities_hold_symbolically() {
    assert_check(selftest::chow_identities());
}

#[test]
fn foundational_properties_hold_on_seeded_instances() {
    assert_check(selftest::infrastructure_properties());
}
