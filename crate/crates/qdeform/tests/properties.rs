//! Randomized property suites, one test per law. Seeds are fixed, so runs
//! are reproducible; counts match the sizes the acceptance gate uses.

mod common;

use common::suites;

#[test]
fn series_arithmetic_satisfies_the_ring_axioms() {
    suites::ring_axioms(200).unwrap();
}

#[test]
fn continued_fraction_expansions_round_trip() {
    suites::expansion_round_trips(100).unwrap();
}

#[test]
fn deformation_is_modular_group_equivariant() {
    suites::psl_equivariance(50).unwrap();
}

#[test]
fn both_continued_fraction_routes_agree() {
    suites::dual_route_agreement(100).unwrap();
}

#[test]
fn metallic_deformations_have_coefficient_gaps() {
    suites::metallic_gaps(8).unwrap();
}
