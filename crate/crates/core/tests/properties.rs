//! Cross-validation of the fast paths against independent oracles. The
//! checks themselves live in `common/oracles.rs` so the acceptance target
//! can run the same suite.

#[path = "common/oracles.rs"]
mod oracles;

#[test]
fn certificates_agree_with_brute_equivalence_at_length_three() {
    oracles::certificates_match_brute_equivalence();
}

#[test]
fn scrambled_codes_stay_equivalent_and_different_enumerators_never_are() {
    oracles::scrambles_stay_equivalent_and_refutations_hold();
}

#[test]
fn dual_of_graph_code_is_transpose_graph_code() {
    oracles::dual_of_graph_code_is_transpose_graph_code();
}

#[test]
fn z4_twin_distribution_matches_exhaustively() {
    oracles::z4_twin_distribution_matches_direct_enumeration();
}

#[test]
fn circulant_families_are_isodual_with_shift_symmetry() {
    oracles::circulant_families_are_isodual_with_shift_symmetry();
}

#[test]
fn bounded_distance_agrees_with_full_enumeration() {
    oracles::bounded_distance_agrees_with_full_enumeration();
}

#[test]
fn euler_transform_counts_all_codes_from_connected_ones() {
    oracles::euler_transform_counts_all_codes_from_connected_ones();
}
