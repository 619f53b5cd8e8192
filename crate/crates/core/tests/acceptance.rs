//! Acceptance suite: the ten library-level gates, each exact (tolerance
//! zero) and each printing one pass/fail line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use albertson::verify::{
    check_addition_deltas, check_codec_round_trip, check_family_closed_form,
    check_incremental_stream, check_parity, check_realizability, check_spectrum_gaps,
    check_transformation_laws, check_tree_extremals, check_tree_lower_bound, CheckResult,
    DEFAULT_SEED,
};

const WORKERS: usize = 2;

fn gate(criterion: &str, result: &CheckResult) {
    println!(
        "criterion {criterion}: {} — {} ({})",
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.detail
    );
    assert!(result.passed, "criterion {criterion}: {}", result.detail);
}

/// Every labeled connected graph on up to 7 vertices has an even index.
#[test]
fn criterion_01_parity_exhaustive_to_order_7() {
    gate("1", &check_parity(7, WORKERS).unwrap());
}

/// For 5 <= n <= 12 the path is the unique tree minimizer (value 6) and
/// the star the unique maximizer (value (n-1)((n-1)^2 - 1)).
#[test]
fn criterion_02_tree_extremals_to_order_12() {
    gate("2", &check_tree_extremals(12).unwrap());
}

/// Every tree on up to 12 vertices satisfies the lower bound
/// max_degree (max_degree^2 - 1), with equality exactly on paths and
/// spiders.
#[test]
fn criterion_03_tree_lower_bound_to_order_12() {
    gate("3", &check_tree_lower_bound(12).unwrap());
}

/// 10^4 seeded random insertions: the O(d_u + d_v) delta equals the
/// recomputed difference exactly and is always even.
#[test]
fn criterion_04_addition_delta_random_cases() {
    gate("4", &check_addition_deltas(DEFAULT_SEED, 10_000));
}

/// 10^3 seeded random applications each: the cubic-edge subdivision adds
/// exactly 10, the neutral subdivision exactly 0.
#[test]
fn criterion_05_transformation_laws() {
    gate("5", &check_transformation_laws(DEFAULT_SEED, 1_000));
}

/// Family members hit the closed form for all step counts up to 20 and
/// every variant; the step-free variants give 32, 24, 16, 8.
#[test]
fn criterion_06_family_closed_form() {
    use albertson::family::{construct_family, FamilySpec};
    use albertson::invariants::modified_albertson;
    for (variant, expected) in [(1u8, 32u64), (2, 24), (3, 16), (4, 8)] {
        let g = construct_family(&FamilySpec::new(0, variant, 3).unwrap()).unwrap();
        assert_eq!(modified_albertson(&g), expected, "variant {variant} base");
    }
    gate("6", &check_family_closed_form(20).unwrap());
}

/// realize(2t, 5) returns five connected, pairwise non-isomorphic
/// witnesses for every t in {0, 3, 4, 5} and 8..=60, including the
/// special values 6 and 22.
#[test]
fn criterion_07_realizability() {
    gate("7", &check_realizability(5).unwrap());
}

/// The order <= 7 spectrum contains {0, 6, 8, 10, 16, 18, 20, 22, 24},
/// avoids {2, 4, 12, 14}, and its order-4 slice is exactly
/// {0, 6, 18, 20, 24}.
#[test]
fn criterion_08_spectrum_gaps() {
    gate("8", &check_spectrum_gaps(7, WORKERS).unwrap());
}

/// 10^4 tracked updates on a 1000-vertex graph: checkpoints agree with
/// full recomputation exactly and each update inspects at most
/// d_u + d_v + 4 neighbor degrees.
#[test]
fn criterion_09_incremental_efficiency() {
    gate(
        "9",
        &check_incremental_stream(DEFAULT_SEED, 1_000, 10_000, 100),
    );
}

/// graph6 round-trips exactly over every labeled graph on up to 6
/// vertices (covering all isomorphism classes) and over the realized
/// witnesses of criterion 7.
#[test]
fn criterion_10_codec_round_trip() {
    gate("10", &check_codec_round_trip().unwrap());
}
