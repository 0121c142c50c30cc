//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every check is exact; there are no tolerances anywhere.

use latinburn::verify::{
    all_suites, suite_bounds, suite_characterization, suite_cyclic, suite_examples,
    suite_exhaustive, suite_groups, suite_intercalates, suite_order_five, suite_roundtrips,
    SuiteResult, VerifyOptions,
};

fn report(criterion: &str, result: &SuiteResult) {
    if result.passed() {
        println!(
            "[acceptance] {criterion} ({}): PASS, {} checks",
            result.name, result.checks
        );
    } else {
        let failure = &result.failures[0];
        println!(
            "[acceptance] {criterion} ({}): FAIL — {}",
            result.name, failure.message
        );
        if let Some(square) = &failure.square {
            println!("counterexample square:\n{square}");
        }
        if !failure.witness.is_null() {
            println!("witness: {}", failure.witness);
        }
        panic!("{criterion} failed: {}", failure.message);
    }
}

#[test]
fn criterion_1_exhaustive_identity_check_orders_up_to_4() {
    // all 591 squares of orders 1..=4: both burning oracles, the mcs
    // oracle, and the complement search against the scc formulas, plus the
    // oracle-level duality (order 1 special-cased)
    report("criterion 1", &suite_exhaustive(&VerifyOptions::default()));
}

#[test]
fn criterion_2_order_5_spot_check() {
    report("criterion 2", &suite_order_five(&VerifyOptions::default()));
}

#[test]
fn criterion_3_cyclic_family() {
    report("criterion 3", &suite_cyclic(&VerifyOptions::default()));
}

#[test]
fn criterion_4_intercalate_powers() {
    report(
        "criterion 4",
        &suite_intercalates(&VerifyOptions::default()),
    );
}

#[test]
fn criterion_5_scc_bounds() {
    report("criterion 5", &suite_bounds(&VerifyOptions::default()));
}

#[test]
fn criterion_6_peel_characterization() {
    report(
        "criterion 6",
        &suite_characterization(&VerifyOptions::default()),
    );
}

#[test]
fn criterion_7_worked_example_fidelity() {
    report("criterion 7", &suite_examples());
}

#[test]
fn criterion_8_group_suite() {
    report("criterion 8", &suite_groups(&VerifyOptions::default()));
}

#[test]
fn criterion_9_constructive_round_trips() {
    report("criterion 9", &suite_roundtrips(&VerifyOptions::default()));
}

#[test]
fn all_suites_report_in_canonical_order() {
    let opts = VerifyOptions {
        max_order: 2,
        cyclic_max: 4,
        ipow_max: 1,
        samples: 5,
        seed: 3,
    };
    let names: Vec<&str> = all_suites(&opts).iter().map(|s| s.name).collect();
    assert_eq!(
        names,
        vec![
            "exhaustive-small-orders",
            "order-5-spot-check",
            "cyclic-family",
            "intercalate-powers",
            "scc-bounds",
            "peel-characterization",
            "worked-examples",
            "group-suite",
            "chain-roundtrips",
        ]
    );
}
