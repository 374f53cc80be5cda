//! The acceptance gate: one test per numbered criterion, each printing a
//! single pass/fail line. Criteria 1 and 5 state expectations that the
//! computations honestly contradict; those tests pin the computed truth and
//! the exact shape of the disagreement instead of papering over it.

use twodiv_cli::suite::{self, BundledSpecs, CheckResult};

fn specs() -> BundledSpecs {
    BundledSpecs::embedded().expect("bundled inputs load")
}

fn announce(result: &CheckResult) {
    let failures: Vec<String> = result
        .details
        .iter()
        .filter(|d| !d.pass)
        .map(|d| format!("{}: expected {}, computed {}", d.check, d.expected, d.computed))
        .collect();
    if result.pass {
        println!("criterion {}: PASS — {} ({} ms)", result.index, result.name, result.elapsed_ms);
    } else {
        println!(
            "criterion {}: FAIL — {} ({} ms): {}",
            result.index,
            result.name,
            result.elapsed_ms,
            failures.join("; ")
        );
    }
}

fn assert_within(result: &CheckResult, cap_ms: u128) {
    assert!(
        result.elapsed_ms < cap_ms,
        "criterion {} took {} ms, cap is {} ms",
        result.index,
        result.elapsed_ms,
        cap_ms
    );
}

#[test]
fn criterion_1_cohomology_survey() {
    let result = suite::check_h1_survey();
    announce(&result);
    assert_within(&result, 10_000);
    // The closed form misses exactly one subgroup: {1, 3} acting on Z/4 has
    // a nonzero class (the norm of -1 is 1 + (-1) = 0 mod 4, so cocycles on
    // the generator range over all of Z/4 while coboundaries hit only 2Z/4).
    // The stated survey expectation is therefore not attainable; this test
    // freezes the computed truth.
    assert!(!result.pass, "the survey is expected to surface the closed-form exception");
    let failing: Vec<_> = result.details.iter().filter(|d| !d.pass).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].check.starts_with("closed form"));
    assert!(failing[0].computed.contains("1 disagreement(s)"));
    assert!(failing[0].computed.contains("exponent 2, elements [1, 3], computed 2, predicted 1"));
    let restrictions = result
        .details
        .iter()
        .find(|d| d.check.contains("proper subgroups"))
        .expect("restriction detail present");
    assert!(restrictions.pass, "restrictions to proper subgroups all vanish");
}

#[test]
fn criterion_2_obstructed_curve() {
    let result = suite::check_obstructed_pipeline(&specs());
    announce(&result);
    assert_within(&result, 5_000);
    assert!(result.pass, "obstructed-curve pipeline: {:?}", failure_text(&result));
}

#[test]
fn criterion_3_rank_one_curve() {
    let result = suite::check_rank_one_pipeline(&specs());
    announce(&result);
    assert_within(&result, 60_000);
    assert!(result.pass, "rank-one pipeline: {:?}", failure_text(&result));
}

#[test]
fn criterion_4_torsion_formulas() {
    let result = suite::check_torsion_formulas();
    announce(&result);
    assert_within(&result, 10_000);
    assert!(result.pass, "torsion formulas: {:?}", failure_text(&result));
}

#[test]
fn criterion_5_constant_curve_counts() {
    let result = suite::check_point_counts(&specs());
    announce(&result);
    assert_within(&result, 1_000);
    // The second constant curve (a = 0, b = w over F_4) has 4 points and
    // Frobenius trace +1; the stated 6 points with trace -1 belong to its
    // quadratic twist (a = w). The discriminant is -15 either way, so the
    // non-isogeny conclusion still stands. This test freezes the computed
    // counts while letting the stated expectation fail.
    assert!(!result.pass, "the stated F_4 count is expected to disagree");
    let failing: Vec<_> = result.details.iter().filter(|d| !d.pass).collect();
    assert_eq!(failing.len(), 2);
    assert_eq!(failing[0].check, "count over F_4");
    assert_eq!((failing[0].expected.as_str(), failing[0].computed.as_str()), ("6", "4"));
    assert_eq!(failing[1].check, "trace over F_4");
    assert_eq!((failing[1].expected.as_str(), failing[1].computed.as_str()), ("-1", "1"));
    for check in ["count over F_2", "trace over F_2", "discriminant over F_2"] {
        assert!(result.details.iter().any(|d| d.check == check && d.pass), "{check} holds");
    }
    let comparison = result
        .details
        .iter()
        .find(|d| d.check.contains("Frobenius fields"))
        .expect("comparison detail present");
    assert!(comparison.pass);
    assert_eq!(comparison.computed, "non-isogenous");
}

#[test]
fn criterion_6_local_solvers() {
    let result = suite::check_local_solvers(&specs());
    announce(&result);
    assert_within(&result, 30_000);
    assert!(result.pass, "local solvers: {:?}", failure_text(&result));
}

#[test]
fn criterion_7_oracle_agreement() {
    let result = suite::check_oracle_agreement(&specs());
    announce(&result);
    assert_within(&result, 60_000);
    assert!(result.pass, "criterion vs enumeration: {:?}", failure_text(&result));
}

#[test]
fn criterion_8_class_invariance() {
    let result = suite::check_class_invariance(&specs());
    announce(&result);
    assert_within(&result, 30_000);
    assert!(result.pass, "class invariance: {:?}", failure_text(&result));
}

fn failure_text(result: &CheckResult) -> Vec<String> {
    result
        .details
        .iter()
        .filter(|d| !d.pass)
        .map(|d| format!("{}: expected {}, computed {}", d.check, d.expected, d.computed))
        .collect()
}
