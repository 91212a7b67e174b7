//! Runs the property suites at the default configuration.

use affine_weyl::conj_classes::{fundamental_element, is_coset_minimal, DPPair};
use affine_weyl::verify::{registry, run_all, VerifyConfig, VerifyContext, SUITES};
use affine_weyl::weyl_core::{length, simple_reflection};
use affine_weyl::{Exec, WeylType};

/// Checks whose failure is a known counterexample rather than a bug.
const KNOWN_FAILURES: [&str; 1] = ["conj_classes/fundamental_coset_minimal"];

#[test]
fn default_configuration_passes() {
    let ctx = VerifyContext::new(VerifyConfig::default(), Exec::default());
    let report = run_all(&ctx);
    assert_eq!(report.checks.len(), registry().len());
    for c in &report.checks {
        let name = format!("{}/{}", c.suite, c.name);
        if KNOWN_FAILURES.contains(&name.as_str()) {
            continue;
        }
        assert!(c.passed, "{name} failed: {:?}", c.failures);
        assert!(c.checked > 0, "{name} checked nothing");
    }
}

#[test]
fn every_suite_has_checks() {
    let reg = registry();
    for s in SUITES {
        assert!(reg.iter().any(|c| c.suite == s), "suite {s} is empty");
    }
}

#[test]
fn fundamental_element_with_repeated_mu_is_not_coset_minimal() {
    let p = DPPair::new(vec![], vec![(1, 1), (1, 1)]);
    let f = fundamental_element(WeylType::B, &p).unwrap();
    assert!(!is_coset_minimal(&f));
    let s1 = simple_reflection(WeylType::B, 2, 1).unwrap();
    assert_eq!((length(&f), length(&s1.mul(&f))), (2, 1));
}
