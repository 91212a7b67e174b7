//! Machine-checkable invariants, grouped into suites.
//!
//! Every check sweeps a deterministic family of inputs (balls of bounded
//! length, exhaustive small families, or samples drawn from a seeded RNG)
//! and records how many cases it examined, how many it could not decide
//! within its budget, and certificates for the first few failures. Reports
//! are sorted by suite and check name, so two runs with the same
//! configuration render byte-identical output.

mod adlv_checks;
mod classes;
mod core_checks;
mod hecke_checks;
mod newton_checks;
mod reduction_checks;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{AwgError, Result};
use crate::exec::Exec;
use crate::weyl_core::{ball, GroupElement, OmegaScope, WeylType};

/// Parameters shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Largest rank swept (types A, B, C use `n = 2..=rank`; type D uses
    /// `n = 3..=max(3, rank)`).
    pub rank: usize,
    /// Largest length of the element balls.
    pub maxlen: u64,
    /// Seed of every randomized sample.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            rank: 2,
            maxlen: 6,
            seed: 0x5eed,
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub checked: u64,
    /// Cases a budgeted search could not decide (not counted as failures).
    pub unverified: u64,
    /// Total number of failing cases.
    pub failure_count: u64,
    /// Certificates for the first failing cases.
    pub failures: Vec<String>,
}

const MAX_CERTIFICATES: usize = 5;

/// Accumulates the results of a single check.
pub(crate) struct Tally {
    checked: u64,
    unverified: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            unverified: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    /// Records one case; `msg` is only evaluated on failure.
    pub(crate) fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    pub(crate) fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_CERTIFICATES {
            self.failures.push(msg);
        }
    }

    pub(crate) fn unverified(&mut self, msg: impl FnOnce() -> String) {
        self.checked += 1;
        self.unverified += 1;
        if self.failures.len() < MAX_CERTIFICATES {
            self.failures.push(format!("unverified: {}", msg()));
        }
    }
}

/// Ball cache key: type, rank, length bound, and whether every coset is included.
type BallKey = (WeylType, usize, u64, bool);

/// Shared state of a verification run: the configuration and a cache of
/// element balls.
pub struct VerifyContext {
    pub cfg: VerifyConfig,
    pub exec: Exec,
    balls: Mutex<HashMap<BallKey, Arc<Vec<GroupElement>>>>,
}

impl VerifyContext {
    /// A context with an empty cache.
    pub fn new(cfg: VerifyConfig, exec: Exec) -> Self {
        VerifyContext {
            cfg,
            exec,
            balls: Mutex::new(HashMap::new()),
        }
    }

    /// Ball of length `≤ maxlen` in the given scope, cached.
    pub(crate) fn ball(&self, ty: WeylType, n: usize, maxlen: u64, scope: OmegaScope) -> Result<Arc<Vec<GroupElement>>> {
        let key = (ty, n, maxlen, scope == OmegaScope::All);
        if let Some(b) = self.balls.lock().expect("ball cache").get(&key) {
            return Ok(b.clone());
        }
        let b = Arc::new(ball(ty, n, maxlen, scope, self.exec)?);
        self.balls.lock().expect("ball cache").insert(key, b.clone());
        Ok(b)
    }

    /// Integral elements of length `≤ cfg.maxlen`.
    pub(crate) fn integral_ball(&self, ty: WeylType, n: usize) -> Result<Arc<Vec<GroupElement>>> {
        self.ball(ty, n, self.cfg.maxlen, OmegaScope::Integral)
    }

    /// The groups swept at the configured rank.
    pub(crate) fn groups(&self) -> Vec<(WeylType, usize)> {
        groups_up_to(self.cfg.rank)
    }

    /// Type A and C groups swept at the configured rank.
    pub(crate) fn groups_ac(&self) -> Vec<(WeylType, usize)> {
        self.groups()
            .into_iter()
            .filter(|(t, _)| matches!(t, WeylType::A | WeylType::C))
            .collect()
    }

    /// RNG seeded from the configuration and the check name.
    pub(crate) fn rng(&self, name: &str) -> ChaCha8Rng {
        let h = name
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ h)
    }

    /// `count` elements drawn uniformly from the integral balls of all
    /// swept groups (the group is drawn first).
    pub(crate) fn sample_integral(&self, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<GroupElement>> {
        let groups = self.groups();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let &(ty, n) = groups.choose(rng).expect("at least one group");
            let b = self.integral_ball(ty, n)?;
            out.push(b.choose(rng).expect("ball contains the identity").clone());
        }
        Ok(out)
    }
}

/// Groups `(type, n)` swept up to a rank: A, B, C with `2 ≤ n ≤ rank`, D
/// with `3 ≤ n ≤ max(3, rank)`.
pub fn groups_up_to(rank: usize) -> Vec<(WeylType, usize)> {
    let mut out = Vec::new();
    for n in 2..=rank {
        out.push((WeylType::A, n));
        out.push((WeylType::B, n));
        out.push((WeylType::C, n));
    }
    for n in 3..=rank.max(3) {
        out.push((WeylType::D, n));
    }
    out
}

type CheckFn = fn(&VerifyContext, &mut Tally) -> Result<()>;

/// One registered check.
pub struct CheckSpec {
    pub suite: &'static str,
    pub name: &'static str,
    pub description: &'static str,
    run: CheckFn,
}

macro_rules! check {
    ($suite:literal, $name:literal, $desc:literal, $f:path) => {
        CheckSpec {
            suite: $suite,
            name: $name,
            description: $desc,
            run: $f,
        }
    };
}

/// All checks, in report order.
pub fn registry() -> Vec<CheckSpec> {
    let mut v = vec![
        check!("adlv", "general_matches_type_ac", "general formula with the fiber base map equals the type A/C formula (n = 2)", adlv_checks::general_matches_type_ac),
        check!("adlv", "minimal_elements_degenerate", "for minimal w the type A/C formula is l(class) - l(fiber)", adlv_checks::minimal_elements_degenerate),
        check!("adlv", "regular_coweight_consistency", "regular coweight formula agrees with the type A/C formula (n = 2)", adlv_checks::regular_coweight_consistency),
        check!("adlv", "regular_translation_zero", "t^mu has dimension 0 at its own invariant for regular dominant mu", adlv_checks::regular_translation_zero),
        check!("adlv", "worked_dimensions", "dimensions 2 and 1 for s1 s0 s1 in type A, n = 2", adlv_checks::worked_dimensions),
        check!("conj_classes", "a_seq_order_total", "periodic sequence order is total, transitive and matches a long prefix comparison", classes::a_seq_order_total),
        check!("conj_classes", "chi_rotation_bound", "every chi' of sum m has a rotation at least chi_{n,m} (n <= 6)", classes::chi_rotation_bound),
        check!("conj_classes", "chi_rotation_max", "chi_{n,m} dominates its rotations (n, |m| <= 12)", classes::chi_rotation_max),
        check!("conj_classes", "classify_conjugation_invariant", "classify is constant on conjugation orbits", classes::classify_invariant),
        check!("conj_classes", "ev_monotone", "ev0 and ev1 do not increase under extreme P-operators", classes::ev_monotone),
        check!("conj_classes", "extreme_theta_reduction", "extreme P-operators reach a block element (n <= 5)", classes::extreme_theta_reduction),
        check!("conj_classes", "fundamental_coset_minimal", "fundamental elements lie in the set W and are minimal in their W-coset", classes::fundamental_coset_minimal),
        check!("conj_classes", "minuscule_length_drop", "minuscule criterion implies l(tau^-1 w) = l(w) - l(tau)", classes::minuscule_length_drop),
        check!("conj_classes", "omega_block_conjugacy", "Omega_r (1..c) is S_n-conjugate to w_{n,r} (n <= 8)", classes::omega_block_conjugacy),
        check!("conj_classes", "p_operator_shift", "central shifts commute with P-operators", classes::p_operator_shift),
        check!("conj_classes", "stable_blocks", "P-operators fix w_{n,m} up to cyclic conjugation (n <= 8)", classes::stable_blocks),
        check!("conj_classes", "stable_blocks_prime", "P-operators fix w'_{n,m} up to cyclic conjugation (n <= 8)", classes::stable_blocks_prime),
        check!("conj_classes", "standard_round_trip", "classify(standard_element(p)) = p (n <= 4, |c| <= 3)", classes::standard_round_trip),
        check!("conj_classes", "worked_examples", "chi, e_theta, P_theta and quasi-positivity worked examples", classes::worked_examples),
        check!("hecke", "path_independence", "class polynomials agree under 5 seeded search orders (100 elements)", hecke_checks::path_independence),
        check!("hecke", "products", "T_x T_y = T_xy when lengths add", hecke_checks::products),
        check!("hecke", "quadratic_relation", "(T_s - v)(T_s + v^-1) = 0 and T_s^-1 = T_s - xi", hecke_checks::quadratic_relation),
        check!("hecke", "table_invariants", "constant terms, mass, nonnegativity, parity and degree bound (200 elements)", hecke_checks::table_invariants),
        check!("hecke", "worked_table", "table of s1 s0 s1 in type A, n = 2", hecke_checks::worked_table),
        check!("hecke", "xi_ring_axioms", "xi-polynomial ring axioms on random triples", hecke_checks::xi_ring_axioms),
        check!("newton", "coxeter_elements_good", "Coxeter elements of the affine Weyl group are good", newton_checks::coxeter_elements_good),
        check!("newton", "exponent_independence", "Newton point from exponents k and 2k agree", newton_checks::exponent_independence),
        check!("newton", "fiber_consistency", "fiber classes carry the invariant they were computed from", newton_checks::fiber_consistency),
        check!("newton", "good_elements_connected", "good elements of a fiber are joined by length-preserving moves", newton_checks::good_elements_connected),
        check!("newton", "good_iff_distinguished_minimal", "good iff minimal in the distinguished class iff Bruhat-minimal in the fiber", newton_checks::good_iff_distinguished_minimal),
        check!("newton", "good_iff_fiber_minimal", "good iff minimal length in its fiber", newton_checks::good_iff_fiber_minimal),
        check!("newton", "good_vs_powers", "l(w) = <v, 2 rho> iff l(w^k) = k l(w) for k <= 12 (300 elements)", newton_checks::good_vs_powers),
        check!("newton", "invariant_constant_on_conjugates", "f is constant on conjugacy classes", newton_checks::invariant_constant),
        check!("newton", "preceq_partial_order", "the order on fibers is reflexive, antisymmetric and transitive (n = 2)", newton_checks::preceq_partial_order),
        check!("reduction", "coxeter_reduction", "t^chi c in W_a reduces to the length of c", reduction_checks::coxeter_reduction),
        check!("reduction", "fundamental_decomposition", "w reduces to x f with l(x f) = l(x) + l(f)", reduction_checks::fundamental_decomposition),
        check!("reduction", "fundamental_reachable", "distinguished classes reduce by simple moves to the fundamental element (A, B, C)", reduction_checks::fundamental_reachable),
        check!("reduction", "min_equals_bruhat_min", "minimal length elements of a class are its Bruhat-minimal elements", reduction_checks::min_equals_bruhat_min),
        check!("reduction", "paths_valid", "reduction paths replay, never increase length and stay in the class", reduction_checks::paths_valid),
        check!("reduction", "reduces_to_brute_force_min", "non-increasing moves reach the brute-force minimal length", reduction_checks::reduces_to_min),
        check!("reduction", "strong_conjugacy_of_minimal", "minimal elements of a class are strongly conjugate (witness length <= 6)", reduction_checks::strong_conjugacy),
        check!("reduction", "terminal_iff_minimal", "terminal iff minimal length in the class", reduction_checks::terminal_iff_minimal),
        check!("weyl_core", "bruhat_partial_order", "Bruhat order is a partial order compatible with length", core_checks::bruhat_partial_order),
        check!("weyl_core", "bruhat_subword", "Bruhat order agrees with the subword criterion (type A, rank 2, length <= 5)", core_checks::bruhat_subword),
        check!("weyl_core", "group_axioms", "associativity, identity and inverses", core_checks::group_axioms),
        check!("weyl_core", "length_simple_step", "|l(s x) - l(x)| = |l(x s) - l(x)| = 1", core_checks::length_simple_step),
        check!("weyl_core", "length_symmetries", "length is invariant under inversion and length-zero conjugation, and subadditive", core_checks::length_symmetries),
        check!("weyl_core", "length_vs_cayley_bfs", "length equals Cayley graph distance (length <= 6)", core_checks::length_vs_cayley),
        check!("weyl_core", "omega_length_zero", "length-zero generators have length 0", core_checks::omega_length_zero),
        check!("weyl_core", "reduced_word_round_trip", "reduced words multiply back to the element", core_checks::reduced_word_round_trip),
    ];
    v.sort_by_key(|c| (c.suite, c.name));
    v
}

/// Names of the suites.
pub const SUITES: [&str; 6] = ["adlv", "conj_classes", "hecke", "newton", "reduction", "weyl_core"];

/// Runs one check.
pub fn run_check(spec: &CheckSpec, ctx: &VerifyContext) -> CheckOutcome {
    let mut t = Tally::new();
    if let Err(e) = (spec.run)(ctx, &mut t) {
        t.fail(format!("error: {e}"));
    }
    CheckOutcome {
        suite: spec.suite.into(),
        name: spec.name.into(),
        passed: t.failure_count == 0,
        checked: t.checked,
        unverified: t.unverified,
        failure_count: t.failure_count,
        failures: t.failures,
    }
}

/// Runs the named checks (`suite/name`) of the registry.
pub fn run_named(ctx: &VerifyContext, names: &[&str]) -> Result<Report> {
    let reg = registry();
    let mut chosen = Vec::new();
    for name in names {
        let spec = reg
            .iter()
            .find(|c| format!("{}/{}", c.suite, c.name) == *name)
            .ok_or_else(|| AwgError::InvalidArgument(format!("unknown check {name}")))?;
        chosen.push(spec);
    }
    Ok(run_specs(ctx, &chosen))
}

/// Runs every check of the given suite.
pub fn run_suite(ctx: &VerifyContext, suite: &str) -> Result<Report> {
    if !SUITES.contains(&suite) {
        return Err(AwgError::InvalidArgument(format!(
            "unknown suite {suite}; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let reg = registry();
    let chosen: Vec<&CheckSpec> = reg.iter().filter(|c| c.suite == suite).collect();
    Ok(run_specs(ctx, &chosen))
}

/// Runs every registered check.
pub fn run_all(ctx: &VerifyContext) -> Report {
    let reg = registry();
    let chosen: Vec<&CheckSpec> = reg.iter().collect();
    run_specs(ctx, &chosen)
}

fn run_specs(ctx: &VerifyContext, specs: &[&CheckSpec]) -> Report {
    let mut checks = ctx.exec.map(specs, |s| run_check(s, ctx));
    checks.sort_by(|a, b| (&a.suite, &a.name).cmp(&(&b.suite, &b.name)));
    Report { config: ctx.cfg, checks }
}

/// A sorted list of check outcomes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: VerifyConfig,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    /// Whether every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The outcome of `suite/name`, if it ran.
    pub fn get(&self, suite: &str, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.suite == suite && c.name == name)
    }

    /// Plain text: one line per check, then its certificates indented.
    pub fn render_text(&self) -> String {
        let mut s = format!(
            "verify rank={} maxlen={} seed={}\n",
            self.config.rank, self.config.maxlen, self.config.seed
        );
        for c in &self.checks {
            s.push_str(&format!(
                "{} {}/{} checked={} unverified={} failures={}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                c.checked,
                c.unverified,
                c.failure_count
            ));
            for f in &c.failures {
                s.push_str(&format!("    {f}\n"));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        s.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        s
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let reg = registry();
        for w in reg.windows(2) {
            assert!((w[0].suite, w[0].name) < (w[1].suite, w[1].name));
        }
        for s in SUITES {
            assert!(reg.iter().any(|c| c.suite == s));
        }
        assert!(reg.iter().all(|c| SUITES.contains(&c.suite) && !c.description.is_empty()));
    }

    #[test]
    fn groups_cover_type_d_at_rank_two() {
        assert_eq!(
            groups_up_to(2),
            vec![(WeylType::A, 2), (WeylType::B, 2), (WeylType::C, 2), (WeylType::D, 3)]
        );
    }
}
