//! Structural checks on a character expected to be `chi_q(V_{omega_i}(q^a))`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::analysis::{build_graph, expected_lowest, lowest_monomial_check};
use crate::character::QCharacter;
use crate::monomial::{factor_over_a, YMonomial};
use crate::rootdata::RootData;
use crate::screening::residuals;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Node and shift of the highest monomial when it is some `Y_{i,a}`.
    pub fundamental: Option<(usize, i32)>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, passed, detail: detail.into() });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<16} {}  {}", c.name, if c.passed { "ok" } else { "FAIL" }, c.detail)?;
        }
        Ok(())
    }
}

pub const CHECK_NAMES: [&str; 7] = [
    "kernel",
    "unique_dominant",
    "right_negative",
    "support_window",
    "lowest_monomial",
    "factorization",
    "graph_connected",
];

/// Picks the highest monomial: the unique term of maximal weight, if any.
fn highest_monomial(rd: &RootData, chi: &QCharacter) -> Option<YMonomial> {
    let top = chi.highest_terms(rd);
    (top.len() == 1).then(|| top[0].0.clone())
}

fn as_fundamental(m: &YMonomial) -> Option<(usize, i32)> {
    match m.factors() {
        [f] if f.exp == 1 => Some((f.node, f.shift)),
        _ => None,
    }
}

/// Runs every check. Fundamental-specific checks fail when the highest
/// monomial is not a single `Y_{i,a}`.
pub fn verify_character(rd: &RootData, chi: &QCharacter) -> VerificationReport {
    let mut report = VerificationReport::default();

    let res = residuals(rd, chi);
    let bad: Vec<String> = res
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| format!("S_{}: {} residual terms", r.node, r.residual_terms()))
        .collect();
    report.push(
        "kernel",
        bad.is_empty(),
        if bad.is_empty() { format!("{} operators", res.len()) } else { bad.join(", ") },
    );

    let seed = highest_monomial(rd, chi);
    let fundamental = seed.as_ref().and_then(as_fundamental);
    report.fundamental = fundamental;

    let dominant = chi.dominant_monomials();
    let unique = match &seed {
        Some(s) => dominant.len() == 1 && dominant[0] == (s.clone(), BigUint::from(1u32)),
        None => false,
    };
    report.push("unique_dominant", unique, format!("{} dominant monomials", dominant.len()));

    let Some((i, a)) = fundamental else {
        let why = "highest monomial is not a single Y_{i,a}";
        for name in ["right_negative", "support_window", "lowest_monomial"] {
            report.push(name, false, why);
        }
        push_factorization_and_graph(rd, chi, seed.as_ref(), &mut report);
        return report;
    };
    let seed = seed.expect("fundamental implies a seed");
    let normalized = chi.shifted(-a);
    let seed0 = YMonomial::y(i, 0);

    let min_right = 2 * rd.r(i);
    let offenders = normalized
        .monomials()
        .filter(|m| **m != seed0)
        .filter(|m| !m.is_right_negative() || m.max_shift().is_some_and(|s| s < min_right))
        .count();
    report.push(
        "right_negative",
        offenders == 0,
        format!("{offenders} offending monomials (rightmost shift must be >= {})", a + min_right),
    );

    let rh = rd.rh();
    let outside = normalized
        .monomials()
        .filter(|m| m.min_shift().is_some_and(|s| s < 0) || m.max_shift().is_some_and(|s| s > rh))
        .count();
    let zero_touch = normalized
        .monomials()
        .filter(|m| **m != seed0 && m.factors().iter().any(|f| f.shift == 0))
        .count();
    report.push(
        "support_window",
        outside == 0 && zero_touch == 0,
        format!(
            "window [{a}, {}]: {outside} outside, {zero_touch} non-highest touching {a}",
            a + rh
        ),
    );

    let low_ok = lowest_monomial_check(rd, i, &normalized);
    report.push(
        "lowest_monomial",
        low_ok,
        format!("expected {}", expected_lowest(rd, i).shifted(a)),
    );

    push_factorization_and_graph(rd, chi, Some(&seed), &mut report);
    report
}

fn push_factorization_and_graph(rd: &RootData, chi: &QCharacter, seed: Option<&YMonomial>, report: &mut VerificationReport) {
    match seed {
        Some(seed) => {
            let failures = chi.monomials().filter(|m| factor_over_a(rd, seed, m).is_none()).count();
            report.push("factorization", failures == 0, format!("{failures} monomials without factorization"));
            let g = build_graph(rd, chi);
            let ok = g.is_connected() && g.is_reachable_from(seed);
            report.push(
                "graph_connected",
                ok,
                format!("{} vertices, {} edges", g.vertices.len(), g.edges.len()),
            );
        }
        None => {
            report.push("factorization", false, "no unique highest monomial");
            report.push("graph_connected", false, "no unique highest monomial");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{fundamental_seed, run, Limits};
    use crate::rootdata::LieType;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn computed_a2_passes() {
        let a2 = RootData::new(LieType::A, 2).unwrap();
        let chi = run(&a2, &fundamental_seed(1), Limits::default()).unwrap();
        let report = verify_character(&a2, &chi);
        assert!(report.passed(), "{report}");
        assert_eq!(report.fundamental, Some((1, 0)));
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES);
        let shifted = verify_character(&a2, &chi.shifted(5));
        assert!(shifted.passed(), "{shifted}");
        assert_eq!(shifted.fundamental, Some((1, 5)));
    }

    #[test]
    fn lone_monomial_fails_kernel() {
        let a2 = RootData::new(LieType::A, 2).unwrap();
        let report = verify_character(&a2, &QCharacter::from_monomial(m("Y{1,0}")));
        assert!(!report.check("kernel").unwrap().passed);
        assert!(!report.passed());
    }

    #[test]
    fn tampering_is_detected() {
        let b2 = RootData::new(LieType::B, 2).unwrap();
        let chi = run(&b2, &fundamental_seed(1), Limits::default()).unwrap();
        let (victim, _) = chi.terms().nth(2).map(|(a, b)| (a.clone(), b.clone())).unwrap();
        let tampered = chi.add(&QCharacter::from_monomial(victim));
        let report = verify_character(&b2, &tampered);
        assert!(!report.check("kernel").unwrap().passed);
    }

    #[test]
    fn non_fundamental_highest() {
        let a1 = RootData::new(LieType::A, 1).unwrap();
        let chi = run(&a1, &m("Y{1,0} * Y{1,2}"), Limits::default()).unwrap();
        let report = verify_character(&a1, &chi);
        assert!(report.check("kernel").unwrap().passed);
        assert!(!report.check("right_negative").unwrap().passed);
        assert!(report.check("factorization").unwrap().passed);
        assert_eq!(report.fundamental, None);
    }
}
