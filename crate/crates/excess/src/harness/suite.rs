//! Suite evaluation: every check against every corpus member, with
//! order-insensitive tallies and a corpus fingerprint.

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::checks::{CheckMode, CheckOutcome, TheoremCheck};
use super::corpus::CorpusMember;
use super::Analyzer;
use crate::error::Result;
use crate::polytope::IncidencePolytope;

/// One suite input: a polytope and the label used in reports — the
/// construction expression when there is one, otherwise e.g. a file name.
#[derive(Clone)]
pub struct SuiteItem {
    pub label: String,
    pub polytope: IncidencePolytope,
}

impl From<&CorpusMember> for SuiteItem {
    fn from(m: &CorpusMember) -> Self {
        SuiteItem {
            label: m.provenance(),
            polytope: m.polytope.clone(),
        }
    }
}

pub fn suite_items(members: &[CorpusMember]) -> Vec<SuiteItem> {
    members.iter().map(SuiteItem::from).collect()
}

#[derive(Serialize)]
pub struct CheckReport {
    pub id: String,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    /// Labels (provenance expressions) of failing members, sorted.
    pub witnesses: Vec<String>,
    #[serde(skip)]
    pub mode: CheckMode,
    #[serde(skip)]
    pub must_hit: bool,
    #[serde(skip)]
    pub failure_details: Vec<String>,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub corpus_fingerprint: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    /// True when an assert-mode check failed on some member. Observe-mode
    /// outcomes never fail a suite.
    pub fn failed(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.mode == CheckMode::Assert && c.fail > 0)
    }

    /// Must-hit checks whose hypotheses were never instantiated. The default
    /// suite treats a non-empty answer as a coverage failure.
    pub fn vacuous_must_hits(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.must_hit && c.pass == 0 && c.fail == 0)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }
}

/// SHA-256 over the newline-joined label list, as lowercase hex.
pub fn corpus_fingerprint(items: &[SuiteItem]) -> String {
    let joined: Vec<&str> = items.iter().map(|m| m.label.as_str()).collect();
    let digest = Sha256::digest(joined.join("\n").as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Evaluates `checks` on every item. Tallies are commutative and the witness
/// lists are sorted, so the report does not depend on evaluation order.
pub fn run_suite(items: &[SuiteItem], checks: &[TheoremCheck]) -> Result<SuiteReport> {
    let mut analyzer = Analyzer::new();
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|c| CheckReport {
            id: c.id.to_string(),
            pass: 0,
            fail: 0,
            vacuous: 0,
            witnesses: Vec::new(),
            mode: c.mode,
            must_hit: c.must_hit,
            failure_details: Vec::new(),
        })
        .collect();
    for item in items {
        let analysis = analyzer.analyze(&item.polytope)?;
        for (check, report) in checks.iter().zip(reports.iter_mut()) {
            match check.evaluate(&analysis) {
                CheckOutcome::Pass => report.pass += 1,
                CheckOutcome::Vacuous => report.vacuous += 1,
                CheckOutcome::Fail(reason) => {
                    report.fail += 1;
                    report.witnesses.push(item.label.clone());
                    report
                        .failure_details
                        .push(format!("{}: {reason}", item.label));
                }
            }
        }
    }
    for report in &mut reports {
        report.witnesses.sort();
        report.failure_details.sort();
    }
    Ok(SuiteReport {
        corpus_fingerprint: corpus_fingerprint(items),
        checks: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{builtin_checks, default_fixtures, generate_corpus, CorpusSpec};

    #[test]
    fn empty_corpus_all_zero() {
        let report = run_suite(&[], &builtin_checks()).unwrap();
        assert!(report
            .checks
            .iter()
            .all(|c| c.pass == 0 && c.fail == 0 && c.vacuous == 0));
        assert!(!report.failed());
        assert!(!report.vacuous_must_hits().is_empty());
    }

    #[test]
    fn fixtures_have_zero_failures_and_cover_must_hits() {
        let fixtures = default_fixtures().unwrap();
        let report = run_suite(&suite_items(&fixtures), &builtin_checks()).unwrap();
        for c in &report.checks {
            if c.mode == CheckMode::Assert {
                assert_eq!(c.fail, 0, "{}: {:?}", c.id, c.failure_details);
            }
        }
        assert!(!report.failed());
        assert!(report.vacuous_must_hits().is_empty());
    }

    #[test]
    fn tallies_sum_to_corpus_size() {
        let (members, _) = generate_corpus(&CorpusSpec::new(5, 30)).unwrap();
        let report = run_suite(&suite_items(&members), &builtin_checks()).unwrap();
        for c in &report.checks {
            assert_eq!(c.pass + c.fail + c.vacuous, members.len(), "{}", c.id);
        }
    }

    #[test]
    fn fingerprints_are_stable() {
        let (a, _) = generate_corpus(&CorpusSpec::new(7, 20)).unwrap();
        let (b, _) = generate_corpus(&CorpusSpec::new(7, 20)).unwrap();
        assert_eq!(
            corpus_fingerprint(&suite_items(&a)),
            corpus_fingerprint(&suite_items(&b))
        );
        let (c, _) = generate_corpus(&CorpusSpec::new(8, 20)).unwrap();
        assert_ne!(
            corpus_fingerprint(&suite_items(&a)),
            corpus_fingerprint(&suite_items(&c))
        );
    }
}
