//! Running the structural checks over the fixture families and a small
//! seeded corpus.

use excess::harness::{
    builtin_checks, default_fixtures, generate_corpus, run_suite, suite_items, CheckMode,
    CorpusSpec,
};

fn main() {
    let checks = builtin_checks();
    println!("{} built-in checks:", checks.len());
    for c in &checks {
        let mode = match c.mode {
            CheckMode::Assert => "assert ",
            CheckMode::Observe => "observe",
        };
        println!("  {mode} {:18} {}", c.id, c.statement);
    }

    // The deterministic fixtures plus a small random corpus.
    let mut items = suite_items(&default_fixtures().unwrap());
    let spec = CorpusSpec::new(0xFEED, 150);
    let (members, log) = generate_corpus(&spec).unwrap();
    println!(
        "\ncorpus: {} members (attempts {}, dimension rejections {}, vertex rejections {})",
        members.len(),
        log.attempts,
        log.rejected_dim,
        log.rejected_vertices
    );
    items.extend(suite_items(&members));

    let report = run_suite(&items, &checks).unwrap();
    println!("\nfingerprint {}", report.corpus_fingerprint);
    for c in &report.checks {
        println!(
            "  {:18} pass={:<5} fail={:<5} vacuous={}",
            c.id, c.pass, c.fail, c.vacuous
        );
        for detail in &c.failure_details {
            println!("      witness: {detail}");
        }
    }
    println!(
        "\nsuite: {}   (must-hit checks vacuous: {:?})",
        if report.failed() { "FAIL" } else { "PASS" },
        report.vacuous_must_hits()
    );
}
