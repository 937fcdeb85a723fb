//! The verification harness: every applicable degree-bound theorem checked
//! on a single ideal, then on a small seeded random corpus in verified
//! stability positions.
//!
//! Run with: cargo run --release --example theorem_verification

use stablegb::harness::{verify_corpus, verify_theorems, CorpusSpec, TargetPosition};
use stablegb::ring::parse_ideal;

fn main() {
    let (_, gens) = parse_ideal(
        "ring: x1 x2 x3\n\
         x1*x3\n\
         x1*x2 + x2^2\n\
         x1^2\n",
    )
    .unwrap();
    let report = verify_theorems(&gens, "example", 0).unwrap();
    println!(
        "ideal `{}`: deg(I,<) = {}, dim = {}, reg = {:?}, depth = {:?}",
        report.ideal, report.max_gb_degree, report.dimension, report.regularity, report.depth
    );
    for check in &report.checks {
        match (check.applicable, check.holds) {
            (false, _) => println!("  skip {:<24} {}", check.id, check.reason.as_deref().unwrap_or("")),
            (true, Some(true)) => println!(
                "  pass {:<24} {} vs {}",
                check.id,
                check.lhs.as_deref().unwrap_or(""),
                check.rhs.as_deref().unwrap_or("")
            ),
            _ => println!("  FAIL {:<24}", check.id),
        }
    }
    assert!(report.all_applicable_hold());

    // a seeded corpus: all applicable checks must hold on every member
    for target in [TargetPosition::QuasiStable, TargetPosition::StronglyStable] {
        let spec = CorpusSpec {
            count: 25,
            max_vars: 4,
            max_degree: 4,
            max_generators: 4,
            seed: 11,
            target,
        };
        let summary = verify_corpus(&spec).unwrap();
        println!(
            "\ncorpus ({}): {} members, {} failures, dimensions exercised {:?}",
            target.name(),
            summary.members,
            summary.failures.len(),
            summary.dimensions_exercised
        );
        assert!(summary.all_passed());
    }
}
