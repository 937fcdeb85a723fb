//! Reduced Gröbner bases under degrevlex: full runs, the per-degree trace,
//! early termination on strongly stable leading ideals, and truncation.
//!
//! Run with: cargo run --example groebner_basis

use stablegb::groebner::{buchberger, truncated_gb, BuchbergerOptions};
use stablegb::ring::{format_polynomial, format_term, parse_ideal};

fn main() {
    let (ctx, gens) = parse_ideal(
        "ring: x1 x2 x3\n\
         x1*x3\n\
         x1*x2 + x2^2\n\
         x1^2\n",
    )
    .unwrap();

    let (gb, trace) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    println!("reduced Gröbner basis, deg(I,<) = {}:", gb.max_degree());
    for g in gb.generators() {
        println!("  {}", format_polynomial(&ctx, g));
    }
    println!("\nleading ideal:");
    for t in gb.leading_ideal().generators() {
        println!("  {}", format_term(&ctx, t));
    }
    println!("\npair trace (degree: treated / new):");
    for entry in &trace.per_degree {
        println!(
            "  {}: {} / {}",
            entry.degree, entry.pairs_treated, entry.new_generators
        );
    }

    // the leading ideal is strongly stable, so the run may stop as soon as a
    // full degree beyond the basis degree stays quiet
    let options = BuchbergerOptions {
        early_stop_if_stable: true,
        ..Default::default()
    };
    let (early, trace) = buchberger(&gens, &options).unwrap();
    assert_eq!(early.generators(), gb.generators());
    println!(
        "\nearly-stop run stops at degree {:?} with the identical basis",
        trace.early_stop_degree
    );

    // truncation: treat S-polynomials up to degree t only
    for t in [2, 3] {
        let truncated = truncated_gb(&gens, t).unwrap();
        println!(
            "\ntruncated at degree {t} (certified: {}):",
            truncated.certified
        );
        for g in &truncated.elements {
            println!("  {}", format_polynomial(&ctx, g));
        }
    }
}
