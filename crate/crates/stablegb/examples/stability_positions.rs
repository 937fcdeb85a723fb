//! Stability positions of leading ideals, and verified random coordinate
//! transformations that reach them.
//!
//! Run with: cargo run --example stability_positions

use stablegb::groebner::{buchberger, BuchbergerOptions};
use stablegb::harness::{transform_to_position, TargetPosition, TransformOptions};
use stablegb::ring::{format_polynomial, parse_ideal};

fn main() {
    let (ctx, gens) = parse_ideal("ring: x1 x2\nx1*x2\n").unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    let lt = gb.leading_ideal();
    println!("ideal <x1*x2>:");
    println!("  quasi stable:    {}", lt.is_quasi_stable());
    println!("  stable:          {}", lt.is_stable());
    println!("  strongly stable: {}", lt.is_strongly_stable());
    println!("  Noether:         {}", lt.is_noether_position());
    println!("  dimension:       {}", lt.dimension());

    // one generic change of coordinates reaches quasi stable position
    let (change, transformed) =
        transform_to_position(&gens, TargetPosition::QuasiStable, 1, &TransformOptions::default())
            .unwrap();
    println!("\nafter a change of coordinates ({} retries):", transformed.retries);
    for g in &transformed.generators {
        println!("  {}", format_polynomial(&ctx, g));
    }
    let lt = transformed.groebner_basis.leading_ideal();
    println!("  quasi stable now: {}", lt.is_quasi_stable());
    println!("  change matrix is identity: {}", change.is_identity());

    // strongly stable position is also reachable generically
    let (_, strong) = transform_to_position(
        &gens,
        TargetPosition::StronglyStable,
        1,
        &TransformOptions::default(),
    )
    .unwrap();
    let lt = strong.groebner_basis.leading_ideal();
    println!("\nstrongly stable target:");
    println!("  strongly stable: {}", lt.is_strongly_stable());
    for i in 0..2 {
        println!("  deg_{}(LT) = {}", ctx.name(i), lt.variable_degree(i));
    }
}
