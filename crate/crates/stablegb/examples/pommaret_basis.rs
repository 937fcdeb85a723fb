//! Pommaret division and involutive completion: classes, multiplicative
//! variables, the cone decomposition, and regularity/depth read off the
//! basis.
//!
//! Run with: cargo run --example pommaret_basis

use stablegb::groebner::{buchberger, BuchbergerOptions};
use stablegb::pommaret::{involutive_normal_form, pommaret_completion, CompletionResult};
use stablegb::ring::{format_polynomial, parse_ideal};

fn main() {
    let (ctx, gens) = parse_ideal(
        "ring: x1 x2\n\
         x1^2\n\
         x1*x2 + x2^2\n",
    )
    .unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();

    match pommaret_completion(&gb, 64).unwrap() {
        CompletionResult::Complete(basis) => {
            println!("Pommaret basis:");
            for e in basis.elements() {
                let mult: Vec<&str> = e
                    .multiplicative(basis.nvars())
                    .into_iter()
                    .map(|v| ctx.name(v))
                    .collect();
                println!(
                    "  {}  class {}  multiplicative {{{}}}",
                    format_polynomial(&ctx, &e.polynomial),
                    e.class + 1,
                    mult.join(", ")
                );
            }
            println!("regularity = {}", basis.regularity());
            println!("depth      = {}", basis.depth());

            // involutive normal forms of ideal members vanish
            for g in gb.generators() {
                assert!(involutive_normal_form(g, &basis).is_zero());
            }
            println!("all basis generators reduce involutively to zero");
        }
        CompletionResult::NotQuasiStable { generator, blocked_var, .. } => {
            println!(
                "no finite basis: {generator:?} blocks variable {}",
                ctx.name(blocked_var)
            );
        }
    }

    // an ideal without a finite Pommaret basis: no pure power of x2 exists
    let (ctx, gens) = parse_ideal("ring: x1 x2 x3\nx1*x2^3 - x3^4\nx1^5\nx1^4*x3\n").unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    match pommaret_completion(&gb, 64).unwrap() {
        CompletionResult::NotQuasiStable { generator, removed_var, blocked_var } => {
            println!(
                "\nrestricted ideal is not quasi stable: generator {} admits no power of {} after removing {}",
                stablegb::ring::format_term(&ctx, &generator),
                ctx.name(blocked_var),
                ctx.name(removed_var)
            );
        }
        CompletionResult::Complete(_) => unreachable!(),
    }
}
