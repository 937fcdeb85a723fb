//! The counterexample family to the low-dimension degree conjecture: the
//! reduced basis of a three-generator ideal in four variables contains an
//! element of degree t^2 + 1, and restricting away the last variable yields
//! a dimension-one ideal that is not in quasi stable position.
//!
//! Run with: cargo run --example lazard_counterexample

use stablegb::bounds::{bound, BoundParams, Formula};
use stablegb::groebner::{buchberger, BuchbergerOptions};
use stablegb::ring::{format_polynomial, format_term, parse_ideal};

fn main() {
    for t in [2u32, 3, 4] {
        let text = format!(
            "ring: x1 x2 x3 x4\n\
             x1*x2^{} - x3^{}\n\
             x1^{} - x2*x3^{}*x4\n\
             x1^{}*x3 - x2^{}*x4\n",
            t - 1,
            t,
            t + 1,
            t - 1,
            t,
            t
        );
        let (ctx, gens) = parse_ideal(&text).unwrap();
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        println!(
            "t = {t}: deg(I,<) = {} (generator degrees {}, {}, {})",
            gb.max_degree(),
            t,
            t + 1,
            t + 1
        );
        let witness = format!("x3^{} - x2^{}*x4", t * t + 1, t * t);
        let found = gb
            .generators()
            .iter()
            .any(|g| format_polynomial(&ctx, g) == witness);
        println!("  contains {witness}: {found}");

        if t == 4 {
            println!("  leading ideal:");
            for m in gb.leading_ideal().generators() {
                println!("    {}", format_term(&ctx, m));
            }
            let lt = gb.leading_ideal();
            println!("  dim(I) = {} -- too large for the low-dimension bound", lt.dimension());
            let degree_bound = bound(
                Formula::lazard,
                &BoundParams {
                    n: 4,
                    d: t + 1,
                    dim: None,
                    depth: Some(0),
                    degrees: Some(vec![t, t + 1, t + 1]),
                },
            )
            .unwrap();
            println!(
                "  deg(I,<) = {} > {} = degree-sum bound",
                gb.max_degree(),
                degree_bound.display()
            );

            // set x4 = 0: same leading terms, dimension drops to 1, but no
            // pure power of x2 exists, so quasi stability fails
            let restricted = gb.restrict_last(1);
            let rlt = restricted.leading_ideal();
            println!("  restriction: dim = {}", rlt.dimension());
            match rlt.quasi_stable_witness() {
                Some((gen, _, blocked)) => println!(
                    "  restriction is not quasi stable: {} lacks a power of x{}",
                    format_term(&ctx.restricted(1), &gen),
                    blocked + 1
                ),
                None => println!("  restriction is quasi stable"),
            }
        }
    }
}
