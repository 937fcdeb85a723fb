//! The combinatorial sets F(I) and the historical variant F~(I): the
//! monomial ideal <x1^2, x2^11*x1> shows the variant's inequalities fail
//! while the corrected ones hold.
//!
//! Run with: cargo run --example mora_sets

use stablegb::fset::{f_set, f_tilde_set, lemma_mora_check, mora_variant_check};
use stablegb::groebner::{buchberger, BuchbergerOptions};
use stablegb::ring::{format_term, parse_ideal};

fn main() {
    let (ctx, gens) = parse_ideal("ring: x1 x2\nx1^2\nx2^11*x1\n").unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    println!("deg(I,<) = {}", gb.max_degree());

    let report = f_set(&gb).unwrap();
    println!("#F(I) = {}", report.f_size());
    for level in &report.levels {
        println!(
            "  level with {} vars: dim {}, deg {}, #F = {}",
            level.nvars, level.dimension, level.max_gb_degree, level.f_size
        );
    }

    let restricted = gb.restrict_last(1);
    let inner = f_set(&restricted).unwrap();
    let names: Vec<String> = inner
        .f
        .iter()
        .map(|t| format_term(&ctx.restricted(1), t))
        .collect();
    println!("F(I_2) = {{{}}}", names.join(", "));

    let tilde = f_tilde_set(&gb);
    println!("#F~(I) = {} (variant set, reproduced only to show the failure)", tilde.len());

    let variant = mora_variant_check(&gb).unwrap();
    println!(
        "\nvariant (a): {} <= {}  -> {}",
        variant.degree_lhs, variant.degree_rhs, variant.degree_holds
    );
    println!(
        "variant (b): {} <= {}  -> {}",
        variant.count_lhs, variant.count_rhs, variant.count_holds
    );

    let corrected = lemma_mora_check(&gb, 12).unwrap();
    println!(
        "corrected (a): {} <= {}  -> {}",
        corrected.degree_lhs, corrected.degree_rhs, corrected.degree_holds
    );
    println!(
        "corrected (b): {} <= {}  -> {}",
        corrected.count_lhs, corrected.count_rhs, corrected.count_holds
    );
}
