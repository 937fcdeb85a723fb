//! Exact evaluation of all degree/regularity bounds and the pairwise
//! comparisons showing that no single bound always wins.
//!
//! Run with: cargo run --example degree_bounds

use stablegb::bounds::{bound, compare_bounds, BoundParams, Formula, DEFAULT_BIT_CAP};

fn params(n: usize, d: u32, dim: usize) -> BoundParams {
    BoundParams {
        n,
        d,
        dim: Some(dim),
        depth: None,
        degrees: None,
    }
}

fn main() {
    println!("all bounds at n=5, d=4, D=2, depth=0:");
    let table = compare_bounds(
        &BoundParams {
            n: 5,
            d: 4,
            dim: Some(2),
            depth: Some(0),
            degrees: Some(vec![4, 4, 4]),
        },
        DEFAULT_BIT_CAP,
    );
    for b in &table {
        println!("  {:<16} {}", b.formula.id(), b.display());
    }

    println!("\npairwise comparisons (exact):");
    let pairs = [
        (Formula::hs_A, Formula::hs_C, 5, 3, 4),
        (Formula::hs_A, Formula::mayr_ritscher, 5, 2, 4),
        (Formula::hs_A, Formula::mayr_ritscher, 5, 4, 2),
        (Formula::mayr_ritscher, Formula::hs_C, 5, 2, 3),
        (Formula::hs_A, Formula::hs_C, 3, 5, 2),
        (Formula::mayr_ritscher, Formula::hs_C, 4, 5, 1),
    ];
    for (f1, f2, n, d, dim) in pairs {
        let a = bound(f1, &params(n, d, dim)).unwrap();
        let b = bound(f2, &params(n, d, dim)).unwrap();
        let rel = match a.magnitude.compare(&b.magnitude, DEFAULT_BIT_CAP) {
            std::cmp::Ordering::Less => "<",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">",
        };
        println!(
            "  {}({n},{d},{dim}) = {} {rel} {} = {}({n},{d},{dim})",
            f1.id(),
            a.display(),
            b.display(),
            f2.id(),
        );
    }

    // gigantic values stay symbolic past the materialization cap
    let huge = bound(Formula::moller_mora, &params(6, 4, 0)).unwrap();
    println!("\nmoller_mora(6, 4) = {} (symbolic past the bit cap)", huge.display());
}
