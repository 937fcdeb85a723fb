//! Hilbert function, series, polynomial and regularity, plus the Hilbert
//! series criterion for regular sequences.
//!
//! Run with: cargo run --example hilbert_data

use stablegb::groebner::{buchberger, BuchbergerOptions};
use stablegb::invariants::{
    hilbert_function, hilbert_series, is_regular_sequence, is_regular_sequence_by_dimension,
};
use stablegb::ring::parse_ideal;

fn main() {
    let (_, gens) = parse_ideal(
        "ring: x1 x2 x3\n\
         x1*x3\n\
         x1*x2 + x2^2\n\
         x1^2\n",
    )
    .unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    let lt = gb.leading_ideal();
    let data = hilbert_series(&lt).unwrap();

    let numerator: Vec<String> = data
        .numerator()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num::Zero::is_zero(*c))
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{i}"),
        })
        .collect();
    println!("HS(t) = ({}) / (1-t)^{}", numerator.join(" + "), data.pole_order());
    println!("pole order (= dimension): {}", data.pole_order());
    println!("Hilbert regularity: {}", data.hilb());
    print!("HF: ");
    for t in 0..8 {
        print!("{} ", data.hf(t));
    }
    println!();

    // the series route agrees with direct standard-monomial counting
    for t in 0..8u32 {
        assert_eq!(data.hf(t), hilbert_function(&lt, t));
    }
    println!("series route matches degreewise enumeration");

    // Hilbert polynomial: from the regularity on, HF(t) = HP(t)
    for t in data.hilb()..data.hilb() + 3 {
        println!("HF({t}) = {}  HP({t}) = {}", data.hf(t), data.hp(t));
    }

    // regular sequences by the series criterion and by dimension
    let (_, pure) = parse_ideal("ring: x1 x2\nx1^3\nx2^2\n").unwrap();
    println!(
        "\nx1^3, x2^2 regular sequence: {} (series), {} (dimension)",
        is_regular_sequence(&pure).unwrap(),
        is_regular_sequence_by_dimension(&pure).unwrap()
    );
    let (_, not) = parse_ideal("ring: x1 x2\nx1\nx1*x2\n").unwrap();
    println!(
        "x1, x1*x2 regular sequence:  {} (series), {} (dimension)",
        is_regular_sequence(&not).unwrap(),
        is_regular_sequence_by_dimension(&not).unwrap()
    );
}
