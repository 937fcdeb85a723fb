//! Gröbner and Pommaret bases of homogeneous polynomial ideals over Q,
//! combinatorial genericity positions (quasi/strongly stable), ideal
//! invariants (dimension, depth, Hilbert data, regularity) and exact
//! evaluation of the classical degree bounds, with a verification harness.
//!
//! Everything is computed in exact rational arithmetic; all randomness is
//! seeded. See the `examples/` directory for one runnable example per major
//! capability, or the `stablegb` binary for the batch interface.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod fset;
pub mod groebner;
pub mod harness;
pub mod invariants;
pub mod pommaret;
pub mod ring;
pub mod stability;

pub use error::{Error, Result};
pub use ring::{Coeff, LinearChange, Polynomial, RingContext, Term};
