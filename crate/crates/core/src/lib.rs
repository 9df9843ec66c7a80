//! Exact arithmetic in the Eisenstein integers Z[ρ], ρ² = −1 − ρ.
//!
//! Elements are written `a + bρ` with `i64` coordinates; every operation
//! either returns an exact result or reports overflow.

pub mod eint;
pub mod error;
pub mod euclid;
pub mod integer;
pub mod literal;
pub mod primes;
pub mod residues;
pub mod totient;
pub mod groups;
pub mod render;
pub mod cli;

pub use eint::{EInt, Parity, Unit};
pub use error::{Error, Result};
