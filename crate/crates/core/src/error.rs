use thiserror::Error;

use crate::eint::EInt;

/// Errors produced by the arithmetic kernel and the modules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coordinate or intermediate value left the fixed-width range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    /// The operation is undefined on zero (factorization, totient, moduli).
    #[error("{0} is not defined for zero")]
    ZeroInput(&'static str),

    #[error("{0} is not an Eisenstein prime")]
    NotPrime(EInt),

    #[error("{0} is not a split prime (norm must be a rational prime q = 1 mod 3)")]
    WrongCategory(EInt),

    #[error("{0} is not a rational prime congruent to 1 mod 3")]
    NotSplittable(u128),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: EInt, modulus: EInt },

    #[error("{0} and {1} are not coprime")]
    NotCoprime(EInt, EInt),

    #[error("trial division bound {bound} exhausted while factoring {n}")]
    FactorBoundExceeded { n: u128, bound: u64 },

    #[error("norm {norm} exceeds the enumeration bound {bound}")]
    EnumerationBound { norm: u128, bound: u128 },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
