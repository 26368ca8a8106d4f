use thiserror::Error;

/// Errors raised by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{a} is not a unit modulo {modulus}")]
    NotUnit { a: i64, modulus: u64 },
    #[error("prime {p} does not divide modulus {modulus}")]
    PrimeNotDivisor { p: u64, modulus: u64 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("expected {expected} values for modulus {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("modulus {modulus} exceeds the configured cap {cap}")]
    ModulusTooLarge { modulus: u64, cap: u64 },
    #[error("function has nonzero mean; L(s,f) has a pole at s = 1 with residue {residue}")]
    Pole { residue: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("residue {r} is out of range 1..={modulus}")]
    ResidueOutOfRange { r: u64, modulus: u64 },
    #[error("function is not supported on units modulo {0}")]
    NotUnitSupported(u64),
    #[error("Fourier data does not invert to a rational function")]
    NonRationalInverse,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precision cap of {0} bits reached before the result was certified")]
    PrecisionExhausted(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
