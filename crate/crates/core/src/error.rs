use num_complex::Complex64;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural precondition was violated (wrong constant term, bad order, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Bracketing failed: no sign change over the search interval.
    #[error("no root: F({lo:e}) = {f_lo:e} and F({hi:e}) = {f_hi:e} have the same sign")]
    NoRoot { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A function produced NaN or infinity where a finite value was required.
    #[error("non-finite evaluation at {at:e}")]
    NonFinite { at: f64 },

    /// The dilatation left the open unit disk at a queried point.
    #[error("dilatation violation: |omega({at})| = {modulus} >= 1")]
    DilatationViolation { at: Complex64, modulus: f64 },

    /// Two maps that must share a dilatation do not.
    #[error("dilatation mismatch: |omega1 - omega2| = {deviation:e} at {at}")]
    DilatationMismatch { at: Complex64, deviation: f64 },

    /// A Jacobian sample came out negative on a supposedly sense-preserving map.
    #[error("sense preservation violated: Jacobian = {value:e} at {at}")]
    SensePreservation { at: Complex64, value: f64 },

    /// A denominator of the (pre-)Schwarzian vanished.
    #[error("pole: {0}")]
    Pole(String),

    /// A truncated series was too short for the requested tolerance.
    #[error("truncation: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
