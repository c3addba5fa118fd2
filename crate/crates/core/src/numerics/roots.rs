//! Guaranteed bracketed root finding for increasing functions on (0, 1).

use crate::{Error, Result};

/// Default bracket endpoints.  Every radius equation in this crate is
/// negative at 0⁺ and diverges to +∞ at 1⁻, so a sign change is guaranteed
/// strictly inside.
pub const BRACKET_LO: f64 = 1e-12;
pub const BRACKET_HI: f64 = 1.0 - 1e-9;

/// A solved radius.
#[derive(Clone, Copy, Debug)]
pub struct RootResult {
    /// Root location in (0, 1).
    pub value: f64,
    /// Final bracket, `bracket_lo < value < bracket_hi`.
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Equation value at `value` (log-domain for the Bohr equations).
    pub residual: f64,
    pub iterations: u32,
}

/// Finds the root of a continuous function with a single sign change on
/// (0, 1), `F < 0` below the root and `F > 0` above.
///
/// Bisection narrows the clamped bracket `[1e-12, 1 − 1e-9]` until both the
/// bracket width and `|F(midpoint)|` are inside tolerance, then a
/// safeguarded secant step polishes the result without leaving the bracket.
pub fn find_root_increasing<F>(f: F, tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let eval = |r: f64| -> Result<f64> {
        let v = f(r)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { at: r });
        }
        Ok(v)
    };

    let mut lo = BRACKET_LO;
    let mut hi = BRACKET_HI;
    let mut f_lo = eval(lo)?;
    let mut f_hi = eval(hi)?;
    if f_lo > 0.0 || f_hi < 0.0 {
        return Err(Error::NoRoot { lo, hi, f_lo, f_hi });
    }
    if f_lo == 0.0 {
        return Ok(RootResult { value: lo, bracket_lo: lo, bracket_hi: lo + tol, residual: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(RootResult { value: hi, bracket_lo: hi - tol, bracket_hi: hi, residual: 0.0, iterations: 0 });
    }

    let width_goal = tol.clamp(4.0 * f64::EPSILON, 1e-13);
    let mut iterations = 0u32;
    let mut mid = 0.5 * (lo + hi);
    let mut f_mid = eval(mid)?;
    while hi - lo > width_goal && iterations < 200 {
        if f_mid == 0.0 {
            break;
        }
        if f_mid < 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        mid = 0.5 * (lo + hi);
        f_mid = eval(mid)?;
        iterations += 1;
    }

    // Secant polish inside the final bracket.
    let mut value = mid;
    let mut residual = f_mid;
    if f_hi != f_lo {
        let secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if secant > lo && secant < hi {
            let f_secant = eval(secant)?;
            if f_secant.abs() < residual.abs() {
                value = secant;
                residual = f_secant;
            }
        }
    }

    Ok(RootResult {
        value,
        bracket_lo: lo,
        bracket_hi: hi,
        residual,
        iterations,
    })
}
