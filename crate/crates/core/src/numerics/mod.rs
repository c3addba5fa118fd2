//! Shared numerical kernel.
//!
//! Everything in here is a pure function of its inputs and safe to call from
//! any number of threads.

mod dilog;
mod jet;
mod quad;
mod roots;
mod series;

pub use dilog::dilog;
pub use jet::Jet;
pub use quad::{integrate, integrate_complex, Quadrature};
pub use roots::{find_root_increasing, RootResult, BRACKET_HI, BRACKET_LO};
pub use series::PowerSeries;

use crate::{Complex, Error, Result};

/// Principal power `base^exponent` for a base in the right half-plane.
///
/// All fractional powers of `1 − z^k` in this crate go through here: for
/// `|z| < 1` the base always has positive real part, so the principal branch
/// is continuous on everything we evaluate.
pub fn principal_power(base: Complex, exponent: f64) -> Result<Complex> {
    if !(base.re > 0.0) {
        return Err(Error::Domain(format!(
            "principal_power requires Re(base) > 0, got base = {base}"
        )));
    }
    Ok((exponent * base.ln()).exp())
}

/// `log(1 + e^x)` without overflow for large `x`.
pub(crate) fn softplus(x: f64) -> f64 {
    if x > 35.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}
