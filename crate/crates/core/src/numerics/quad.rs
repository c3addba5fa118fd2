//! Adaptive Simpson quadrature with explicit error accounting.

use crate::{Complex, Error, Result};

/// One quadrature result.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: f64,
    /// Accumulated Richardson error estimate (≥ 0).
    pub error_estimate: f64,
    pub evaluations: u32,
    /// False when the refinement budget ran out before the tolerance was met;
    /// the value is still the best available estimate.
    pub converged: bool,
}

const MAX_DEPTH: u32 = 48;
const MAX_PANELS: u32 = 40_000;

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance
/// `tol`.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(a <= b) {
        return Err(Error::Domain(format!("integrate requires a <= b, got [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error_estimate: 0.0, evaluations: 0, converged: true });
    }

    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFinite { at: x });
        }
        Ok(v)
    };

    struct Panel {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    }

    let simpson = |a: f64, b: f64, fa: f64, fm: f64, fb: f64| (b - a) / 6.0 * (fa + 4.0 * fm + fb);

    let fa = eval(a)?;
    let fb = eval(b)?;
    let m = 0.5 * (a + b);
    let fm = eval(m)?;
    let mut evaluations = 3u32;
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        tol,
        depth: 0,
    }];

    let mut value = 0.0;
    let mut error_estimate = 0.0;
    let mut converged = true;
    let mut panels = 0u32;

    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = eval(lm)?;
        let frm = eval(rm)?;
        evaluations += 2;
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        panels += 1;

        if delta.abs() <= 15.0 * p.tol || p.depth >= MAX_DEPTH || panels >= MAX_PANELS {
            value += left + right + delta / 15.0;
            error_estimate += delta.abs() / 15.0;
            if delta.abs() > 15.0 * p.tol {
                converged = false;
            }
        } else {
            let half_tol = 0.5 * p.tol;
            stack.push(Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left, tol: half_tol, depth: p.depth + 1 });
            stack.push(Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right, tol: half_tol, depth: p.depth + 1 });
        }
    }

    Ok(Quadrature { value, error_estimate, evaluations, converged })
}

/// Complex line integral `∫₀¹ f(t) dt` by integrating real and imaginary
/// parts separately; used for the radial integrals behind the `g`
/// representation.
pub fn integrate_complex<F>(f: F, tol: f64) -> Result<(Complex, f64)>
where
    F: Fn(f64) -> Complex,
{
    let re = integrate(|t| f(t).re, 0.0, 1.0, tol)?;
    let im = integrate(|t| f(t).im, 0.0, 1.0, tol)?;
    Ok((
        Complex::new(re.value, im.value),
        re.error_estimate + im.error_estimate,
    ))
}
