//! Area of the image of `|z| < r`: the sandwich `2πL₁ ≤ Ar ≤ 2πL₂` built
//! from the squared distortion bounds, and the direct Jacobian integral.

use crate::bounds::{self, Quantity};
use crate::mappings::{LogharmonicMap, Params};
use crate::numerics::integrate;
use crate::{Complex, Error, Result};

/// Area bounds (and optionally the direct area) for one radius.
#[derive(Clone, Copy, Debug)]
pub struct AreaResult {
    /// `2πL₁` exactly as displayed; negative for larger radii, where the
    /// subtracted integral dominates.
    pub lower_raw: f64,
    /// `max(2πL₁, 0)`; areas are nonnegative, so the floored value is the
    /// usable lower bound.
    pub lower: f64,
    /// `2πL₂`.
    pub upper: f64,
    /// Direct Jacobian area, when requested.
    pub direct: Option<f64>,
    /// Summed quadrature error estimates.
    pub quadrature_error: f64,
}

/// Integral `∫₀ʳ bound(ρ)²·ρ dρ`, with the substitution `ρ = r·t²` for
/// `k ≥ 2` to tame the `ρ^{2k+1}` flatness at the origin.
fn bound_square_integral(
    p: Params,
    r: f64,
    which: Quantity,
    upper_side: bool,
    tol: f64,
) -> Result<(f64, f64)> {
    let eval = |rho: f64| -> f64 {
        if rho <= 0.0 {
            return 0.0;
        }
        let b = bounds::distortion_bounds(p, rho, which).expect("0 < rho < 1");
        let v = if upper_side { b.upper } else { b.lower };
        v * v * rho
    };
    // A coarse magnitude scan turns the relative target into the absolute
    // tolerance the quadrature contract wants.
    let mut magnitude: f64 = 0.0;
    for i in 1..=8 {
        magnitude = magnitude.max(eval(r * f64::from(i) / 8.0 * 0.999));
    }
    let abs_tol = tol * (magnitude * r).max(1e-300);
    let q = if p.k() >= 2 {
        integrate(|t| eval(r * t * t) * 2.0 * r * t, 0.0, 1.0, abs_tol)?
    } else {
        integrate(eval, 0.0, r, abs_tol)?
    };
    Ok((q.value, q.error_estimate))
}

/// `2πL₁` and `2πL₂` from the displayed integrands.
pub fn area_bounds(p: Params, r: f64, tol: f64) -> Result<AreaResult> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1), got {r}")));
    }
    if r == 0.0 {
        return Ok(AreaResult { lower_raw: 0.0, lower: 0.0, upper: 0.0, direct: None, quadrature_error: 0.0 });
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let (fz_low, e1) = bound_square_integral(p, r, Quantity::Fz, false, tol)?;
    let (fzb_up, e2) = bound_square_integral(p, r, Quantity::Fzbar, true, tol)?;
    let (fz_up, e3) = bound_square_integral(p, r, Quantity::Fz, true, tol)?;
    let (fzb_low, e4) = bound_square_integral(p, r, Quantity::Fzbar, false, tol)?;
    let lower_raw = two_pi * (fz_low - fzb_up);
    let upper = two_pi * (fz_up - fzb_low);
    Ok(AreaResult {
        lower_raw,
        lower: lower_raw.max(0.0),
        upper,
        direct: None,
        quadrature_error: two_pi * (e1 + e2 + e3 + e4),
    })
}

/// Tensor-product quadrature of `∬ J_f ρ dρ dθ` over `[0, r] × [0, 2π]`:
/// composite Simpson radially, trapezoid over the periodic angle.
///
/// Errors out if any Jacobian sample is negative.
pub fn area_direct(map: &LogharmonicMap, r: f64, n_rho: usize, n_theta: usize) -> Result<f64> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius must lie in (0, 1), got {r}")));
    }
    if n_rho < 2 || n_theta < 4 {
        return Err(Error::Precondition("grid must be at least 2 x 4".into()));
    }
    let n_rho = n_rho + n_rho % 2; // Simpson needs an even interval count
    let two_pi = 2.0 * std::f64::consts::PI;

    let ring = |rho: f64| -> Result<f64> {
        if rho == 0.0 {
            return Ok(0.0);
        }
        let mut acc = 0.0;
        for j in 0..n_theta {
            let theta = two_pi * (j as f64) / (n_theta as f64);
            let z = Complex::from_polar(rho, theta);
            let jac = map.jacobian(z)?;
            if jac < 0.0 {
                return Err(Error::SensePreservation { at: z, value: jac });
            }
            acc += jac;
        }
        Ok(acc * two_pi / (n_theta as f64) * rho)
    };

    let h = r / (n_rho as f64);
    let mut total = ring(0.0)? + ring(r)?;
    for i in 1..n_rho {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        total += weight * ring(h * (i as f64))?;
    }
    Ok(total * h / 3.0)
}

/// [`area_direct`] together with a Richardson-style error estimate
/// (difference against the half-resolution grid).
pub fn area_direct_with_error(
    map: &LogharmonicMap,
    r: f64,
    n_rho: usize,
    n_theta: usize,
) -> Result<(f64, f64)> {
    let fine = area_direct(map, r, n_rho, n_theta)?;
    let coarse = area_direct(map, r, (n_rho / 2).max(2), (n_theta / 2).max(4))?;
    Ok((fine, (fine - coarse).abs()))
}
