//! Pre-Schwarzian and Schwarzian derivatives of logharmonic mappings.
//!
//! `P_f = (log J_f)_z` expands to
//! `(2h′ + z·h″)/(h + z·h′) + g′/g − ω′·conj(ω)/(1 − |ω|²)` and
//! `S_f = P_f′ − ½P_f²`, where the `z`-derivative passes through `conj(ω)`
//! untouched (the anti-analytic factor is locally constant in `z`).  For
//! analytic maps (`g ≡ 1`, `ω ≡ 0`) both reduce to the classical
//! `f″/f′` and Schwarzian.

use std::sync::Arc;

use crate::mappings::{analytic::Analytic, LogharmonicMap};
use crate::{Complex, Error, Result};

/// Pre-Schwarzian and Schwarzian at one point.
#[derive(Clone, Copy, Debug)]
pub struct SchwarzianValue {
    pub pre_schwarzian: Complex,
    pub schwarzian: Complex,
    pub at: Complex,
}

struct Terms {
    /// `(2h′ + z·h″)/(h + z·h′)`, the analytic `F″/F′` with `F = z·h`.
    t: Complex,
    t_prime: Complex,
    /// `g′/g`.
    g: Complex,
    g_prime: Complex,
    /// `ω′·conj(ω)/(1 − |ω|²)`.
    w: Complex,
    w_prime: Complex,
}

fn terms(map: &LogharmonicMap, z: Complex) -> Result<Terms> {
    let j = map.jets(z)?;
    let (h, h1, h2, h3) = (j.h.value(), j.h.d1(), j.h.d2(), j.h.d3());
    let (g, g1, g2) = (j.g.value(), j.g.d1(), j.g.d2());
    let (om, om1, om2) = (j.omega.value(), j.omega.d1(), j.omega.d2());

    let denom = h + z * h1;
    if denom.norm() < 1e-300 {
        return Err(Error::Pole(format!("h + z h' vanishes at z = {z}")));
    }
    if g.norm() < 1e-300 {
        return Err(Error::Pole(format!("g vanishes at z = {z}")));
    }
    let om_sq = om.norm_sqr();
    if om_sq >= 1.0 {
        return Err(Error::DilatationViolation { at: z, modulus: om_sq.sqrt() });
    }

    let numer = 2.0 * h1 + z * h2;
    let t = numer / denom;
    // numer' = 3h'' + z h''', denom' = numer
    let t_prime = (3.0 * h2 + z * h3) / denom - t * t;

    let g_term = g1 / g;
    let g_prime = g2 / g - g_term * g_term;

    let d = 1.0 - om_sq;
    let w = om1 * om.conj() / d;
    // conj(omega) rides through the z-derivative as a constant
    let w_prime = om2 * om.conj() / d + w * w;

    Ok(Terms { t, t_prime, g: g_term, g_prime, w, w_prime })
}

/// `P_f(z) = (log J_f)_z`.
pub fn pre_schwarzian(map: &LogharmonicMap, z: Complex) -> Result<Complex> {
    let t = terms(map, z)?;
    Ok(t.t + t.g - t.w)
}

/// `S_f(z) = P_f′(z) − ½P_f(z)²`.
pub fn schwarzian(map: &LogharmonicMap, z: Complex) -> Result<Complex> {
    let t = terms(map, z)?;
    let p = t.t + t.g - t.w;
    let p_prime = t.t_prime + t.g_prime - t.w_prime;
    Ok(p_prime - 0.5 * p * p)
}

/// Both derivatives at once.
pub fn schwarzian_value(map: &LogharmonicMap, z: Complex) -> Result<SchwarzianValue> {
    let t = terms(map, z)?;
    let p = t.t + t.g - t.w;
    let p_prime = t.t_prime + t.g_prime - t.w_prime;
    Ok(SchwarzianValue { pre_schwarzian: p, schwarzian: p_prime - 0.5 * p * p, at: z })
}

/// Pre-composition `f ∘ φ` with a univalent analytic `φ` into the disk:
/// the analytic factor becomes `φ·(h∘φ)/z`, the co-analytic factor `g∘φ`
/// and the dilatation `ω∘φ`, so both chain rules
/// `P_{f∘φ} = (P_f∘φ)·φ′ + P_φ` and `S_{f∘φ} = (S_f∘φ)·φ′² + S_φ` hold.
pub fn precompose(map: &LogharmonicMap, phi: Arc<dyn Analytic>) -> LogharmonicMap {
    LogharmonicMap::precomposed(map, phi)
}

/// Central-difference estimate of `|∂²P_f/∂z∂z̄|`; near zero exactly when
/// `ω` is constant.
///
/// Uses the 9-point isotropic Laplacian, whose leading truncation error is
/// proportional to the biharmonic `∇⁴P` and therefore vanishes on harmonic
/// `P` instead of polluting the small residuals this test is after.
pub fn harmonicity_residual(map: &LogharmonicMap, z: Complex, step: f64) -> Result<f64> {
    if !(step > 0.0) {
        return Err(Error::Precondition(format!("step must be positive, got {step}")));
    }
    if z.norm() + step * std::f64::consts::SQRT_2 >= 1.0 {
        return Err(Error::Domain(format!(
            "step {step} leaves the disk around z = {z}"
        )));
    }
    let dx = Complex::new(step, 0.0);
    let dy = Complex::new(0.0, step);
    let center = pre_schwarzian(map, z)?;
    let edges = pre_schwarzian(map, z + dx)?
        + pre_schwarzian(map, z - dx)?
        + pre_schwarzian(map, z + dy)?
        + pre_schwarzian(map, z - dy)?;
    let corners = pre_schwarzian(map, z + dx + dy)?
        + pre_schwarzian(map, z + dx - dy)?
        + pre_schwarzian(map, z - dx + dy)?
        + pre_schwarzian(map, z - dx - dy)?;
    let laplacian = (4.0 * edges + corners - 20.0 * center) / (6.0 * step * step);
    // mixed Wirtinger derivative = Laplacian / 4
    Ok((laplacian / 4.0).norm())
}
