//! Closed-form growth, coefficient, distortion, φ/ω and
//! distance-to-boundary bounds for the class.
//!
//! All formulas are evaluated in log form internally and exponentiated at
//! the end so they stay finite for radii up to `1 − 1e-6`.  Throughout,
//! `x = r^k`.

use crate::mappings::Params;
use crate::{Error, Result};

/// Which bounded quantity a [`Bounds`] pair refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    AbsH,
    AbsG,
    AbsF,
    Fz,
    Fzbar,
    HPrime,
    GPrime,
    PhiRatio,
    PhiAbs,
    OmegaRatio,
    DistF,
    DistH,
    DistG,
}

impl Quantity {
    pub fn all() -> [Quantity; 13] {
        use Quantity::*;
        [AbsH, AbsG, AbsF, Fz, Fzbar, HPrime, GPrime, PhiRatio, PhiAbs, OmegaRatio, DistF, DistH, DistG]
    }

    pub fn name(self) -> &'static str {
        match self {
            Quantity::AbsH => "abs-h",
            Quantity::AbsG => "abs-g",
            Quantity::AbsF => "abs-f",
            Quantity::Fz => "fz",
            Quantity::Fzbar => "fzbar",
            Quantity::HPrime => "h-prime",
            Quantity::GPrime => "g-prime",
            Quantity::PhiRatio => "phi-ratio",
            Quantity::PhiAbs => "phi-abs",
            Quantity::OmegaRatio => "omega-ratio",
            Quantity::DistF => "dist-f",
            Quantity::DistH => "dist-h",
            Quantity::DistG => "dist-g",
        }
    }

    /// Distance bounds take no radius argument.
    pub fn needs_radius(self) -> bool {
        !matches!(self, Quantity::DistF | Quantity::DistH | Quantity::DistG)
    }
}

/// A lower/upper pair for one quantity.
///
/// `lower` is floored at zero (moduli are nonnegative); `lower_raw` keeps
/// the un-floored display value, which for the `|h′|` bound is negative at
/// every radius.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub quantity: Quantity,
    pub lower: f64,
    pub upper: f64,
    pub lower_raw: f64,
}

impl Bounds {
    fn new(quantity: Quantity, lower_raw: f64, upper: f64) -> Self {
        Bounds { quantity, lower: lower_raw.max(0.0), upper, lower_raw }
    }

    pub fn contains(&self, value: f64, slack: f64) -> bool {
        value >= self.lower - slack && value <= self.upper + slack
    }
}

/// Coefficient bounds `|a_{kn}|`, `|b_{kn}|`.
#[derive(Clone, Copy, Debug)]
pub struct CoeffBound {
    pub n: u32,
    pub a_bound: f64,
    pub b_bound: f64,
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius must lie in (0, 1), got {r}")));
    }
    Ok(())
}

/// Shared exponential factors `exp(±c·(1−α)x/(k(1∓x)))`.
struct Factors {
    alpha: f64,
    kf: f64,
    x: f64,
}

impl Factors {
    fn new(p: Params, r: f64) -> Self {
        Factors { alpha: p.alpha(), kf: p.kf(), x: r.powi(p.k() as i32) }
    }

    /// `c·(1−α)x/(k(1−x))` (growth exponent, upper side).
    fn e_plus(&self, c: f64) -> f64 {
        c * (1.0 - self.alpha) * self.x / (self.kf * (1.0 - self.x))
    }

    /// `−c·(1−α)x/(k(1+x))` (lower side).
    fn e_minus(&self, c: f64) -> f64 {
        -c * (1.0 - self.alpha) * self.x / (self.kf * (1.0 + self.x))
    }

    /// `(1−x)^{−e}` in log form.
    fn pow_upper(&self, e: f64) -> f64 {
        -e * (1.0 - self.x).ln()
    }

    /// `(1+x)^{−e}` in log form.
    fn pow_lower(&self, e: f64) -> f64 {
        -e * (1.0 + self.x).ln()
    }
}

/// Growth bounds on `|h|`, `|g|` or `|f|` at modulus `r`.
pub fn growth_bounds(p: Params, r: f64, which: Quantity) -> Result<Bounds> {
    check_radius(r)?;
    let f = Factors::new(p, r);
    let (alpha, kf) = (p.alpha(), p.kf());
    let (lower, upper) = match which {
        Quantity::AbsH => (
            (f.pow_lower(1.0 / kf) + f.e_minus(2.0)).exp(),
            (f.pow_upper(1.0 / kf) + f.e_plus(2.0)).exp(),
        ),
        Quantity::AbsG => (
            (f.pow_lower((2.0 * alpha - 1.0) / kf) + f.e_minus(2.0)).exp(),
            (f.pow_upper((2.0 * alpha - 1.0) / kf) + f.e_plus(2.0)).exp(),
        ),
        Quantity::AbsF => (
            r * (f.pow_lower(2.0 * alpha / kf) + f.e_minus(4.0)).exp(),
            r * (f.pow_upper(2.0 * alpha / kf) + f.e_plus(4.0)).exp(),
        ),
        other => {
            return Err(Error::Precondition(format!(
                "growth_bounds covers |h|, |g|, |f|; got {other:?}"
            )))
        }
    };
    Ok(Bounds::new(which, lower, upper))
}

/// Distortion bounds on `|f_z|`, `|f_z̄|`, `|h′|`, `|g′|` at modulus `r`.
///
/// The `|h′|` pair carries the `(1∓x)^{∓1/k}` factor of `|h|` that the
/// final display drops; without it the upper bound is violated by the
/// extremal map itself.
pub fn distortion_bounds(p: Params, r: f64, which: Quantity) -> Result<Bounds> {
    check_radius(r)?;
    let f = Factors::new(p, r);
    let (alpha, kf, x) = (p.alpha(), p.kf(), f.x);
    let one_minus_2a = 1.0 - 2.0 * alpha;
    let e_fz = 2.0 * (alpha + kf) / kf;
    let (lower, upper) = match which {
        Quantity::Fz => (
            (1.0 - one_minus_2a * x) * (f.pow_lower(e_fz) + f.e_minus(4.0)).exp(),
            (1.0 + one_minus_2a * x) * (f.pow_upper(e_fz) + f.e_plus(4.0)).exp(),
        ),
        Quantity::Fzbar => (
            x * (1.0 - one_minus_2a * x) * (f.pow_lower(e_fz) + f.e_minus(4.0)).exp(),
            x * (1.0 + one_minus_2a * x) * (f.pow_upper(e_fz) + f.e_plus(4.0)).exp(),
        ),
        Quantity::HPrime => {
            let up = (1.0 + one_minus_2a * x + (1.0 - x) * (1.0 - x)) / (r * (1.0 - x) * (1.0 - x));
            let low = (1.0 - one_minus_2a * x - (1.0 + x) * (1.0 + x)) / (r * (1.0 + x) * (1.0 + x));
            (
                low * (f.pow_lower(1.0 / kf) + f.e_minus(2.0)).exp(),
                up * (f.pow_upper(1.0 / kf) + f.e_plus(2.0)).exp(),
            )
        }
        Quantity::GPrime => {
            let e_g = (2.0 * (alpha + kf) - 1.0) / kf;
            let rk1 = r.powi(p.k() as i32 - 1);
            (
                rk1 * (1.0 - one_minus_2a * x) * (f.pow_lower(e_g) + f.e_minus(2.0)).exp(),
                rk1 * (1.0 + one_minus_2a * x) * (f.pow_upper(e_g) + f.e_plus(2.0)).exp(),
            )
        }
        other => {
            return Err(Error::Precondition(format!(
                "distortion_bounds covers f_z, f_zbar, h', g'; got {other:?}"
            )))
        }
    };
    Ok(Bounds::new(which, lower, upper))
}

/// Bounds on `|zφ′/φ|`, `|φ|`, `|ω/(1−ω)|` at modulus `r`.
pub fn phi_bounds(p: Params, r: f64, which: Quantity) -> Result<Bounds> {
    check_radius(r)?;
    let f = Factors::new(p, r);
    let (alpha, kf, x) = (p.alpha(), p.kf(), f.x);
    let (lower, upper) = match which {
        Quantity::PhiRatio => (
            (1.0 - alpha) * (1.0 - x) / (1.0 + x) + alpha,
            (1.0 - alpha) * (1.0 + x) / (1.0 - x) + alpha,
        ),
        Quantity::PhiAbs => (
            r * f.pow_lower(2.0 * (1.0 - alpha) / kf).exp(),
            r * f.pow_upper(2.0 * (1.0 - alpha) / kf).exp(),
        ),
        Quantity::OmegaRatio => (x / (1.0 + x), x / (1.0 - x)),
        other => {
            return Err(Error::Precondition(format!(
                "phi_bounds covers the phi ratio, |phi| and the omega ratio; got {other:?}"
            )))
        }
    };
    Ok(Bounds::new(which, lower, upper))
}

/// Distance from `f(0)`, `H(0)`, `G(0)` to the respective image boundary;
/// lower bound closed-form, upper bound 1.
pub fn distance_bounds(p: Params, which: Quantity) -> Result<Bounds> {
    let (alpha, kf) = (p.alpha(), p.kf());
    let ln2 = std::f64::consts::LN_2;
    let log_lower = match which {
        Quantity::DistF => -(2.0 * alpha / kf) * ln2 - 2.0 * (1.0 - alpha) / kf,
        Quantity::DistH => -(1.0 / kf) * ln2 - (1.0 - alpha) / kf,
        Quantity::DistG => -((2.0 * alpha - 1.0) / kf) * ln2 - (1.0 - alpha) / kf,
        other => {
            return Err(Error::Precondition(format!(
                "distance_bounds covers dist-f, dist-h, dist-g; got {other:?}"
            )))
        }
    };
    Ok(Bounds::new(which, log_lower.exp(), 1.0))
}

/// `|a_{kn}| ≤ 2(1−α)/k + 1/(kn)` and `|b_{kn}| ≤ 2(1−α)/k + (2α−1)/(kn)`;
/// both are attained by the extremal pair.
pub fn coeff_bounds(p: Params, n: u32) -> Result<CoeffBound> {
    if n < 1 {
        return Err(Error::Precondition("coefficient index n must be >= 1".into()));
    }
    let (alpha, kf, nf) = (p.alpha(), p.kf(), f64::from(n));
    Ok(CoeffBound {
        n,
        a_bound: 2.0 * (1.0 - alpha) / kf + 1.0 / (kf * nf),
        b_bound: 2.0 * (1.0 - alpha) / kf + (2.0 * alpha - 1.0) / (kf * nf),
    })
}

/// Dispatch by quantity; `r` is ignored by the distance bounds.
pub fn bounds_for(p: Params, r: f64, which: Quantity) -> Result<Bounds> {
    use Quantity::*;
    match which {
        AbsH | AbsG | AbsF => growth_bounds(p, r, which),
        Fz | Fzbar | HPrime | GPrime => distortion_bounds(p, r, which),
        PhiRatio | PhiAbs | OmegaRatio => phi_bounds(p, r, which),
        DistF | DistH | DistG => distance_bounds(p, which),
    }
}
