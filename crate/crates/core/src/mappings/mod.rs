//! Construction and pointwise evaluation of logharmonic mappings
//! `f(z) = z·h(z)·conj(g(z))`.
//!
//! Every map kind exposes degree-3 jets of its analytic factors `h`, `g` and
//! of its dilatation `ω`, from which values, Wirtinger derivatives, the
//! Jacobian, the starlikeness ratio `Df/f` and (in [`crate::schwarzian`])
//! the pre-Schwarzian and Schwarzian derivatives all follow.  Derivatives
//! are always taken from closed forms or the integral representation of
//! `g`; finite differences appear only in test oracles.

pub mod analytic;

use std::fmt;
use std::sync::Arc;

use crate::numerics::{integrate_complex, Jet, PowerSeries};
use crate::{Complex, Error, Result};
use analytic::Analytic;

/// Tolerance of the radial quadrature behind the `g` representation.
const MEMBER_QUAD_TOL: f64 = 1e-11;

/// Class parameters `(α, k)`: starlikeness order and fold count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    alpha: f64,
    k: u32,
}

impl Params {
    pub fn new(alpha: f64, k: u32) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Domain(format!("alpha must lie in [0, 1), got {alpha}")));
        }
        if k < 1 {
            return Err(Error::Domain("fold count k must be at least 1".into()));
        }
        Ok(Params { alpha, k })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn kf(&self) -> f64 {
        f64::from(self.k)
    }
}

/// Which worked example to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    /// `z^{k+1}·conj(z)^k`, constant dilatation `k/(k+1)`.
    F3,
    /// `z(1−conj(z)^k)/(1−z^k)`.
    F4,
    /// `z²·conj(z)/(1−z^k)^{2(1−α)}`.
    F5,
}

#[derive(Clone)]
enum MapKind {
    Koebe(Params),
    Example(ExampleKind, Params),
    Member {
        phi: Arc<dyn Analytic>,
        omega: Arc<dyn Analytic>,
        params: Params,
    },
    Analytic(PowerSeries),
    LogConvex {
        first: Box<LogharmonicMap>,
        second: Box<LogharmonicMap>,
        gamma: f64,
    },
    Precomposed {
        inner: Box<LogharmonicMap>,
        phi: Arc<dyn Analytic>,
    },
}

/// A logharmonic mapping of the unit disk.
#[derive(Clone)]
pub struct LogharmonicMap {
    kind: MapKind,
}

impl fmt::Debug for LogharmonicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LogharmonicMap({})", self.kind_name())
    }
}

/// Jets of the analytic factors at one point.
#[derive(Clone, Copy, Debug)]
pub struct MapJets {
    pub h: Jet,
    pub g: Jet,
    pub omega: Jet,
}

fn require_in_disk(z: Complex) -> Result<()> {
    if z.norm_sqr() >= 1.0 {
        return Err(Error::Domain(format!("|z| must be < 1, got z = {z}")));
    }
    Ok(())
}

impl LogharmonicMap {
    /// The extremal (Koebe-type) member `f_α` of the class: `h_α` and `g_α`
    /// are fractional powers of `1 − z^k` times `exp(2(1−α)z^k/(k(1−z^k)))`,
    /// and the dilatation is `ω(z) = z^k`.
    pub fn koebe(params: Params) -> Self {
        LogharmonicMap { kind: MapKind::Koebe(params) }
    }

    /// One of the three worked examples (`F3`/`F4` ignore `alpha`).
    pub fn example(which: ExampleKind, params: Params) -> Self {
        LogharmonicMap { kind: MapKind::Example(which, params) }
    }

    /// A generic class member assembled from a starlike `φ` and a
    /// dilatation `ω`: `g = exp ∫₀ᶻ ω/(1−ω) · φ′/φ`, `h = φ·g/z`.
    ///
    /// `phi` must fix the origin with `φ′(0) = 1` and `omega` must vanish
    /// at the origin with `|ω| < 1` wherever the map is evaluated.
    pub fn member(
        phi: Arc<dyn Analytic>,
        omega: Arc<dyn Analytic>,
        params: Params,
    ) -> Result<Self> {
        let p0 = phi.jet(Complex::ZERO);
        if p0.value().norm() > 1e-12 {
            return Err(Error::Precondition(format!(
                "member phi must vanish at 0, got {}",
                p0.value()
            )));
        }
        if (p0.d1() - Complex::ONE).norm() > 1e-10 {
            return Err(Error::Precondition(format!(
                "member phi must have phi'(0) = 1, got {}",
                p0.d1()
            )));
        }
        let o0 = omega.jet(Complex::ZERO);
        if o0.value().norm() > 1e-12 {
            return Err(Error::Precondition(format!(
                "member omega must vanish at 0, got {}",
                o0.value()
            )));
        }
        Ok(LogharmonicMap { kind: MapKind::Member { phi, omega, params } })
    }

    /// Analytic sub-case `f = z·h(z)` with `g ≡ 1`, `ω ≡ 0`, `h` given by a
    /// truncated Taylor series with `h(0) = 1`.
    pub fn analytic(series: PowerSeries) -> Result<Self> {
        if (series.coeff(0) - Complex::ONE).norm() > 1e-12 {
            return Err(Error::Precondition(format!(
                "analytic map requires h(0) = 1, got {}",
                series.coeff(0)
            )));
        }
        Ok(LogharmonicMap { kind: MapKind::Analytic(series) })
    }

    /// Identity `f(z) = z` (`h = g = 1`, `ω = 0`).
    pub fn identity() -> Self {
        LogharmonicMap {
            kind: MapKind::Analytic(PowerSeries::from_real(&[1.0])),
        }
    }

    /// Pointwise `f₁^γ · f₂^{1−γ}` of two solutions with the same
    /// dilatation; the result solves the same first-order system and keeps
    /// the fold symmetry.
    pub fn combine_logconvex(
        first: &LogharmonicMap,
        second: &LogharmonicMap,
        gamma: f64,
    ) -> Result<Self> {
        if !(0.0 < gamma && gamma < 1.0) {
            return Err(Error::Domain(format!("gamma must lie in (0, 1), got {gamma}")));
        }
        // The two maps must share their dilatation; sample two circles.
        for i in 0..16 {
            let theta = 2.0 * std::f64::consts::PI * f64::from(i) / 16.0;
            let radius = if i % 2 == 0 { 0.23 } else { 0.61 };
            let z = Complex::from_polar(radius, theta);
            let w1 = first.jets(z)?.omega.value();
            let w2 = second.jets(z)?.omega.value();
            let deviation = (w1 - w2).norm();
            if deviation > 1e-9 {
                return Err(Error::DilatationMismatch { at: z, deviation });
            }
        }
        Ok(LogharmonicMap {
            kind: MapKind::LogConvex {
                first: Box::new(first.clone()),
                second: Box::new(second.clone()),
                gamma,
            },
        })
    }

    pub(crate) fn precomposed(inner: &LogharmonicMap, phi: Arc<dyn Analytic>) -> Self {
        LogharmonicMap {
            kind: MapKind::Precomposed { inner: Box::new(inner.clone()), phi },
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.kind {
            MapKind::Koebe(_) => "koebe",
            MapKind::Example(ExampleKind::F3, _) => "f3",
            MapKind::Example(ExampleKind::F4, _) => "f4",
            MapKind::Example(ExampleKind::F5, _) => "f5",
            MapKind::Member { .. } => "member",
            MapKind::Analytic(_) => "analytic",
            MapKind::LogConvex { .. } => "logconvex",
            MapKind::Precomposed { .. } => "precomposed",
        }
    }

    /// Fold count of the symmetry `f(e^{2πi/k}z) = e^{2πi/k}f(z)`
    /// (1 when nothing better is known).
    pub fn fold(&self) -> u32 {
        match &self.kind {
            MapKind::Koebe(p) | MapKind::Example(_, p) | MapKind::Member { params: p, .. } => p.k,
            MapKind::Analytic(_) => 1,
            MapKind::LogConvex { first, .. } => first.fold(),
            MapKind::Precomposed { .. } => 1,
        }
    }

    pub fn params(&self) -> Option<Params> {
        match &self.kind {
            MapKind::Koebe(p) | MapKind::Example(_, p) | MapKind::Member { params: p, .. } => {
                Some(*p)
            }
            _ => None,
        }
    }

    /// Largest radius on which the dilatation is known to satisfy `|ω| < 1`.
    ///
    /// The `F4`/`F5` examples are sense-preserving only for
    /// `|z|^k < 1/(2k−1)`; everything else is safe on the whole disk.
    pub fn dilatation_safe_radius(&self) -> f64 {
        match &self.kind {
            MapKind::Example(ExampleKind::F4 | ExampleKind::F5, p) => {
                (1.0 / (2.0 * p.kf() - 1.0)).powf(1.0 / p.kf())
            }
            MapKind::LogConvex { first, second, .. } => {
                first.dilatation_safe_radius().min(second.dilatation_safe_radius())
            }
            _ => 1.0,
        }
    }

    /// Jets of `h`, `g`, `ω` at `z`.
    pub fn jets(&self, z: Complex) -> Result<MapJets> {
        require_in_disk(z)?;
        match &self.kind {
            MapKind::Koebe(p) => Ok(koebe_jets(*p, z)),
            MapKind::Example(which, p) => example_jets(*which, *p, z),
            MapKind::Member { phi, omega, .. } => member_jets(phi.as_ref(), omega.as_ref(), z),
            MapKind::Analytic(series) => Ok(MapJets {
                h: series.eval_jet(z),
                g: Jet::real_constant(1.0),
                omega: Jet::constant(Complex::ZERO),
            }),
            MapKind::LogConvex { first, second, gamma } => {
                let a = first.jets(z)?;
                let b = second.jets(z)?;
                let blend = |x: Jet, y: Jet| (x.ln() * *gamma + y.ln() * (1.0 - *gamma)).exp();
                let h = blend(a.h, b.h);
                let g = blend(a.g, b.g);
                if !h.is_finite() || !g.is_finite() {
                    return Err(Error::Pole(format!(
                        "logarithmic combination hit a zero of h or g at {z}"
                    )));
                }
                Ok(MapJets { h, g, omega: a.omega })
            }
            MapKind::Precomposed { inner, phi } => {
                if z.norm() < 1e-14 {
                    return Err(Error::Domain(
                        "jets of a precomposed map are not available at the origin".into(),
                    ));
                }
                let pj = phi.jet(z);
                let w = pj.value();
                if w.norm_sqr() >= 1.0 {
                    return Err(Error::Domain(format!(
                        "phi({z}) = {w} leaves the unit disk"
                    )));
                }
                let base = inner.jets(w)?;
                let h = pj * Jet::compose(base.h, pj) / Jet::variable(z);
                let g = Jet::compose(base.g, pj);
                let omega = Jet::compose(base.omega, pj);
                Ok(MapJets { h, g, omega })
            }
        }
    }

    /// `f(z) = z·h(z)·conj(g(z))`.
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        if let MapKind::Precomposed { inner, phi } = &self.kind {
            require_in_disk(z)?;
            return inner.eval(phi.jet(z).value());
        }
        let j = self.jets(z)?;
        Ok(z * j.h.value() * j.g.value().conj())
    }

    /// Wirtinger derivative `f_z = (h + z·h′)·conj(g)`.
    pub fn eval_fz(&self, z: Complex) -> Result<Complex> {
        if let MapKind::Precomposed { inner, phi } = &self.kind {
            require_in_disk(z)?;
            let pj = phi.jet(z);
            return Ok(pj.d1() * inner.eval_fz(pj.value())?);
        }
        let j = self.jets(z)?;
        Ok((j.h.value() + z * j.h.d1()) * j.g.value().conj())
    }

    /// Wirtinger derivative `f_z̄ = z·h·conj(g′)`.
    pub fn eval_fzbar(&self, z: Complex) -> Result<Complex> {
        if let MapKind::Precomposed { inner, phi } = &self.kind {
            require_in_disk(z)?;
            let pj = phi.jet(z);
            return Ok(pj.d1().conj() * inner.eval_fzbar(pj.value())?);
        }
        let j = self.jets(z)?;
        Ok(z * j.h.value() * j.g.d1().conj())
    }

    /// Jacobian `|f_z|² − |f_z̄|²`; positive where the map preserves sense.
    pub fn jacobian(&self, z: Complex) -> Result<f64> {
        Ok(self.eval_fz(z)?.norm_sqr() - self.eval_fzbar(z)?.norm_sqr())
    }

    /// Dilatation value with the `|ω| < 1` invariant enforced.
    pub fn omega(&self, z: Complex) -> Result<Complex> {
        let w = self.jets(z)?.omega.value();
        let modulus = w.norm();
        if modulus >= 1.0 {
            return Err(Error::DilatationViolation { at: z, modulus });
        }
        Ok(w)
    }

    /// `Df/f = 1 + z·h′/h − conj(z·g′/g)`; its real part exceeding `α` is
    /// starlikeness of order `α`.
    pub fn d_ratio(&self, z: Complex) -> Result<Complex> {
        if z.norm() == 0.0 {
            return Err(Error::Domain("Df/f is undefined at the origin".into()));
        }
        let j = self.jets(z)?;
        Ok(Complex::ONE + z * j.h.d1() / j.h.value() - (z * j.g.d1() / j.g.value()).conj())
    }

    /// Residual of the defining first-order system,
    /// `g′/g − ω·(1/z + h′/h)`; identically zero for exact solutions.
    pub fn pde_residual(&self, z: Complex) -> Result<Complex> {
        if z.norm() == 0.0 {
            return Err(Error::Domain("the system residual needs z != 0".into()));
        }
        let j = self.jets(z)?;
        let fz_over_f = Complex::ONE / z + j.h.d1() / j.h.value();
        Ok(j.g.d1() / j.g.value() - j.omega.value() * fz_over_f)
    }
}

fn koebe_jets(p: Params, z: Complex) -> MapJets {
    let kf = p.kf();
    let w = Jet::monomial(z, p.k);
    let one_minus_w = Jet::real_constant(1.0) - w;
    let expf = (w / one_minus_w * (2.0 * (1.0 - p.alpha) / kf)).exp();
    MapJets {
        h: one_minus_w.powf(-1.0 / kf) * expf,
        g: one_minus_w.powf(-(2.0 * p.alpha - 1.0) / kf) * expf,
        omega: w,
    }
}

fn example_jets(which: ExampleKind, p: Params, z: Complex) -> Result<MapJets> {
    let kf = p.kf();
    let w = Jet::monomial(z, p.k);
    let one_minus_w = Jet::real_constant(1.0) - w;
    Ok(match which {
        ExampleKind::F3 => MapJets {
            h: Jet::monomial(z, p.k),
            g: Jet::monomial(z, p.k),
            omega: Jet::real_constant(kf / (kf + 1.0)),
        },
        ExampleKind::F4 => MapJets {
            h: one_minus_w.recip(),
            g: one_minus_w,
            omega: (w * -kf) / (w * (kf - 1.0) + 1.0),
        },
        ExampleKind::F5 => MapJets {
            h: Jet::variable(z) * one_minus_w.powf(-2.0 * (1.0 - p.alpha)),
            g: Jet::variable(z),
            omega: one_minus_w / (one_minus_w * 2.0 + w * (2.0 * kf * (1.0 - p.alpha))),
        },
    })
}

/// `q = ω/(1−ω) · φ′/φ`, the integrand of the `g` representation.  Away
/// from the origin this is plain jet arithmetic; at the origin the removable
/// singularity of `φ′/φ` is cancelled against `ω(0) = 0` explicitly.
fn member_q_jet(phi: &dyn Analytic, omega: &dyn Analytic, s: Complex) -> Result<Jet> {
    let oj = omega.jet(s);
    let modulus = oj.value().norm();
    if modulus >= 1.0 {
        return Err(Error::DilatationViolation { at: s, modulus });
    }
    let a = oj / (Jet::real_constant(1.0) - oj);
    if s.norm() < 1e-14 {
        let pj = phi.jet(s);
        // z·φ'/φ from the shifted Taylor data of φ about 0
        let num = Jet::from_coeffs([pj.coeff(1), 2.0 * pj.coeff(2), 3.0 * pj.coeff(3), Complex::ZERO]);
        let den = Jet::from_coeffs([pj.coeff(1), pj.coeff(2), pj.coeff(3), Complex::ZERO]);
        let a_over_z = Jet::from_coeffs([a.coeff(1), a.coeff(2), a.coeff(3), Complex::ZERO]);
        Ok(a_over_z * (num / den))
    } else {
        let pj = phi.jet(s);
        Ok(a * (pj.derivative() / pj))
    }
}

fn member_jets(phi: &dyn Analytic, omega: &dyn Analytic, z: Complex) -> Result<MapJets> {
    // Reject paths on which the dilatation leaves the disk before spending
    // quadrature effort.
    for i in 0..=32 {
        let s = z * (f64::from(i) / 32.0);
        let modulus = omega.jet(s).value().norm();
        if modulus >= 1.0 {
            return Err(Error::DilatationViolation { at: s, modulus });
        }
    }
    // log g(z) = ∫_0^z q(s) ds along the radial segment (path independent).
    let (integral, _err) = integrate_complex(
        |t| {
            member_q_jet(phi, omega, z * t)
                .map(|q| q.value() * z)
                .unwrap_or(Complex::new(f64::NAN, f64::NAN))
        },
        MEMBER_QUAD_TOL,
    )?;

    if z.norm() < 1e-14 {
        let pj = phi.jet(z);
        let q = member_q_jet(phi, omega, z)?;
        let log_g = Jet::from_coeffs([
            integral,
            q.coeff(0),
            q.coeff(1) / 2.0,
            q.coeff(2) / 3.0,
        ]);
        let g = log_g.exp();
        let phi_over_z = Jet::from_coeffs([pj.coeff(1), pj.coeff(2), pj.coeff(3), Complex::ZERO]);
        return Ok(MapJets { h: phi_over_z * g, g, omega: omega.jet(z) });
    }

    let pj = phi.jet(z);
    let q = member_q_jet(phi, omega, z)?;
    let log_g = Jet::from_coeffs([
        integral,
        q.coeff(0),
        q.coeff(1) / 2.0,
        q.coeff(2) / 3.0,
    ]);
    let g = log_g.exp();
    let h = pj * g / Jet::variable(z);
    Ok(MapJets { h, g, omega: omega.jet(z) })
}

/// `β = conj(ω(0))·(1 + ω(0))/(1 − |ω(0)|²)`, the exponent the general
/// representation attaches to a nonvanishing `ω(0)` (zero throughout the
/// normalized class built here).
pub fn beta_from_omega0(w0: Complex) -> Result<Complex> {
    if w0.norm_sqr() >= 1.0 {
        return Err(Error::Domain(format!("|omega(0)| must be < 1, got {w0}")));
    }
    Ok(w0.conj() * (Complex::ONE + w0) / (1.0 - w0.norm_sqr()))
}

/// First `n_max` logarithmic coefficients `(a_{nk}, b_{nk})` of the extremal
/// pair `(h_α, g_α)`, extracted with the formal series log.
///
/// The two displayed factors are handled separately, since the formal log
/// of a product is the sum of the logs: the fractional-power factor is
/// assembled by the binomial recurrence and logged numerically (this is
/// where the `1/(kn)` structure lives), while the exponential factor
/// contributes its exponent series unchanged.  Materializing the product
/// series first would push coefficients past 1e9 by `n = 64` and wash the
/// extraction out of double precision.
///
/// Closed forms: `a_{nk} = 2(1−α)/k + 1/(kn)`,
/// `b_{nk} = 2(1−α)/k + (2α−1)/(kn)`.
pub fn koebe_log_coeffs(params: Params, n_max: usize) -> Result<(Vec<Complex>, Vec<Complex>)> {
    if n_max < 1 {
        return Err(Error::Precondition("need at least one coefficient".into()));
    }
    let kf = params.kf();
    let exponent_coeff = Complex::new(2.0 * (1.0 - params.alpha) / kf, 0.0);

    let binomial = |c: f64| {
        let mut coeffs = Vec::with_capacity(n_max + 1);
        coeffs.push(Complex::ONE);
        let mut acc = Complex::ONE;
        for n in 1..=n_max {
            acc *= Complex::new((c + (n as f64) - 1.0) / (n as f64), 0.0);
            coeffs.push(acc);
        }
        PowerSeries::new(coeffs)
    };

    let log_h_binomial = binomial(1.0 / kf)?.log()?;
    let log_g_binomial = binomial((2.0 * params.alpha - 1.0) / kf)?.log()?;
    Ok((
        (1..=n_max)
            .map(|n| log_h_binomial.coeff(n) + exponent_coeff)
            .collect(),
        (1..=n_max)
            .map(|n| log_g_binomial.coeff(n) + exponent_coeff)
            .collect(),
    ))
}
