//! The six improved Bohr-type radius equations, the starlikeness radius
//! equations, majorant (Bohr) sums, and a brute-force numeric
//! starlikeness-radius oracle.
//!
//! Each equation is exposed as `F(r) = log(LHS(r)) − log(RHS)` so that `F`
//! stays finite on the whole bracket `(1e-12, 1 − 1e-9)` even though the
//! left-hand sides diverge like `exp(C/(1−r^k))` as `r → 1`.  `F` is
//! negative below the root and positive above it; the two starlikeness
//! equations are quadratics in `r^k`, negated so the sign convention is the
//! same.

use crate::bounds::{self, Quantity};
use crate::mappings::{LogharmonicMap, Params};
use crate::numerics::{dilog, find_root_increasing, softplus, RootResult};
use crate::{Complex, Error, Result};

/// Which radius an equation defines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadiusId {
    /// Majorant with coefficient products `k·a·b` added; distance target `f`.
    R1,
    /// Majorant of `H = z·h` with squares `k·a²` added.
    R2,
    /// Majorant of `G = z·g` with squares `k·b²` added.
    R3,
    /// Majorant with the `|h+g| ≤ 2` factor (`e²`) added.
    R4,
    /// Majorant with `|f(z)|` added.
    R5,
    /// Majorant with `|z·f_z(z)|` added.
    R6,
    /// Starlikeness radius of the whole class:
    /// `(1+2α)r^{2k} − (6−2α)r^k + 1 = 0`.
    StarlikeClass,
    /// Starlikeness radius of the `F4`/`F5` examples:
    /// `1 + (1−2k)r^{2k} − 2(k−1)r^k = 0`.
    StarlikeExample,
}

impl RadiusId {
    pub fn all_bohr() -> [RadiusId; 6] {
        [RadiusId::R1, RadiusId::R2, RadiusId::R3, RadiusId::R4, RadiusId::R5, RadiusId::R6]
    }

    pub fn is_bohr(self) -> bool {
        !matches!(self, RadiusId::StarlikeClass | RadiusId::StarlikeExample)
    }

    pub fn name(self) -> &'static str {
        match self {
            RadiusId::R1 => "r1",
            RadiusId::R2 => "r2",
            RadiusId::R3 => "r3",
            RadiusId::R4 => "r4",
            RadiusId::R5 => "r5",
            RadiusId::R6 => "r6",
            RadiusId::StarlikeClass => "starlike",
            RadiusId::StarlikeExample => "starlike-example",
        }
    }

    /// The distance bound each Bohr inequality is measured against.
    pub fn distance_target(self) -> Quantity {
        match self {
            RadiusId::R2 => Quantity::DistH,
            RadiusId::R3 => Quantity::DistG,
            _ => Quantity::DistF,
        }
    }
}

/// A radius equation bound to class parameters.
#[derive(Clone, Copy, Debug)]
pub struct RadiusEquation {
    pub id: RadiusId,
    pub params: Params,
}

impl RadiusEquation {
    pub fn new(id: RadiusId, params: Params) -> Self {
        RadiusEquation { id, params }
    }

    /// `log LHS(r) − log RHS` (negative below the root, positive above).
    pub fn value(&self, r: f64) -> Result<f64> {
        if !(0.0 < r && r < 1.0) {
            return Err(Error::Domain(format!("equation argument must lie in (0, 1), got {r}")));
        }
        let p = self.params;
        let (alpha, kf) = (p.alpha(), p.kf());
        let x = r.powi(p.k() as i32);
        let ln1mx = (1.0 - x).ln();
        let li2 = dilog(x)?;
        let log_dist = |q: Quantity| bounds::distance_bounds(p, q).map(|b| b.lower.ln());

        Ok(match self.id {
            RadiusId::R1 => {
                r.ln() + 4.0 * (1.0 - alpha) * (2.0 - alpha) * x / (kf * (1.0 - x))
                    - (2.0 * alpha * (3.0 - 2.0 * alpha) / kf) * ln1mx
                    + ((2.0 * alpha - 1.0) / kf) * li2
                    - log_dist(Quantity::DistF)?
            }
            RadiusId::R2 => {
                r.ln() + 2.0 * (1.0 - alpha) * (3.0 - 2.0 * alpha) * x / (kf * (1.0 - x))
                    - ((5.0 - 4.0 * alpha) / kf) * ln1mx
                    + li2 / kf
                    - log_dist(Quantity::DistH)?
            }
            RadiusId::R3 => {
                let m = 2.0 * alpha - 1.0;
                r.ln() + 2.0 * (1.0 - alpha) * (3.0 - 2.0 * alpha) * x / (kf * (1.0 - x))
                    - (m * (5.0 - 4.0 * alpha) / kf) * ln1mx
                    + (m * m / kf) * li2
                    - log_dist(Quantity::DistG)?
            }
            RadiusId::R4 => {
                2.0 + r.ln() + 4.0 * (1.0 - alpha) * x / (kf * (1.0 - x))
                    - (2.0 * alpha / kf) * ln1mx
                    - log_dist(Quantity::DistF)?
            }
            RadiusId::R5 => {
                // LHS = r + r(1-x)^{-2a/k} exp(4(1-a)x/(k(1-x))); in log form
                // the additive structure becomes a softplus.
                let e = 4.0 * (1.0 - alpha) * x / (kf * (1.0 - x)) - (2.0 * alpha / kf) * ln1mx;
                r.ln() + softplus(e) - log_dist(Quantity::DistF)?
            }
            RadiusId::R6 => {
                // the (x+1)/(1-x) exponent already folds the e^{2(1-a)/k} of
                // the distance bound in; only the 2^{2a/k} factor remains
                let poly = 2.0 - (1.0 + 2.0 * alpha) * x + x * x;
                (2.0 * alpha / kf) * std::f64::consts::LN_2 + r.ln() + poly.ln()
                    - (2.0 * (alpha + kf) / kf) * ln1mx
                    + 2.0 * (1.0 - alpha) * (x + 1.0) / (kf * (1.0 - x))
            }
            RadiusId::StarlikeClass => {
                -((1.0 + 2.0 * alpha) * x * x - (6.0 - 2.0 * alpha) * x + 1.0)
            }
            RadiusId::StarlikeExample => {
                -(1.0 + (1.0 - 2.0 * kf) * x * x - 2.0 * (kf - 1.0) * x)
            }
        })
    }

    /// Solves the equation by guaranteed bracketing.
    pub fn solve(&self, tol: f64) -> Result<RootResult> {
        find_root_increasing(|r| self.value(r), tol)
    }
}

/// Convenience: solve one radius with the default tolerance 1e-10.
pub fn solve_radius(id: RadiusId, params: Params, tol: f64) -> Result<RootResult> {
    RadiusEquation::new(id, params).solve(tol)
}

/// Per-index coefficient of the majorant series of each Bohr inequality,
/// using the extremal coefficient moduli `a_n`, `b_n`.
fn majorant_coefficient(id: RadiusId, p: Params, n: u32) -> f64 {
    let c = bounds::coeff_bounds(p, n).expect("n >= 1");
    let (a, b, kf) = (c.a_bound, c.b_bound, p.kf());
    match id {
        RadiusId::R1 => a + b + kf * a * b,
        RadiusId::R2 => a + kf * a * a,
        RadiusId::R3 => b + kf * b * b,
        RadiusId::R4 | RadiusId::R5 | RadiusId::R6 => a + b,
        _ => unreachable!("majorants exist for the Bohr ids only"),
    }
}

/// Number of series terms that pushes the geometric tail bound below 1e-12.
pub fn suggested_terms(id: RadiusId, params: Params, r: f64) -> Result<usize> {
    if !id.is_bohr() {
        return Err(Error::Precondition("majorant sums exist for r1..r6 only".into()));
    }
    let x = r.powi(params.k() as i32);
    let sup = majorant_coefficient(id, params, 1).max(1.0);
    let mut n = 1usize;
    while sup * x.powi(n as i32 + 1) / (1.0 - x) >= 1e-12 {
        n += 1;
        if n > 1_000_000 {
            break;
        }
    }
    Ok(n.max(8))
}

/// Evaluates the majorant (Bohr) sum of inequality `id` at radius `r` with
/// `terms` series terms: the series part `r·exp(Σ c_n r^{nk})` (times `e²`
/// for `R4`), plus the `|f(r)|` term of `R5` through its majorant `r`
/// (those theorems assume `|h|, |g| ≤ 1`) and the `|r·f_z(r)|` term of
/// `R6` through the distortion upper bound.
pub fn bohr_sum(id: RadiusId, params: Params, r: f64, terms: usize) -> Result<f64> {
    if !id.is_bohr() {
        return Err(Error::Precondition("majorant sums exist for r1..r6 only".into()));
    }
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius must lie in (0, 1), got {r}")));
    }
    let x = r.powi(params.k() as i32);
    let needed = suggested_terms(id, params, r)?;
    if terms < needed {
        return Err(Error::Truncation(format!(
            "{terms} terms leave a tail above 1e-12 at r = {r}; need {needed}"
        )));
    }
    let mut exponent = 0.0;
    let mut xn = 1.0;
    for n in 1..=terms {
        xn *= x;
        exponent += majorant_coefficient(id, params, n as u32) * xn;
    }
    let series_part = r * exponent.exp();
    Ok(match id {
        RadiusId::R4 => 2.0_f64.exp() * series_part,
        RadiusId::R5 => r + series_part,
        RadiusId::R6 => r * bounds::distortion_bounds(params, r, Quantity::Fz)?.upper + series_part,
        _ => series_part,
    })
}

/// Result of the brute-force starlikeness scan.
#[derive(Clone, Copy, Debug)]
pub struct StarlikeRadius {
    pub value: f64,
    /// True when the map stayed starlike all the way to `1 − 1e-9`.
    pub saturated: bool,
}

const THETA_SAMPLES: usize = 720;

fn starlike_at(map: &LogharmonicMap, alpha: f64, rho: f64) -> Result<bool> {
    for j in 0..THETA_SAMPLES {
        let theta = 2.0 * std::f64::consts::PI * (j as f64) / (THETA_SAMPLES as f64);
        let z = Complex::from_polar(rho, theta);
        if map.d_ratio(z)?.re <= alpha {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest `r` with `Re(Df/f) > α` on a 720-point angular grid for every
/// `ρ ≤ r` on a refinement grid, found by bisection on `r`.
pub fn starlike_radius_numeric(map: &LogharmonicMap, alpha: f64, tol: f64) -> Result<StarlikeRadius> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    let top = 1.0 - 1e-9;
    // Coarse outward scan for the first failing shell.
    let mut lo = 0.0;
    let mut hi = top;
    let mut saturated = true;
    for i in 1..=64 {
        let rho = top * f64::from(i) / 64.0;
        if starlike_at(map, alpha, rho)? {
            lo = rho;
        } else {
            hi = rho;
            saturated = false;
            break;
        }
    }
    if saturated && starlike_at(map, alpha, top)? {
        return Ok(StarlikeRadius { value: top, saturated: true });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if starlike_at(map, alpha, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Refinement pass: the radius claims every shell inside it.
    for i in 1..=16 {
        let rho = lo * f64::from(i) / 16.0;
        if !starlike_at(map, alpha, rho)? {
            return Err(Error::Precondition(format!(
                "starlikeness is not radially monotone: fails at rho = {rho} inside r = {lo}"
            )));
        }
    }
    Ok(StarlikeRadius { value: lo, saturated: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mappings::ExampleKind;

    fn p(alpha: f64, k: u32) -> Params {
        Params::new(alpha, k).unwrap()
    }

    #[test]
    fn r1_value_near_table_root() {
        let eq = RadiusEquation::new(RadiusId::R1, p(0.0, 1));
        assert!(eq.value(0.0758).unwrap().abs() < 2e-3);
    }

    #[test]
    fn r4_value_near_table_root() {
        let eq = RadiusEquation::new(RadiusId::R4, p(0.0, 1));
        assert!(eq.value(0.0170).unwrap().abs() < 6e-3);
    }

    #[test]
    fn starlike_class_root_is_quadratic_root() {
        let eq = RadiusEquation::new(RadiusId::StarlikeClass, p(0.0, 1));
        let oracle = 3.0 - 2.0 * 2.0_f64.sqrt();
        assert!(eq.value(oracle).unwrap().abs() < 1e-12);
        let root = eq.solve(1e-12).unwrap();
        assert!((root.value - oracle).abs() < 1e-10);
    }

    #[test]
    fn solve_matches_published_spot_values() {
        for (id, alpha, k, want) in [
            (RadiusId::R5, 0.0, 1, 0.0592),
            (RadiusId::R6, 0.99, 10, 0.4349),
            (RadiusId::R3, 0.0, 1, 0.2771),
        ] {
            let root = solve_radius(id, p(alpha, k), 1e-10).unwrap();
            assert!(
                (root.value - want).abs() < 5e-4,
                "{id:?}: got {}, want {want}",
                root.value
            );
            assert!(root.residual.abs() < 1e-10);
        }
    }

    #[test]
    fn starlike_example_k1_has_no_root_inside() {
        // at k=1 the equation degenerates to 1 - r^2 = 0 with root at 1
        let eq = RadiusEquation::new(RadiusId::StarlikeExample, p(0.0, 1));
        assert!(matches!(eq.solve(1e-10), Err(Error::NoRoot { .. })));
    }

    #[test]
    fn starlike_example_k2_closed_form() {
        let eq = RadiusEquation::new(RadiusId::StarlikeExample, p(0.0, 2));
        let root = eq.solve(1e-12).unwrap();
        assert!((root.value - (1.0f64 / 3.0).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn bohr_sum_r1_meets_distance_at_root() {
        let params = p(0.0, 1);
        let root = solve_radius(RadiusId::R1, params, 1e-12).unwrap().value;
        let terms = suggested_terms(RadiusId::R1, params, root).unwrap();
        let sum = bohr_sum(RadiusId::R1, params, root, terms).unwrap();
        let dist = bounds::distance_bounds(params, Quantity::DistF).unwrap().lower;
        assert!((sum - dist).abs() < 1e-6, "sum {sum} vs dist {dist}");
    }

    #[test]
    fn bohr_sum_small_r_vanishes() {
        for id in RadiusId::all_bohr() {
            let s = bohr_sum(id, p(0.3, 2), 1e-9, 8).unwrap();
            assert!(s < 1e-6, "{id:?} sum {s}");
        }
    }

    #[test]
    fn bohr_sum_strictly_below_distance_inside_radius() {
        let params = p(0.0, 1);
        let root = solve_radius(RadiusId::R2, params, 1e-12).unwrap().value;
        let r = 0.9 * root;
        let terms = suggested_terms(RadiusId::R2, params, r).unwrap();
        let sum = bohr_sum(RadiusId::R2, params, r, terms).unwrap();
        let dist = bounds::distance_bounds(params, Quantity::DistH).unwrap().lower;
        assert!(sum < dist);
    }

    #[test]
    fn bohr_sum_rejects_short_truncation() {
        let params = p(0.0, 1);
        assert!(matches!(
            bohr_sum(RadiusId::R3, params, 0.5, 4),
            Err(Error::Truncation(_))
        ));
    }

    #[test]
    fn numeric_radius_saturates_for_f3() {
        let map = LogharmonicMap::example(ExampleKind::F3, p(0.0, 2));
        let r = starlike_radius_numeric(&map, 0.0, 1e-6).unwrap();
        assert!(r.saturated && r.value > 1.0 - 1e-8);
    }

    #[test]
    fn numeric_radius_saturates_for_f4_k1() {
        let map = LogharmonicMap::example(ExampleKind::F4, p(0.0, 1));
        let r = starlike_radius_numeric(&map, 0.0, 1e-6).unwrap();
        assert!(r.saturated);
    }

    #[test]
    fn numeric_radius_of_f5_matches_equation_root() {
        // worst direction z^k = -rho^k gives rho^k = 1/(2k-1); at k=2 the
        // closed form is 3^{-1/2}, which is also the equation root
        let map = LogharmonicMap::example(ExampleKind::F5, p(0.0, 2));
        let numeric = starlike_radius_numeric(&map, 0.0, 1e-7).unwrap();
        assert!(!numeric.saturated);
        assert!((numeric.value - (1.0f64 / 3.0).sqrt()).abs() < 5e-4, "got {}", numeric.value);
    }
}
