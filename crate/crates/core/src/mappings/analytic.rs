//! Analytic building blocks fed to [`super::LogharmonicMap::member`] and
//! [`crate::schwarzian::precompose`].

use crate::numerics::Jet;
use crate::Complex;

/// An analytic function on the unit disk, queried through its degree-3
/// Taylor jet at a point.
pub trait Analytic: Send + Sync {
    fn jet(&self, z: Complex) -> Jet;
}

impl<F> Analytic for F
where
    F: Fn(Complex) -> Jet + Send + Sync,
{
    fn jet(&self, z: Complex) -> Jet {
        self(z)
    }
}

/// `φ(z) = z / (1 − λ z^k)^{2(1−α)/k}`, starlike of order `α` for `|λ| ≤ 1`.
///
/// With `λ = 1` this is the analytic k-fold Koebe-type extremal `φ_α`.
#[derive(Clone, Debug)]
pub struct StarlikePhi {
    pub lambda: Complex,
    pub alpha: f64,
    pub k: u32,
}

impl Analytic for StarlikePhi {
    fn jet(&self, z: Complex) -> Jet {
        let w = Jet::monomial(z, self.k) * self.lambda;
        let factor = (Jet::real_constant(1.0) - w).powf(-2.0 * (1.0 - self.alpha) / f64::from(self.k));
        Jet::variable(z) * factor
    }
}

/// `c·z^m`; degree-k monomials model the dilatations `ω(z) = c z^k`.
#[derive(Clone, Copy, Debug)]
pub struct Monomial {
    pub coeff: Complex,
    pub degree: u32,
}

impl Analytic for Monomial {
    fn jet(&self, z: Complex) -> Jet {
        Jet::monomial(z, self.degree) * self.coeff
    }
}

/// Constant function.
#[derive(Clone, Copy, Debug)]
pub struct Constant(pub Complex);

impl Analytic for Constant {
    fn jet(&self, _z: Complex) -> Jet {
        Jet::constant(self.0)
    }
}

/// `a·z + b`.
#[derive(Clone, Copy, Debug)]
pub struct Affine {
    pub a: Complex,
    pub b: Complex,
}

impl Analytic for Affine {
    fn jet(&self, z: Complex) -> Jet {
        Jet::variable(z) * self.a + Jet::constant(self.b)
    }
}

/// Disk automorphism `(z + a) / (1 + conj(a)·z)` for `|a| < 1`; the Moebius
/// maps used by the Schwarzian chain-rule checks.
#[derive(Clone, Copy, Debug)]
pub struct DiskAutomorphism {
    pub a: Complex,
}

impl Analytic for DiskAutomorphism {
    fn jet(&self, z: Complex) -> Jet {
        let zj = Jet::variable(z);
        (zj + Jet::constant(self.a)) / (zj * self.a.conj() + Jet::real_constant(1.0))
    }
}
