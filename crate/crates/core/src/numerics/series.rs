//! Truncated complex power series with formal log/exp.

use crate::numerics::Jet;
use crate::{Complex, Error, Result};

/// Taylor coefficients `c₀..c_N` of an analytic function about the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
}

impl PowerSeries {
    /// Wraps explicit coefficients; the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "power series needs at least the constant coefficient".into(),
            ));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        PowerSeries {
            coeffs: coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect(),
        }
    }

    /// `c₀ + c₁ w + …` with `cₙ = f(n)` for `n = 1..=order`, `c₀ = constant`.
    pub fn from_fn(constant: Complex, order: usize, f: impl Fn(usize) -> Complex) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(constant);
        coeffs.extend((1..=order).map(f));
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex {
        self.coeffs.get(n).copied().unwrap_or(Complex::ZERO)
    }

    /// Formal logarithm via the recurrence from `u · (log u)′ = u′`.
    ///
    /// Requires `c₀ = 1` (the normalization every `h`, `g` factor in this
    /// crate satisfies).
    pub fn log(&self) -> Result<PowerSeries> {
        if (self.coeffs[0] - Complex::ONE).norm() > 1e-14 {
            return Err(Error::Precondition(format!(
                "series log requires constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let n = self.coeffs.len();
        let mut l = vec![Complex::ZERO; n];
        for m in 1..n {
            let mut acc = (m as f64) * self.coeffs[m];
            for j in 1..m {
                acc -= (j as f64) * l[j] * self.coeffs[m - j];
            }
            l[m] = acc / (m as f64);
        }
        Ok(PowerSeries { coeffs: l })
    }

    /// Formal exponential; requires `c₀ = 0`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if self.coeffs[0].norm() > 1e-14 {
            return Err(Error::Precondition(format!(
                "series exp requires constant term 0, got {}",
                self.coeffs[0]
            )));
        }
        let n = self.coeffs.len();
        let mut e = vec![Complex::ZERO; n];
        e[0] = Complex::ONE;
        for m in 1..n {
            let mut acc = Complex::ZERO;
            for j in 1..=m {
                acc += (j as f64) * self.coeffs[j] * e[m - j];
            }
            e[m] = acc / (m as f64);
        }
        Ok(PowerSeries { coeffs: e })
    }

    /// Cauchy product truncated at the shorter order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut c = vec![Complex::ZERO; n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        PowerSeries { coeffs: c }
    }

    /// Evaluates the truncated polynomial and its first three derivatives.
    pub fn eval_jet(&self, z: Complex) -> Jet {
        let zj = Jet::variable(z);
        let mut acc = Jet::constant(self.coeffs[self.coeffs.len() - 1]);
        for i in (0..self.coeffs.len() - 1).rev() {
            acc = acc * zj + Jet::constant(self.coeffs[i]);
        }
        acc
    }
}
