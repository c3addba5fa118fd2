//! Degree-3 Taylor jets of analytic functions.
//!
//! A [`Jet`] carries the local Taylor coefficients `c₀..c₃` of an analytic
//! function about an evaluation point, i.e. `f`, `f′`, `f″/2!`, `f‴/3!`.
//! Arithmetic on jets is truncated Taylor arithmetic, so every closed-form
//! map evaluator in this crate gets exact first, second and third
//! derivatives without any finite differencing.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::Complex;

const N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    /// Taylor coefficients about the expansion point.
    c: [Complex; N],
}

impl Jet {
    pub fn constant(value: Complex) -> Self {
        let mut c = [Complex::ZERO; N];
        c[0] = value;
        Jet { c }
    }

    pub fn real_constant(value: f64) -> Self {
        Self::constant(Complex::new(value, 0.0))
    }

    /// The identity function `ζ ↦ ζ` expanded at `z`.
    pub fn variable(z: Complex) -> Self {
        let mut c = [Complex::ZERO; N];
        c[0] = z;
        c[1] = Complex::ONE;
        Jet { c }
    }

    /// The monomial `ζ ↦ ζᵐ` expanded at `z`, by closed-form binomials.
    pub fn monomial(z: Complex, m: u32) -> Self {
        let mut c = [Complex::ZERO; N];
        let mut binom = 1.0;
        for (i, slot) in c.iter_mut().enumerate() {
            let i = i as u32;
            if i > m {
                break;
            }
            if i > 0 {
                binom *= f64::from(m - i + 1) / f64::from(i);
            }
            *slot = binom * z.powu(m - i);
        }
        Jet { c }
    }

    pub fn value(self) -> Complex {
        self.c[0]
    }

    pub fn d1(self) -> Complex {
        self.c[1]
    }

    pub fn d2(self) -> Complex {
        2.0 * self.c[2]
    }

    pub fn d3(self) -> Complex {
        6.0 * self.c[3]
    }

    /// Taylor coefficient `cᵢ` (`f⁽ⁱ⁾/i!`).
    pub fn coeff(self, i: usize) -> Complex {
        self.c[i]
    }

    pub fn from_coeffs(c: [Complex; N]) -> Self {
        Jet { c }
    }

    /// Jet of the derivative (one order of accuracy is lost: the top
    /// coefficient of the result is unknown and set to zero).
    pub fn derivative(self) -> Self {
        let mut c = [Complex::ZERO; N];
        for i in 1..N {
            c[i - 1] = (i as f64) * self.c[i];
        }
        Jet { c }
    }

    pub fn is_finite(self) -> bool {
        self.c.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }

    pub fn exp(self) -> Self {
        let mut e = [Complex::ZERO; N];
        e[0] = self.c[0].exp();
        for n in 1..N {
            let mut acc = Complex::ZERO;
            for j in 1..=n {
                acc += (j as f64) * self.c[j] * e[n - j];
            }
            e[n] = acc / (n as f64);
        }
        Jet { c: e }
    }

    /// Principal logarithm; requires a nonzero value at the point.
    pub fn ln(self) -> Self {
        let mut l = [Complex::ZERO; N];
        l[0] = self.c[0].ln();
        for n in 1..N {
            let mut acc = (n as f64) * self.c[n];
            for j in 1..n {
                acc -= (j as f64) * l[j] * self.c[n - j];
            }
            l[n] = acc / ((n as f64) * self.c[0]);
        }
        Jet { c: l }
    }

    /// Principal power with a real exponent, `exp(p·ln(self))`.
    pub fn powf(self, p: f64) -> Self {
        (self.ln() * p).exp()
    }

    pub fn powu(self, mut m: u32) -> Self {
        let mut acc = Jet::constant(Complex::ONE);
        let mut base = self;
        while m > 0 {
            if m & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            m >>= 1;
        }
        acc
    }

    pub fn recip(self) -> Self {
        Jet::constant(Complex::ONE) / self
    }

    /// Composition `outer ∘ inner`: `outer` must be expanded at
    /// `inner.value()`.
    pub fn compose(outer: Jet, inner: Jet) -> Jet {
        let mut shifted = inner;
        shifted.c[0] = Complex::ZERO;
        let mut acc = Jet::constant(outer.c[N - 1]);
        for i in (0..N - 1).rev() {
            acc = acc * shifted + Jet::constant(outer.c[i]);
        }
        acc
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for i in 0..N {
            c[i] += rhs.c[i];
        }
        Jet { c }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for i in 0..N {
            c[i] -= rhs.c[i];
        }
        Jet { c }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let mut c = self.c;
        for v in &mut c {
            *v = -*v;
        }
        Jet { c }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut c = [Complex::ZERO; N];
        for i in 0..N {
            for j in 0..N - i {
                c[i + j] += self.c[i] * rhs.c[j];
            }
        }
        Jet { c }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        let mut q = [Complex::ZERO; N];
        for n in 0..N {
            let mut acc = self.c[n];
            for j in 0..n {
                acc -= q[j] * rhs.c[n - j];
            }
            q[n] = acc / rhs.c[0];
        }
        Jet { c: q }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        let mut c = self.c;
        for v in &mut c {
            *v *= rhs;
        }
        Jet { c }
    }
}

impl Mul<Complex> for Jet {
    type Output = Jet;
    fn mul(self, rhs: Complex) -> Jet {
        let mut c = self.c;
        for v in &mut c {
            *v *= rhs;
        }
        Jet { c }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut c = self.c;
        c[0] += rhs;
        Jet { c }
    }
}
