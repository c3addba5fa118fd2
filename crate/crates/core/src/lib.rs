//! Numerical toolkit for k-fold symmetric starlike logharmonic mappings
//! of the unit disk.
//!
//! A logharmonic mapping here has the form `f(z) = z·h(z)·conj(g(z))` with
//! `h = exp(Σ aₙₖ z^{nk})` and `g = exp(Σ bₙₖ z^{nk})` analytic, coupled to
//! an analytic dilatation `ω` (`|ω| < 1`, `ω(0) = 0`) through the first-order
//! system `(conj f)_z / conj f = ω · f_z / f`.  The crate evaluates the
//! extremal (Koebe-type) family of the class together with several worked
//! examples, the sharp growth / distortion / coefficient / area bounds, the
//! six improved Bohr-type radius equations (solved with a guaranteed
//! bracketing root finder and a dilogarithm kernel), and the pre-Schwarzian
//! and Schwarzian derivatives with their chain rules.
//!
//! Modules follow the pipeline:
//!
//! * [`numerics`] — dilogarithm, principal powers, truncated power series,
//!   bracketed root finding, adaptive quadrature, 4-jet derivatives;
//! * [`mappings`] — construction and pointwise evaluation of the maps;
//! * [`bounds`] — every closed-form inequality of the class;
//! * [`radii`] — Bohr-type radius equations, majorant sums, starlikeness radii;
//! * [`area`] — area bounds `2πL₁ ≤ Ar ≤ 2πL₂` and direct Jacobian areas;
//! * [`schwarzian`] — `P_f = (log J_f)_z` and `S_f = P_f' − ½P_f²`;
//! * [`verify`] — seeded, deterministic property suites over all of the above.
//!
//! ```
//! use logharm::radii::{solve_radius, RadiusId};
//! use logharm::{LogharmonicMap, Params};
//!
//! let params = Params::new(0.0, 1).unwrap();
//!
//! // improved Bohr radius of the class
//! let root = solve_radius(RadiusId::R1, params, 1e-10).unwrap();
//! assert!((root.value - 0.0758).abs() < 5e-4);
//!
//! // the extremal map attains the growth bound on the positive real axis
//! let koebe = LogharmonicMap::koebe(params);
//! let f = koebe.eval(logharm::Complex::new(0.5, 0.0)).unwrap();
//! assert!((f.norm() - 0.5 * 4.0_f64.exp()).abs() < 1e-9);
//! ```

#![allow(clippy::needless_range_loop)] // convolution recurrences read better indexed
#![allow(clippy::neg_cmp_op_on_partial_ord)] // negated guards also reject NaN

pub mod area;
pub mod bounds;
mod error;
pub mod mappings;
pub mod numerics;
pub mod radii;
pub mod reference;
pub mod schwarzian;
pub mod verify;

pub use error::{Error, Result};
pub use mappings::{LogharmonicMap, Params};
pub use numerics::{Jet, PowerSeries, Quadrature, RootResult};
pub use radii::{RadiusEquation, RadiusId};

/// Complex double-precision scalar used throughout.
pub type Complex = num_complex::Complex64;
