//! Characteristic function and moment transform of the gamma-GH law.

use crate::complex::ComplexValue;
use crate::distributions::params::GammaGhParams;

/// Characteristic function of the margin at `time_scale` (use 1 for the plain
/// law):
///
/// `psi(u) = exp(i mu time_scale u) (1 + sigma^2 u^2 / (2 beta))^{-a time_scale}`
///
/// The modulus is at most 1 and `psi(0) = 1` exactly.
pub fn charfn_gamma_gh(p: &GammaGhParams, time_scale: f64, u: f64) -> ComplexValue {
    assert!(time_scale > 0.0 && time_scale.is_finite(), "time_scale must be > 0");
    let modulus = (1.0 + p.sigma * p.sigma * u * u / (2.0 * p.beta)).powf(-p.a * time_scale);
    ComplexValue::from_polar(modulus, p.mu * time_scale * u)
}

/// Laplace-style moment transform of the mixing gamma law:
/// `H_g(t) = E e^{-t W} = (1 + t / beta)^{-a}`, decreasing from `H_g(0) = 1`.
pub fn moment_transform_gamma(p: &GammaGhParams, t: f64) -> f64 {
    assert!(t >= 0.0, "moment transform argument must be >= 0, got {t}");
    (1.0 + t / p.beta).powf(-p.a)
}
