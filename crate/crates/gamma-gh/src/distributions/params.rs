use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(a, beta, mu, sigma)` of the gamma-GH law and of the Levy
/// process built on it.
///
/// The law is the normal variance mixture `mu + sigma * Z * sqrt(W)` with
/// `Z ~ N(0,1)` independent of `W ~ gamma(a, beta)`; `beta` is the *rate* of
/// the mixing gamma law. At process time `t` the margin has shape `a * t` and
/// drift `mu * t` with `beta`, `sigma` unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaGhParams {
    /// Shape of the mixing gamma law per unit time.
    pub a: f64,
    /// Rate of the mixing gamma law.
    pub beta: f64,
    /// Drift per unit time.
    pub mu: f64,
    /// Scale of the normal component.
    pub sigma: f64,
}

impl GammaGhParams {
    pub fn new(a: f64, beta: f64, mu: f64, sigma: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("beta", beta), ("mu", mu), ("sigma", sigma)] {
            if !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be finite, got {v}")));
            }
        }
        if a <= 0.0 {
            return Err(Error::Domain(format!("a must be > 0, got {a}")));
        }
        if beta <= 0.0 {
            return Err(Error::Domain(format!("beta must be > 0, got {beta}")));
        }
        if sigma <= 0.0 {
            return Err(Error::Domain(format!("sigma must be > 0, got {sigma}")));
        }
        Ok(Self { a, beta, mu, sigma })
    }
}

/// Parameters of the generalized inverse gamma integrand
/// `x^{a-1} e^{-(b x + c / x) / 2}`.
///
/// The admissible region is exactly where the normalizing integral converges:
///
/// - `a = 0`: `b > 0` and `c > 0`
/// - `a > 0`: `b > 0` and `c >= 0`
/// - `a < 0`: `b >= 0` and `c > 0`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GigParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GigParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || !c.is_finite() {
            return Err(Error::Domain(format!("gig parameters must be finite, got ({a}, {b}, {c})")));
        }
        if b < 0.0 || c < 0.0 {
            return Err(Error::Domain(format!("gig requires b >= 0 and c >= 0, got b = {b}, c = {c}")));
        }
        if c == 0.0 && a <= 0.0 {
            return Err(Error::DivergentIntegral(format!("c = 0 requires a > 0, got a = {a}")));
        }
        if b == 0.0 && a >= 0.0 {
            return Err(Error::DivergentIntegral(format!("b = 0 requires a < 0, got a = {a}")));
        }
        Ok(Self { a, b, c })
    }
}

/// Inverse gamma parameters `(a, beta)`, density `beta^a / Gamma(a) *
/// x^{-(a+1)} e^{-beta / x}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IgParams {
    pub a: f64,
    pub beta: f64,
}

impl IgParams {
    pub fn new(a: f64, beta: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::Domain(format!("ig shape a must be finite and > 0, got {a}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Domain(format!("ig rate beta must be finite and > 0, got {beta}")));
        }
        Ok(Self { a, beta })
    }
}
