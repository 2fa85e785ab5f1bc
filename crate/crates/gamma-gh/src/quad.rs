//! Double-exponential quadrature over `(0, +inf)`.
//!
//! The substitution `x = exp(kappa * sinh(u))` turns every integral handled
//! here into a real-line integral whose tails decay double-exponentially, so
//! the plain trapezoid rule converges superalgebraically. Levels halve the
//! step until two successive levels agree to the requested relative
//! tolerance.
//!
//! All integrands are passed as their natural logarithm and sums are shifted
//! by an analytically known estimate of the log-maximum, so the engine never
//! overflows even when the integral itself is astronomically large or small.

use crate::error::{Error, Result};

/// Default relative tolerance for every quadrature in the crate.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

const KAPPA: f64 = 1.0;
const H0: f64 = 0.5;
const MAX_LEVEL: u32 = 12;
// A term is negligible once it falls this far below the largest term seen.
const TRUNC_RATIO: f64 = 1e-22;
// How many consecutive negligible terms end a side. Keeps a dip near u = 0
// from truncating before an off-center mode is reached.
const CONSEC_NEEDED: u32 = 6;
const J_CAP: usize = 2_000_000;

/// `ln` of `integral_0^inf f(x) dx`, where `log_f(x, ln_x) = ln f(x)`.
///
/// `ln_x_mode` is the (closed-form) maximizer of `ln f(x) + ln x`; the
/// trapezoid lattice is centered there so sharply peaked integrands are never
/// truncated before their mass is reached. `shift` must be within a few
/// hundred of the maximum itself.
pub(crate) fn exp_sinh_ln<F>(log_f: F, ln_x_mode: f64, shift: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    assert!(rel_tol > 0.0 && rel_tol < 1.0, "rel_tol out of range: {rel_tol}");
    let term = |u: f64| -> f64 {
        let t = KAPPA * u.sinh();
        let x = t.exp();
        let lt = log_f(x, t) + t + (KAPPA * u.cosh()).ln() - shift;
        let v = lt.exp();
        // inf - inf at the extreme tails; the true term is 0 there.
        if v.is_nan() {
            0.0
        } else {
            v
        }
    };
    let center = (ln_x_mode / KAPPA).asinh();

    let mut prev = f64::NAN;
    let mut last_change = f64::INFINITY;
    for level in 0..=MAX_LEVEL {
        let h = H0 / f64::from(1u32 << level);
        let mut total = term(center);
        let mut max_term = total;
        for side in [1.0f64, -1.0] {
            let mut consec = 0u32;
            let mut j = 1usize;
            while consec < CONSEC_NEEDED && j <= J_CAP {
                let v = term(center + side * j as f64 * h);
                if v.is_infinite() {
                    // A shifted term can only overflow when the integral
                    // itself diverges (or overflows f64): give up now.
                    return Err(Error::QuadratureFailure { rel_tol, last_change });
                }
                total += v;
                max_term = max_term.max(v);
                if v <= max_term * TRUNC_RATIO {
                    consec += 1;
                } else {
                    consec = 0;
                }
                j += 1;
            }
        }
        let integral = h * total;
        if level >= 2 && prev.is_finite() && integral > 0.0 {
            last_change = (integral - prev).abs() / integral;
            if last_change <= rel_tol {
                return Ok(shift + integral.ln());
            }
        }
        prev = integral;
    }
    Err(Error::QuadratureFailure { rel_tol, last_change })
}

/// `ln` of `integral_1^inf x^p e^{-x} dx` for `p <= 0` (the bound constants
/// `I1`, `I2` are the cases `p = -1/2` and `p = -1`).
pub(crate) fn tail_power_exp_ln(p: f64, rel_tol: f64) -> Result<f64> {
    // Shift by x = 1 + y; the transformed integrand peaks below e^{-1} at
    // the root of y^2 - p y - 1 = 0.
    let y_mode = 0.5 * (p + (p * p + 4.0).sqrt());
    exp_sinh_ln(|y, _ln_y| p * y.ln_1p() - 1.0 - y, y_mode.ln(), -1.0, rel_tol)
}
