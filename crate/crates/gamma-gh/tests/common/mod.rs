#![allow(dead_code)] // shared by several test binaries, each using a subset

//! Independent numerical oracles for the integration tests.
//!
//! Everything here deliberately avoids the crate's double-exponential engine:
//! adaptive Simpson recursion on transformed finite intervals, so agreement
//! between the two routes is evidence, not tautology.

/// Adaptive Simpson with Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fb, fm, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        step(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1)
            + step(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1)
    }
}

/// `integral_1^inf x^p e^{-x} dx` for `p < 0` via `v = e^{1-x}`:
/// `e^{-1} integral_0^1 (1 - ln v)^p dv`.
pub fn tail_power_exp_simpson(p: f64, tol: f64) -> f64 {
    let f = |v: f64| {
        if v <= 0.0 {
            0.0
        } else {
            (1.0 - v.ln()).powf(p)
        }
    };
    (-1.0f64).exp() * adaptive_simpson(&f, 0.0, 1.0, tol)
}

/// Modified Bessel function of the second kind, real order:
/// `K_nu(x) = integral_0^inf e^{-x cosh t} cosh(nu t) dt`.
pub fn bessel_k(nu: f64, x: f64) -> f64 {
    assert!(x > 0.0);
    let nu = nu.abs(); // K_{-nu} = K_nu
    // Truncate where the integrand falls below ~1e-320.
    let t_max = ((760.0 + 40.0 * nu) / x).acosh();
    let f = |t: f64| (-x * t.cosh() + (nu * t).cosh().ln()).exp();
    adaptive_simpson(&f, 0.0, t_max, 1e-14)
}

/// Brute-force `C(a, b, c)` for `b > 0`, `c > 0`: Simpson on `[0, 1]` plus the
/// reflected tail (`x = 1/w`).
pub fn gig_constant_simpson(a: f64, b: f64, c: f64, tol: f64) -> f64 {
    assert!(b > 0.0 && c > 0.0, "brute-force route needs interior parameters");
    let head = |x: f64| {
        if x <= 0.0 {
            0.0
        } else {
            ((a - 1.0) * x.ln() - 0.5 * (b * x + c / x)).exp()
        }
    };
    let tail = |w: f64| {
        if w <= 0.0 {
            0.0
        } else {
            ((-a - 1.0) * w.ln() - 0.5 * (b / w + c * w)).exp()
        }
    };
    adaptive_simpson(&head, 0.0, 1.0, tol) + adaptive_simpson(&tail, 0.0, 1.0, tol)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn simpson_on_polynomials() {
        let v = adaptive_simpson(&|x| x * x, 0.0, 3.0, 1e-12);
        assert!((v - 9.0).abs() < 1e-10);
    }

    #[test]
    fn bessel_half_order_closed_form() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            let want = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
            let got = bessel_k(0.5, x);
            assert!((got / want - 1.0).abs() < 1e-10, "x = {x}: {got} vs {want}");
        }
    }
}
