//! Minimal complex arithmetic for characteristic-function values.
//!
//! Values are kept as an explicit `(re, im)` pair so that conjugation and the
//! power identities used by the infinite-divisibility checks stay exact at the
//! floating-point level.

use std::ops::{Add, Mul, Sub};

use serde::Serialize;

/// A complex number stored as real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ONE: ComplexValue = ComplexValue { re: 1.0, im: 0.0 };
    pub const ZERO: ComplexValue = ComplexValue { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// `e^{i theta}` scaled by `r`.
    pub fn from_polar(r: f64, theta: f64) -> Self {
        Self { re: r * theta.cos(), im: r * theta.sin() }
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Scales both components by a real factor.
    pub fn scale(self, k: f64) -> Self {
        Self { re: k * self.re, im: k * self.im }
    }

    /// Integer power by repeated multiplication.
    pub fn powi(self, n: u32) -> Self {
        let mut acc = ComplexValue::ONE;
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_exact() {
        let z = ComplexValue::from_polar(0.7, 1.3);
        let w = ComplexValue::from_polar(0.7, -1.3);
        assert_eq!(z.conj(), w);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let z = ComplexValue::new(0.3, -0.4);
        assert_eq!(z.powi(0), ComplexValue::ONE);
        assert_eq!(z.powi(3), z * z * z);
    }

    #[test]
    fn modulus_of_unit_phase() {
        let z = ComplexValue::from_polar(1.0, 2.1);
        assert!((z.modulus() - 1.0).abs() < 1e-15);
    }
}
