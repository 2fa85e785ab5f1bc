//! Partition machinery and the closed-form variation moments.
//!
//! Everything the variation analysis needs at desk scale lives here: the partition
//! type with its mesh statistics, total and quadratic variation of realized
//! increments, partition superposition, the exact per-cell moment
//! `E|Delta_j| = sigma sqrt(2/(pi beta)) Gamma(a d + 1/2) / Gamma(a d)`, and
//! the bound constants `I1, I2, E1, E2` together with the moment bounds they
//! generate.

use serde::Serialize;

use crate::distributions::GammaGhParams;
use crate::error::{Error, Result};
use crate::paths::IncrementSet;
use crate::quad::tail_power_exp_ln;
use crate::special::ln_gamma;

/// A finite partition `0 = t_0 < t_1 < ... < t_l = T` of `[0, T]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Partition {
    points: Vec<f64>,
}

impl Partition {
    /// The uniform partition with `cells` cells of width `T / cells`.
    pub fn uniform(horizon: f64, cells: usize) -> Result<Self> {
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Domain(format!("horizon must be > 0, got {horizon}")));
        }
        if cells == 0 {
            return Err(Error::Domain("a partition needs at least one cell".into()));
        }
        let mut points: Vec<f64> =
            (0..cells).map(|j| j as f64 * horizon / cells as f64).collect();
        points.push(horizon);
        Self::from_points(points)
    }

    /// Builds a partition from explicit points; they must start at 0, be
    /// strictly increasing and finite.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("a partition needs at least two points".into()));
        }
        if points[0] != 0.0 {
            return Err(Error::Domain(format!("partition must start at 0, got {}", points[0])));
        }
        for w in points.windows(2) {
            if !(w[1].is_finite() && w[1] > w[0]) {
                return Err(Error::Domain(format!(
                    "partition points must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Number of cells `l`.
    pub fn cells(&self) -> usize {
        self.points.len() - 1
    }

    pub fn horizon(&self) -> f64 {
        *self.points.last().unwrap()
    }

    /// Cell widths `delta_j = t_{j+1} - t_j`.
    pub fn deltas(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.windows(2).map(|w| w[1] - w[0])
    }

    /// Mesh `m(pi) = max_j delta_j`.
    pub fn mesh(&self) -> f64 {
        self.deltas().fold(0.0, f64::max)
    }

    /// Smallest cell width.
    pub fn min_mesh(&self) -> f64 {
        self.deltas().fold(f64::INFINITY, f64::min)
    }

    pub fn sum_delta_sq(&self) -> f64 {
        self.deltas().map(|d| d * d).sum()
    }
}

/// Sorted union of the given partitions (the proof's `pi*_q`). All inputs
/// must share the same horizon. The result refines every input, so its mesh
/// is no larger than any input mesh and path variation can only grow.
pub fn superpose(partitions: &[Partition]) -> Result<Partition> {
    let Some(first) = partitions.first() else {
        return Err(Error::Domain("superpose needs at least one partition".into()));
    };
    let horizon = first.horizon();
    for p in partitions {
        if p.horizon() != horizon {
            return Err(Error::MismatchedHorizon(format!(
                "expected horizon {horizon}, got {}",
                p.horizon()
            )));
        }
    }
    let mut points: Vec<f64> = partitions.iter().flat_map(|p| p.points().iter().copied()).collect();
    points.sort_unstable_by(f64::total_cmp);
    points.dedup();
    Partition::from_points(points)
}

/// Total variation `V_k`: the sum of absolute increments.
pub fn total_variation(incr: &IncrementSet) -> f64 {
    incr.deltas().iter().map(|d| d.abs()).sum()
}

/// Quadratic variation `V_Q`: the sum of squared increments.
pub fn quadratic_variation(incr: &IncrementSet) -> f64 {
    incr.deltas().iter().map(|d| d * d).sum()
}

/// Exact `E|Delta_j|` for a cell of width `delta`, evaluated through
/// log-gamma differences so tiny shapes cannot overflow.
pub fn expected_abs_increment(p: &GammaGhParams, delta: f64) -> f64 {
    assert!(delta > 0.0 && delta.is_finite(), "cell width must be > 0, got {delta}");
    let shape = p.a * delta;
    let h = (ln_gamma(shape + 0.5) - ln_gamma(shape)).exp();
    p.sigma * (2.0 / (std::f64::consts::PI * p.beta)).sqrt() * h
}

/// The constants behind the total-variation mean bounds.
///
/// `I1 = integral_1^inf x^{-1/2} e^{-x} dx`, `I2 = integral_1^inf x^{-1} e^{-x} dx`,
/// `E1 = 2/e + I1`, `E2 = e (2 + I1)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TheoryConstants {
    pub i1: f64,
    pub i2: f64,
    pub e1: f64,
    pub e2: f64,
}

impl TheoryConstants {
    /// Computes the constants by quadrature to 1e-12.
    pub fn compute() -> Result<Self> {
        let i1 = tail_power_exp_ln(-0.5, 1e-12)?.exp();
        let i2 = tail_power_exp_ln(-1.0, 1e-12)?.exp();
        let e = std::f64::consts::E;
        Ok(Self { i1, i2, e1: 2.0 / e + i1, e2: (2.0 + i1) * e })
    }

    /// The asymptotic sandwich on the mean total variation:
    /// `sigma sqrt(2/(pi beta)) E_i a T`.
    pub fn mean_variation_bounds(&self, p: &GammaGhParams, horizon: f64) -> (f64, f64) {
        let front = p.sigma * (2.0 / (std::f64::consts::PI * p.beta)).sqrt() * p.a * horizon;
        (front * self.e1, front * self.e2)
    }
}

/// Closed-form moments of the total variation `V_k` on a partition.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VariationTheory {
    /// Exact mean: sum of per-cell `E|Delta_j|`.
    pub mean_exact: f64,
    /// Asymptotic lower bound on the mean (mesh -> 0).
    pub bound_lo: f64,
    /// Asymptotic upper bound on the mean (mesh -> 0).
    pub bound_hi: f64,
    /// Exact finite-mesh variance: sum of `sigma^2 a d / beta - (E|Delta_j|)^2`.
    pub var_finite_mesh: f64,
    /// Mesh -> 0 limit of the variance, `sigma^2 a T / beta`.
    pub var_limit: f64,
}

/// Evaluates every total-variation moment formula on the given partition.
pub fn variation_moment_theory(p: &GammaGhParams, partition: &Partition) -> Result<VariationTheory> {
    let constants = TheoryConstants::compute()?;
    let horizon = partition.horizon();
    let (bound_lo, bound_hi) = constants.mean_variation_bounds(p, horizon);
    let mut mean_exact = 0.0;
    let mut var_finite_mesh = 0.0;
    for delta in partition.deltas() {
        let e_abs = expected_abs_increment(p, delta);
        mean_exact += e_abs;
        var_finite_mesh += p.sigma * p.sigma * p.a * delta / p.beta - e_abs * e_abs;
    }
    Ok(VariationTheory {
        mean_exact,
        bound_lo,
        bound_hi,
        var_finite_mesh,
        var_limit: p.sigma * p.sigma * p.a * horizon / p.beta,
    })
}

/// Closed-form moments of the quadratic variation `V_Q` on a partition.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QvTheory {
    /// Exact mean `a sigma^2 T / beta` (mesh independent).
    pub mean: f64,
    /// Exact finite-mesh variance
    /// `2 sigma^4 a^2 / beta^2 sum delta_j^2 + 3 a sigma^4 T / beta^2`.
    pub var_finite_mesh: f64,
    /// Mesh -> 0 limit of the variance, `3 a sigma^4 T / beta^2`.
    pub var_limit: f64,
}

/// Evaluates every quadratic-variation moment formula on the given partition.
pub fn qv_moment_theory(p: &GammaGhParams, partition: &Partition) -> QvTheory {
    let horizon = partition.horizon();
    let s2 = p.sigma * p.sigma;
    let s4 = s2 * s2;
    let b2 = p.beta * p.beta;
    let var_limit = 3.0 * p.a * s4 * horizon / b2;
    QvTheory {
        mean: p.a * s2 * horizon / p.beta,
        var_finite_mesh: 2.0 * s4 * p.a * p.a / b2 * partition.sum_delta_sq() + var_limit,
        var_limit,
    }
}
