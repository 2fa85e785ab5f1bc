//! Trajectory simulation: the empirical gamma-GH Levy construction, its
//! centered version, exact increment sampling over arbitrary partitions, and
//! the Brownian comparison process.
//!
//! A [`Path`] stores increments plus prefix sums, so it occupies `O(n)` memory
//! and can be evaluated at any `t` (and re-partitioned) without re-simulation.

use std::io::{self, Write};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::distributions::{sample_gamma, sample_gamma_gh, GammaGhParams};
use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::variation::Partition;

/// Grid index `[n t / T]` clamped to `[0, n]`.
///
/// A few ulps of slack keep grid points `t = j T / n` on their own index even
/// when `n t / T` rounds a hair below the integer.
pub fn grid_index(n: usize, t: f64, horizon: f64) -> usize {
    let x = (n as f64 * t / horizon) * (1.0 + 4.0 * f64::EPSILON);
    if x <= 0.0 {
        0
    } else if x >= n as f64 {
        n
    } else {
        x.floor() as usize
    }
}

/// A realized trajectory on `[0, T]` over `n` equal cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    horizon: f64,
    increments: Vec<f64>,
    prefix: Vec<f64>,
}

impl Path {
    /// Builds the path from its cell increments; the prefix sums are the
    /// running cumulative totals with `prefix[0] = 0`.
    pub fn from_increments(horizon: f64, increments: Vec<f64>) -> Result<Self> {
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Domain(format!("horizon must be > 0, got {horizon}")));
        }
        if increments.is_empty() {
            return Err(Error::Domain("a path needs at least one increment".into()));
        }
        let mut prefix = Vec::with_capacity(increments.len() + 1);
        let mut acc = 0.0;
        prefix.push(acc);
        for &x in &increments {
            acc += x;
            prefix.push(acc);
        }
        Ok(Self { horizon, increments, prefix })
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Number of cells `n`.
    pub fn cells(&self) -> usize {
        self.increments.len()
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    /// Prefix sums, `n + 1` values starting at 0.
    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }

    /// `Y*_n(t)`: the prefix sum at index `[n t / T]`, zero while the index
    /// is zero and the full sum at `t = T`.
    pub fn value_at(&self, t: f64) -> f64 {
        self.prefix[grid_index(self.cells(), t, self.horizon)]
    }

    pub fn terminal(&self) -> f64 {
        *self.prefix.last().unwrap()
    }

    /// Writes the `t,value` CSV of the grid trajectory. Values round-trip
    /// exactly (up to 17 significant digits).
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "t,value")?;
        let n = self.cells() as f64;
        for (j, v) in self.prefix.iter().enumerate() {
            writeln!(w, "{},{}", j as f64 * self.horizon / n, v)?;
        }
        Ok(())
    }
}

/// Signed increments of a path over the cells of a partition.
#[derive(Debug, Clone, PartialEq)]
pub struct IncrementSet {
    partition: Partition,
    deltas: Vec<f64>,
}

impl IncrementSet {
    pub fn new(partition: Partition, deltas: Vec<f64>) -> Result<Self> {
        if deltas.len() != partition.cells() {
            return Err(Error::Domain(format!(
                "expected {} increments, got {}",
                partition.cells(),
                deltas.len()
            )));
        }
        Ok(Self { partition, deltas })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }
}

/// Simulates `Y*_n` on `[0, T]`: `n` independent gamma-GH increments at time
/// scale `T / n`.
pub fn simulate_path(p: &GammaGhParams, horizon: f64, n: usize, rng: &mut RngStream) -> Path {
    assert!(n >= 1, "need at least one cell");
    let dt = horizon / n as f64;
    let increments = (0..n).map(|_| sample_gamma_gh(p, dt, rng)).collect();
    Path::from_increments(horizon, increments).expect("validated inputs")
}

/// Simulates `Y*_n` with the normal draws taken from `noise` and the gamma
/// mixing draws from `mixing`.
///
/// Runs that share `noise` but use private `mixing` streams see identical
/// normal sequences, which makes paths comparable across parameter sets
/// (common random numbers).
pub fn simulate_path_with_shared_noise(
    p: &GammaGhParams,
    horizon: f64,
    n: usize,
    noise: &mut RngStream,
    mixing: &mut RngStream,
) -> Path {
    assert!(n >= 1, "need at least one cell");
    let dt = horizon / n as f64;
    let increments = (0..n)
        .map(|_| {
            let w = sample_gamma(p.a * dt, p.beta, mixing);
            let z: f64 = noise.sample(StandardNormal);
            p.mu * dt + p.sigma * z * w.sqrt()
        })
        .collect();
    Path::from_increments(horizon, increments).expect("validated inputs")
}

/// Removes the drift: increment `j` loses `mu T / n`, so the result
/// approximates the centered process `Y(t) = Y*(t) - mu t` on the grid.
pub fn center_path(path: &Path, p: &GammaGhParams) -> Path {
    let shift = p.mu * path.horizon() / path.cells() as f64;
    let increments = path.increments().iter().map(|x| x - shift).collect();
    Path::from_increments(path.horizon(), increments).expect("validated inputs")
}

/// Draws one exact centered increment per partition cell:
/// `sigma Z sqrt(W)` with `W ~ gamma(a delta_j, beta)`, cells independent.
///
/// The drift is excluded because the variation analysis works on the centered
/// process; callers add `mu delta_j` themselves when they need it.
pub fn sample_increments(
    p: &GammaGhParams,
    partition: &Partition,
    rng: &mut RngStream,
) -> IncrementSet {
    let deltas = partition
        .deltas()
        .map(|delta| {
            let w = sample_gamma(p.a * delta, p.beta, rng);
            let z: f64 = rng.sample(StandardNormal);
            p.sigma * z * w.sqrt()
        })
        .collect();
    IncrementSet::new(partition.clone(), deltas).expect("one increment per cell")
}

/// The Brownian comparison process `Z^n`: increments are `N(0, T/n)`.
pub fn simulate_brownian(horizon: f64, n: usize, rng: &mut RngStream) -> Path {
    assert!(n >= 1, "need at least one cell");
    let step = (horizon / n as f64).sqrt();
    let increments = (0..n)
        .map(|_| {
            let z: f64 = rng.sample(StandardNormal);
            step * z
        })
        .collect();
    Path::from_increments(horizon, increments).expect("validated inputs")
}

/// Evaluates a path on an arbitrary partition and returns the resulting
/// increments (used for refinement comparisons across partitions).
pub fn increments_on(path: &Path, partition: &Partition) -> IncrementSet {
    let deltas = partition
        .points()
        .windows(2)
        .map(|w| path.value_at(w[1]) - path.value_at(w[0]))
        .collect();
    IncrementSet::new(partition.clone(), deltas).expect("one increment per cell")
}
