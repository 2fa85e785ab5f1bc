//! Monte Carlo harness tying the closed-form moments to simulation.
//!
//! Replication `r` of any experiment draws from `RngStream::new(master_seed,
//! r)`; per-replication results are materialized in replication order and
//! aggregated with pairwise summation, so a report depends only on its
//! configuration, never on worker count or scheduling.

mod ks;
mod report;

pub use ks::{ks_critical_value_1pct, two_sample_ks_statistic};
pub use report::{Check, CheckKind, CharfnReport, FddReport, IdecompReport, MomentReport, QvLadderReport};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::ComplexValue;
use crate::distributions::{charfn_gamma_gh, sample_gamma_gh, GammaGhParams};
use crate::error::{Error, Result};
use crate::paths::{sample_increments, simulate_brownian, simulate_path, IncrementSet};
use crate::rng::RngStream;
use crate::stats::{correlation, mean, pairwise_sum, sample_variance, standard_error};
use crate::variation::{
    qv_moment_theory, quadratic_variation, total_variation, variation_moment_theory, Partition,
};

/// How the experiment's partition is specified.
#[derive(Debug, Clone, Serialize)]
pub enum PartitionSpec {
    Uniform { cells: usize },
    Explicit { points: Vec<f64> },
}

impl PartitionSpec {
    pub fn build(&self, horizon: f64) -> Result<Partition> {
        match self {
            PartitionSpec::Uniform { cells } => Partition::uniform(horizon, *cells),
            PartitionSpec::Explicit { points } => {
                let p = Partition::from_points(points.clone())?;
                if p.horizon() != horizon {
                    return Err(Error::MismatchedHorizon(format!(
                        "partition ends at {}, config horizon is {horizon}",
                        p.horizon()
                    )));
                }
                Ok(p)
            }
        }
    }
}

/// Configuration shared by the Monte Carlo experiments.
#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloConfig {
    pub replications: usize,
    pub master_seed: u64,
    pub params: GammaGhParams,
    pub horizon: f64,
    pub partition: PartitionSpec,
    /// Grid for characteristic-function comparisons; must be symmetric
    /// about 0.
    pub u_grid: Vec<f64>,
}

impl MonteCarloConfig {
    pub fn validate(&self) -> Result<()> {
        if self.replications < 100 {
            return Err(Error::Domain(format!(
                "need at least 100 replications for standard errors, got {}",
                self.replications
            )));
        }
        if !(self.horizon.is_finite() && self.horizon > 0.0) {
            return Err(Error::Domain(format!("horizon must be > 0, got {}", self.horizon)));
        }
        if self.u_grid.is_empty() || self.u_grid.iter().any(|u| !u.is_finite()) {
            return Err(Error::Domain("u_grid must be non-empty and finite".into()));
        }
        let mut sorted = self.u_grid.clone();
        sorted.sort_unstable_by(f64::total_cmp);
        for i in 0..sorted.len() {
            if sorted[i] + sorted[sorted.len() - 1 - i] != 0.0 {
                return Err(Error::Domain("u_grid must be symmetric about 0".into()));
            }
        }
        Ok(())
    }
}

/// The 21-point grid `-5, -4.5, ..., 5` used by the characteristic-function
/// diagnostics.
pub fn default_u_grid() -> Vec<f64> {
    (-10..=10).map(|k| k as f64 * 0.5).collect()
}

/// Empirical characteristic function of `samples` at `u`, aggregated with
/// pairwise sums.
pub fn empirical_charfn(samples: &[f64], u: f64) -> ComplexValue {
    let cos: Vec<f64> = samples.iter().map(|&x| (u * x).cos()).collect();
    let sin: Vec<f64> = samples.iter().map(|&x| (u * x).sin()).collect();
    let n = samples.len() as f64;
    ComplexValue::new(pairwise_sum(&cos) / n, pairwise_sum(&sin) / n)
}

/// Mean, standard error and sample variance of one replication vector.
struct SampleMoments {
    mean: f64,
    se: f64,
    var: f64,
}

impl SampleMoments {
    fn of(values: &[f64]) -> Self {
        Self { mean: mean(values), se: standard_error(values), var: sample_variance(values) }
    }
}

fn moment_checks(
    label: &str,
    mc: &SampleMoments,
    mean_theory: f64,
    var_theory: f64,
    var_rel_tol: f64,
    var_tol_source: &str,
) -> Vec<Check> {
    vec![
        Check::within_abs(
            format!("{label} mean vs exact theory"),
            mc.mean,
            mean_theory,
            3.0 * mc.se,
            "3*SE",
        ),
        Check::within_abs(
            format!("{label} variance vs finite-mesh theory"),
            mc.var,
            var_theory,
            var_rel_tol * var_theory,
            var_tol_source,
        ),
    ]
}

/// Simulates `V_k` on the configured partition and compares both moments to
/// the closed forms. Statistical misses are recorded as failed checks,
/// not errors.
pub fn run_variation_experiment(cfg: &MonteCarloConfig) -> Result<MomentReport> {
    cfg.validate()?;
    let partition = cfg.partition.build(cfg.horizon)?;
    let theory = variation_moment_theory(&cfg.params, &partition)?;

    let values: Vec<f64> = (0..cfg.replications)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(cfg.master_seed, r as u64);
            total_variation(&sample_increments(&cfg.params, &partition, &mut rng))
        })
        .collect();
    let mc = SampleMoments::of(&values);

    let mut checks = moment_checks(
        "total variation",
        &mc,
        theory.mean_exact,
        theory.var_finite_mesh,
        0.05,
        "documented 5% relative tolerance at 1e4 replications",
    );
    checks.push(Check::lower_bound(
        "total variation mean above the asymptotic lower bound",
        mc.mean,
        theory.bound_lo,
        "sigma sqrt(2/(pi beta)) E1 a T",
    ));
    checks.push(Check::upper_bound(
        "total variation mean below the asymptotic upper bound",
        mc.mean,
        theory.bound_hi,
        "sigma sqrt(2/(pi beta)) E2 a T",
    ));
    let pass = checks.iter().all(|c| c.pass);
    Ok(MomentReport {
        label: "gamma-gh total variation".into(),
        mean_theory: theory.mean_exact,
        mean_mc: mc.mean,
        mean_se: mc.se,
        var_theory: theory.var_finite_mesh,
        var_mc: mc.var,
        var_limit: theory.var_limit,
        bounds_lo: Some(theory.bound_lo),
        bounds_hi: Some(theory.bound_hi),
        mesh: partition.mesh(),
        cells: partition.cells(),
        replications: cfg.replications,
        checks,
        pass,
    })
}

/// Runs `V_Q` over a ladder of uniform meshes with a paired Brownian control
/// (same partitions, same replication count, same stream indices).
///
/// The final checks are the headline contrast: the gamma-GH variance stays
/// on its plateau at the finest mesh while the Brownian variance collapses.
pub fn run_qv_experiment(cfg: &MonteCarloConfig, mesh_ladder: &[usize]) -> Result<QvLadderReport> {
    cfg.validate()?;
    if mesh_ladder.is_empty() {
        return Err(Error::Domain("mesh ladder must name at least one cell count".into()));
    }
    if mesh_ladder.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("mesh ladder cell counts must be increasing".into()));
    }

    let mut gamma_reports = Vec::with_capacity(mesh_ladder.len());
    let mut brownian_reports = Vec::with_capacity(mesh_ladder.len());
    for &cells in mesh_ladder {
        let partition = Partition::uniform(cfg.horizon, cells)?;
        let theory = qv_moment_theory(&cfg.params, &partition);

        let values: Vec<f64> = (0..cfg.replications)
            .into_par_iter()
            .map(|r| {
                let mut rng = RngStream::new(cfg.master_seed, r as u64);
                quadratic_variation(&sample_increments(&cfg.params, &partition, &mut rng))
            })
            .collect();
        let mc = SampleMoments::of(&values);
        let checks = moment_checks(
            "quadratic variation",
            &mc,
            theory.mean,
            theory.var_finite_mesh,
            0.10,
            "documented 10% relative tolerance (V_Q variance estimator is heavy-tailed)",
        );
        let pass = checks.iter().all(|c| c.pass);
        gamma_reports.push(MomentReport {
            label: "gamma-gh quadratic variation".into(),
            mean_theory: theory.mean,
            mean_mc: mc.mean,
            mean_se: mc.se,
            var_theory: theory.var_finite_mesh,
            var_mc: mc.var,
            var_limit: theory.var_limit,
            bounds_lo: None,
            bounds_hi: None,
            mesh: partition.mesh(),
            cells,
            replications: cfg.replications,
            checks,
            pass,
        });

        // Paired Brownian control: E V_Q = T, Var V_Q = 2 sum delta_j^2.
        let values: Vec<f64> = (0..cfg.replications)
            .into_par_iter()
            .map(|r| {
                let mut rng = RngStream::new(cfg.master_seed, r as u64);
                let path = simulate_brownian(cfg.horizon, cells, &mut rng);
                let incr = IncrementSet::new(partition.clone(), path.increments().to_vec())
                    .expect("grid increments match the partition");
                quadratic_variation(&incr)
            })
            .collect();
        let mc = SampleMoments::of(&values);
        let var_theory = 2.0 * partition.sum_delta_sq();
        let checks = vec![
            Check::within_abs(
                "Brownian quadratic variation mean vs horizon",
                mc.mean,
                cfg.horizon,
                3.0 * mc.se,
                "3*SE",
            ),
            Check::upper_bound(
                "Brownian quadratic variation variance shrinks with the mesh",
                mc.var,
                2.2 * var_theory,
                "2.2 x normal fourth-moment variance (10% sampling allowance)",
            ),
        ];
        let pass = checks.iter().all(|c| c.pass);
        brownian_reports.push(MomentReport {
            label: "brownian quadratic variation".into(),
            mean_theory: cfg.horizon,
            mean_mc: mc.mean,
            mean_se: mc.se,
            var_theory,
            var_mc: mc.var,
            var_limit: 0.0,
            bounds_lo: None,
            bounds_hi: None,
            mesh: partition.mesh(),
            cells,
            replications: cfg.replications,
            checks,
            pass,
        });
    }

    let finest_gamma = gamma_reports.last().expect("ladder non-empty");
    let plateau = Check::lower_bound(
        "gamma-gh V_Q variance plateau at the finest mesh",
        finest_gamma.var_mc,
        0.9 * finest_gamma.var_limit,
        "0.9 x limiting variance 3 a sigma^4 T / beta^2",
    );
    let brownian_shrink = Check::upper_bound(
        "Brownian V_Q variance collapse at the finest mesh",
        brownian_reports.last().expect("ladder non-empty").var_mc,
        0.1 * brownian_reports[0].var_mc,
        "0.1 x coarsest-mesh Brownian variance",
    );
    let pass = gamma_reports.iter().chain(&brownian_reports).all(|r| r.pass)
        && plateau.pass
        && brownian_shrink.pass;
    Ok(QvLadderReport { gamma_gh: gamma_reports, brownian: brownian_reports, plateau, brownian_shrink, pass })
}

/// Draws `replications` exact samples of the margin law and compares the
/// empirical characteristic function to the closed form over the grid.
pub fn run_charfn_check(cfg: &MonteCarloConfig) -> Result<CharfnReport> {
    cfg.validate()?;
    let n = cfg.replications;
    let samples: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(cfg.master_seed, r as u64);
            sample_gamma_gh(&cfg.params, cfg.horizon, &mut rng)
        })
        .collect();

    let errors: Vec<f64> = cfg
        .u_grid
        .par_iter()
        .map(|&u| {
            let emp = empirical_charfn(&samples, u);
            let exact = charfn_gamma_gh(&cfg.params, cfg.horizon, u);
            (emp - exact).modulus()
        })
        .collect();
    let max_error = errors.iter().fold(0.0f64, |m, &e| m.max(e));
    let mc_bound = 4.0 / (n as f64).sqrt();
    let checks = vec![Check::upper_bound(
        "max empirical charfn error over the grid",
        max_error,
        mc_bound,
        "4/sqrt(N)",
    )];
    let pass = checks.iter().all(|c| c.pass);
    Ok(CharfnReport {
        replications: n,
        u_grid: cfg.u_grid.clone(),
        errors,
        max_error,
        mc_bound,
        checks,
        pass,
    })
}

/// Compares `N` sums of `n_parts` iid `gamma-gh(a/n_parts, beta, 0,
/// mu/n_parts, sigma)` draws with `N` direct draws of the full law, plus the
/// closed-form root identity of the characteristic function.
pub fn run_idecomp_check(
    p: &GammaGhParams,
    n_parts: u32,
    replications: usize,
    master_seed: u64,
) -> Result<IdecompReport> {
    if n_parts == 0 {
        return Err(Error::Domain("n_parts must be >= 1".into()));
    }
    if replications < 100 {
        return Err(Error::Domain("need at least 100 replications".into()));
    }
    let part_scale = 1.0 / f64::from(n_parts);
    // Streams 0..N for the sums, N..2N for the direct draws.
    let sums: Vec<f64> = (0..replications)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(master_seed, r as u64);
            (0..n_parts).map(|_| sample_gamma_gh(p, part_scale, &mut rng)).sum()
        })
        .collect();
    let direct: Vec<f64> = (0..replications)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(master_seed, (replications + r) as u64);
            sample_gamma_gh(p, 1.0, &mut rng)
        })
        .collect();

    let ks_statistic = two_sample_ks_statistic(&sums, &direct);
    let ks_critical = ks_critical_value_1pct(replications);

    let grid = default_u_grid();
    let charfn_max_distance = grid
        .iter()
        .map(|&u| (empirical_charfn(&sums, u) - empirical_charfn(&direct, u)).modulus())
        .fold(0.0f64, f64::max);

    // psi_{a/n}(u)^n = psi_a(u) exactly, checked in closed form.
    let root = GammaGhParams::new(p.a * part_scale, p.beta, p.mu * part_scale, p.sigma)?;
    let power_identity_max_error = grid
        .iter()
        .map(|&u| {
            let lhs = charfn_gamma_gh(&root, 1.0, u).powi(n_parts);
            let rhs = charfn_gamma_gh(p, 1.0, u);
            (lhs - rhs).modulus()
        })
        .fold(0.0f64, f64::max);

    let checks = vec![
        Check::upper_bound(
            "two-sample KS below the 1% critical value",
            ks_statistic,
            ks_critical,
            "KS critical value 1.63 sqrt(2/N)",
        ),
        Check::upper_bound(
            "charfn root identity psi_{a/n}^n = psi_a",
            power_identity_max_error,
            1e-12,
            "floating-point identity tolerance 1e-12",
        ),
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(IdecompReport {
        n_parts,
        replications,
        ks_statistic,
        ks_critical,
        charfn_max_distance,
        power_identity_max_error,
        checks,
        pass,
    })
}

/// Simulates the empirical construction at resolution `n` and compares the
/// characteristic function of `Y*_n(t2) - Y*_n(t1)` against the limit law,
/// separating Monte Carlo error from the closed-form discretization gap.
pub fn run_fdd_check(
    p: &GammaGhParams,
    horizon: f64,
    grid_n: usize,
    times: (f64, f64),
    replications: usize,
    master_seed: u64,
) -> Result<FddReport> {
    let (t1, t2) = times;
    if !(0.0 < t1 && t1 < t2 && t2 <= horizon) {
        return Err(Error::Domain(format!(
            "need 0 < t1 < t2 <= horizon, got t1 = {t1}, t2 = {t2}, horizon = {horizon}"
        )));
    }
    if grid_n == 0 {
        return Err(Error::Domain("grid_n must be >= 1".into()));
    }
    if replications < 100 {
        return Err(Error::Domain("need at least 100 replications".into()));
    }

    let pairs: Vec<(f64, f64)> = (0..replications)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(master_seed, r as u64);
            let path = simulate_path(p, horizon, grid_n, &mut rng);
            (path.value_at(t1), path.value_at(t2))
        })
        .collect();
    let diffs: Vec<f64> = pairs.iter().map(|(y1, y2)| y2 - y1).collect();

    let k1 = crate::paths::grid_index(grid_n, t1, horizon);
    let k2 = crate::paths::grid_index(grid_n, t2, horizon);
    let cells_spanned = k2 - k1;
    let finite_scale = horizon * cells_spanned as f64 / grid_n as f64;
    let finite_n = |u: f64| {
        if cells_spanned == 0 {
            ComplexValue::ONE
        } else {
            charfn_gamma_gh(p, finite_scale, u)
        }
    };
    let limit = |u: f64| charfn_gamma_gh(p, t2 - t1, u);

    let grid = default_u_grid();
    let mut max_error_vs_limit = 0.0f64;
    let mut max_error_vs_finite_n = 0.0f64;
    let mut discretization_gap = 0.0f64;
    for &u in &grid {
        let emp = empirical_charfn(&diffs, u);
        max_error_vs_limit = max_error_vs_limit.max((emp - limit(u)).modulus());
        max_error_vs_finite_n = max_error_vs_finite_n.max((emp - finite_n(u)).modulus());
        discretization_gap = discretization_gap.max((finite_n(u) - limit(u)).modulus());
    }
    let mc_bound = 4.0 / (replications as f64).sqrt();

    let y1: Vec<f64> = pairs.iter().map(|(a, _)| *a).collect();
    let increment_correlation = correlation(&y1, &diffs);
    let corr_bound = 3.0 / (replications as f64).sqrt();

    let checks = vec![
        Check::upper_bound(
            "empirical charfn vs limit law",
            max_error_vs_limit,
            mc_bound + discretization_gap,
            "4/sqrt(N) + closed-form discretization gap",
        ),
        Check::upper_bound(
            "empirical charfn vs finite-n law",
            max_error_vs_finite_n,
            mc_bound,
            "4/sqrt(N)",
        ),
        Check::within_abs(
            "independence of Y*(t1) and Y*(t2) - Y*(t1)",
            increment_correlation,
            0.0,
            corr_bound,
            "3/sqrt(N)",
        ),
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(FddReport {
        grid_n,
        t1,
        t2,
        replications,
        cells_spanned,
        max_error_vs_limit,
        max_error_vs_finite_n,
        discretization_gap,
        mc_bound,
        increment_correlation,
        checks,
        pass,
    })
}
