//! Report types shared by the Monte Carlo experiments.
//!
//! Every pass/fail decision is recorded as a [`Check`] carrying the tolerance
//! and the tolerance's source, so no threshold is silent. Reports serialize
//! to JSON with a fixed field order; identical inputs give identical bytes.

use serde::Serialize;

/// How a check compares its observed value against the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `|observed - target| <= tolerance`
    WithinAbs,
    /// `observed <= target`
    UpperBound,
    /// `observed >= target`
    LowerBound,
}

/// One named pass/fail comparison with its tolerance provenance.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub observed: f64,
    pub target: f64,
    /// Allowed absolute deviation (0 for pure bound checks).
    pub tolerance: f64,
    /// Where the tolerance comes from: "3*SE", "4/sqrt(N)", a KS critical
    /// value, or a documented relative tolerance.
    pub tolerance_source: String,
    pub pass: bool,
}

impl Check {
    pub fn within_abs(
        name: impl Into<String>,
        observed: f64,
        target: f64,
        tolerance: f64,
        source: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::WithinAbs,
            observed,
            target,
            tolerance,
            tolerance_source: source.into(),
            pass: (observed - target).abs() <= tolerance,
        }
    }

    pub fn upper_bound(
        name: impl Into<String>,
        observed: f64,
        limit: f64,
        source: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::UpperBound,
            observed,
            target: limit,
            tolerance: 0.0,
            tolerance_source: source.into(),
            pass: observed <= limit,
        }
    }

    pub fn lower_bound(
        name: impl Into<String>,
        observed: f64,
        limit: f64,
        source: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::LowerBound,
            observed,
            target: limit,
            tolerance: 0.0,
            tolerance_source: source.into(),
            pass: observed >= limit,
        }
    }
}

/// Theory-versus-Monte-Carlo moments for one variation functional on one
/// partition.
#[derive(Debug, Clone, Serialize)]
pub struct MomentReport {
    pub label: String,
    pub mean_theory: f64,
    pub mean_mc: f64,
    pub mean_se: f64,
    pub var_theory: f64,
    pub var_mc: f64,
    pub var_limit: f64,
    pub bounds_lo: Option<f64>,
    pub bounds_hi: Option<f64>,
    pub mesh: f64,
    pub cells: usize,
    pub replications: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl MomentReport {
    pub fn csv_header() -> &'static str {
        "label,mesh,cells,replications,mean_theory,mean_mc,mean_se,var_theory,var_mc,var_limit,bounds_lo,bounds_hi,pass"
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.label,
            self.mesh,
            self.cells,
            self.replications,
            self.mean_theory,
            self.mean_mc,
            self.mean_se,
            self.var_theory,
            self.var_mc,
            self.var_limit,
            opt(self.bounds_lo),
            opt(self.bounds_hi),
            self.pass
        )
    }
}

/// Mesh ladder for the quadratic variation, gamma-GH arm against the paired
/// Brownian control.
#[derive(Debug, Clone, Serialize)]
pub struct QvLadderReport {
    pub gamma_gh: Vec<MomentReport>,
    pub brownian: Vec<MomentReport>,
    /// Variance plateau at the finest mesh.
    pub plateau: Check,
    /// The Brownian control's variance must collapse instead.
    pub brownian_shrink: Check,
    pub pass: bool,
}

impl QvLadderReport {
    /// One CSV row per (process, mesh) pair.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(MomentReport::csv_header());
        out.push('\n');
        for r in self.gamma_gh.iter().chain(&self.brownian) {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }
}

/// Empirical-versus-exact characteristic function on a symmetric grid.
#[derive(Debug, Clone, Serialize)]
pub struct CharfnReport {
    pub replications: usize,
    pub u_grid: Vec<f64>,
    /// `|empirical - exact|` per grid point.
    pub errors: Vec<f64>,
    pub max_error: f64,
    pub mc_bound: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Infinite-divisibility diagnostics: sums-of-parts against direct draws.
#[derive(Debug, Clone, Serialize)]
pub struct IdecompReport {
    pub n_parts: u32,
    pub replications: usize,
    pub ks_statistic: f64,
    pub ks_critical: f64,
    /// Max distance between the two empirical characteristic functions.
    pub charfn_max_distance: f64,
    /// Max error of the algebraic identity psi_{a/n}(u)^n = psi_a(u).
    pub power_identity_max_error: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Finite-dimensional-distribution convergence diagnostics for one increment
/// `Y*_n(t2) - Y*_n(t1)`.
#[derive(Debug, Clone, Serialize)]
pub struct FddReport {
    pub grid_n: usize,
    pub t1: f64,
    pub t2: f64,
    pub replications: usize,
    /// Number of grid cells spanned by `(t1, t2]`.
    pub cells_spanned: usize,
    pub max_error_vs_limit: f64,
    pub max_error_vs_finite_n: f64,
    /// Exact distance between the finite-n and limit characteristic
    /// functions (closed forms, no sampling).
    pub discretization_gap: f64,
    pub mc_bound: f64,
    pub increment_correlation: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}
