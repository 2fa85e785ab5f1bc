//! Two-sample Kolmogorov-Smirnov statistic.

/// Sup-distance between the empirical CDFs of two samples.
pub fn two_sample_ks_statistic(xs: &[f64], ys: &[f64]) -> f64 {
    assert!(!xs.is_empty() && !ys.is_empty(), "samples must be non-empty");
    let mut xs: Vec<f64> = xs.to_vec();
    let mut ys: Vec<f64> = ys.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    ys.sort_unstable_by(f64::total_cmp);

    let (n, m) = (xs.len() as f64, ys.len() as f64);
    let mut stat = 0.0f64;
    let (mut i, mut j) = (0usize, 0usize);
    while i < xs.len() && j < ys.len() {
        let v = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= v {
            i += 1;
        }
        while j < ys.len() && ys[j] <= v {
            j += 1;
        }
        stat = stat.max((i as f64 / n - j as f64 / m).abs());
    }
    stat
}

/// Critical value at the 1% level for two equal samples of size `n`
/// (`1.63 sqrt(2/n)`).
pub fn ks_critical_value_1pct(n: usize) -> f64 {
    1.63 * (2.0 / n as f64).sqrt()
}
