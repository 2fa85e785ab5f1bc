//! Schedule-independent summary statistics.
//!
//! Replication loops materialize one value per replication (in replication
//! order) and aggregate here with pairwise summation, so the result depends
//! only on the values and their order, never on how work was scheduled.

/// Pairwise (cascade) summation over the slice in its given order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 128;
    if xs.len() <= BLOCK {
        xs.iter().sum()
    } else {
        let mid = xs.len() / 2;
        pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    assert!(!xs.is_empty());
    pairwise_sum(xs) / xs.len() as f64
}

/// Unbiased sample variance (two-pass).
pub fn sample_variance(xs: &[f64]) -> f64 {
    assert!(xs.len() >= 2);
    let m = mean(xs);
    let sq: Vec<f64> = xs.iter().map(|&x| (x - m) * (x - m)).collect();
    pairwise_sum(&sq) / (xs.len() - 1) as f64
}

/// Standard error of the sample mean.
pub fn standard_error(xs: &[f64]) -> f64 {
    (sample_variance(xs) / xs.len() as f64).sqrt()
}

/// Pearson correlation coefficient.
pub fn correlation(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2);
    let mx = mean(xs);
    let my = mean(ys);
    let cross: Vec<f64> = xs.iter().zip(ys).map(|(&x, &y)| (x - mx) * (y - my)).collect();
    let cov = pairwise_sum(&cross) / (xs.len() - 1) as f64;
    cov / (sample_variance(xs) * sample_variance(ys)).sqrt()
}
