//! One-sample Kolmogorov–Smirnov distance.

use alloc::vec::Vec;

use libm::sqrt;

/// `sup |F_n(x) − F(x)|` between the empirical cdf of `sample` and `cdf`.
pub fn ks_statistic<F: Fn(f64) -> f64>(sample: &[f64], cdf: F) -> f64 {
    let mut sorted: Vec<f64> = sample.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0, |acc: f64, (i, &x)| {
        let f = cdf(x);
        let above = (i as f64 + 1.0) / n - f;
        let below = f - i as f64 / n;
        acc.max(above).max(below)
    })
}

/// Asymptotic critical value `1.63/√n` at significance level 0.01.
pub fn critical_value_01(n: usize) -> f64 {
    1.63 / sqrt(n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_computed_distance() {
        // uniform cdf, points 0.1 0.4 0.7: gaps 1/3−0.1, 0.4−1/3, 2/3−0.4, 0.7−2/3, 1−0.7
        let d = ks_statistic(&[0.7, 0.1, 0.4], |x| x);
        assert!((d - 0.3).abs() < 1e-15);
    }

    #[test]
    fn perfect_grid_has_half_step_distance() {
        let n = 1000;
        let pts: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        assert!((ks_statistic(&pts, |x| x) - 0.5 / n as f64).abs() < 1e-12);
    }

    #[test]
    fn critical_value() {
        assert!((critical_value_01(100_000) - 0.005_154_5).abs() < 1e-6);
    }
}
