//! Test statistics shared by the verification oracles and experiments:
//! chi-square criticals, Kolmogorov–Smirnov distances, DKW bands,
//! binomial intervals, and log-log regression.

use crate::error::Error;
use crate::Result;
use statrs::distribution::{ChiSquared, ContinuousCDF, StudentsT};

/// Upper critical value of chi-square with `cells - 1` degrees of freedom.
pub fn chi_square_critical(cells: usize, level: f64) -> f64 {
    assert!(cells >= 2);
    let df = (cells - 1) as f64;
    ChiSquared::new(df).unwrap().inverse_cdf(1.0 - level)
}

/// Pearson statistic over (observed, expected) pairs.
pub fn chi_square_stat(pairs: &[(f64, f64)]) -> f64 {
    pairs
        .iter()
        .map(|&(o, e)| {
            debug_assert!(e > 0.0);
            (o - e) * (o - e) / e
        })
        .sum()
}

/// Asymptotic Kolmogorov critical constant: P(K > c) = level.
fn kolmogorov_constant(level: f64) -> f64 {
    // K(x) = 1 - 2 sum (-1)^(k-1) exp(-2 k^2 x^2), inverted by bisection.
    let target = 1.0 - level;
    let k_cdf = |x: f64| {
        let mut s = 0.0;
        for k in 1..100 {
            let term = (-2.0 * (k * k) as f64 * x * x).exp();
            s += if k % 2 == 1 { term } else { -term };
        }
        1.0 - 2.0 * s
    };
    let (mut lo, mut hi) = (0.2, 4.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if k_cdf(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// One-sample KS test of `samples` against a CDF; returns (statistic, pass).
pub fn ks_one_sample<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F, level: f64) -> (f64, bool) {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len();
    let mut d: f64 = 0.0;
    for (i, x) in samples.iter().enumerate() {
        let f = cdf(*x);
        d = d.max((f - i as f64 / n as f64).abs());
        d = d.max(((i + 1) as f64 / n as f64 - f).abs());
    }
    let crit = kolmogorov_constant(level) / (n as f64).sqrt();
    (d, d < crit)
}

/// Two-sample KS test; returns (statistic, pass).
pub fn ks_two_sample(a: &mut [f64], b: &mut [f64], level: f64) -> (f64, bool) {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (n, m) = (a.len(), b.len());
    assert!(n > 0 && m > 0);
    let mut d: f64 = 0.0;
    let (mut i, mut j) = (0usize, 0usize);
    while i < n && j < m {
        let x = a[i].min(b[j]);
        while i < n && a[i] <= x {
            i += 1;
        }
        while j < m && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let crit = kolmogorov_constant(level) * ((n + m) as f64 / (n as f64 * m as f64)).sqrt();
    (d, d < crit)
}

/// Dvoretzky–Kiefer–Wolfowitz half-width at confidence `1 - delta`.
pub fn dkw_epsilon(n: usize, delta: f64) -> f64 {
    ((2.0 / delta).ln() / (2.0 * n as f64)).sqrt()
}

/// Wilson 95% interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Ordinary least squares of `ln(value)` on `ln(n)`: slope and its 95%
/// confidence interval. Requires at least 3 points, strictly increasing
/// abscissae, and positive values.
pub fn fit_exponent(series: &[(f64, f64)]) -> Result<(f64, f64, f64)> {
    if series.len() < 3 {
        return Err(Error::FitDomain);
    }
    for w in series.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(Error::FitDomain);
        }
    }
    if series.iter().any(|&(n, v)| n <= 0.0 || v <= 0.0) {
        return Err(Error::FitDomain);
    }
    let k = series.len() as f64;
    let xs: Vec<f64> = series.iter().map(|&(n, _)| n.ln()).collect();
    let ys: Vec<f64> = series.iter().map(|&(_, v)| v.ln()).collect();
    let xbar = xs.iter().sum::<f64>() / k;
    let ybar = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let rss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - intercept - slope * x;
            r * r
        })
        .sum();
    let df = series.len() - 2;
    let se = if df == 0 {
        0.0
    } else {
        (rss / df as f64 / sxx).sqrt()
    };
    let half = if se == 0.0 || rss <= 1e-24 {
        0.0
    } else {
        let t = StudentsT::new(0.0, 1.0, df as f64).unwrap().inverse_cdf(0.975);
        t * se
    };
    Ok((slope, slope - half, slope + half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn chi_square_known_critical() {
        // 99th percentile of chi2 with 10 df is 23.209.
        assert_abs_diff_eq!(chi_square_critical(11, 0.01), 23.2092511589544, epsilon = 1e-3);
    }

    #[test]
    fn kolmogorov_constant_level_01() {
        assert_abs_diff_eq!(kolmogorov_constant(0.01), 1.6276, epsilon = 1e-3);
    }

    #[test]
    fn exact_power_law_slope() {
        let series = [(2.0, 4.0), (4.0, 16.0), (8.0, 64.0)];
        let (slope, lo, hi) = fit_exponent(&series).unwrap();
        assert_abs_diff_eq!(slope, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(lo, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(hi, 2.0, epsilon = 1e-9);
    }

    #[test]
    fn fit_rejects_bad_domains() {
        assert!(fit_exponent(&[(1.0, 2.0), (2.0, 3.0)]).is_err());
        assert!(fit_exponent(&[(1.0, 2.0), (2.0, -3.0), (3.0, 4.0)]).is_err());
        assert!(fit_exponent(&[(1.0, 2.0), (1.0, 3.0), (3.0, 4.0)]).is_err());
    }

    proptest! {
        #[test]
        fn slope_scale_invariance(c in 0.01f64..100.0, beta in -3.0f64..3.0) {
            let series: Vec<(f64, f64)> =
                (1..=5).map(|i| {
                    let n = (2u64 << i) as f64;
                    (n, c * n.powf(beta))
                }).collect();
            let (slope, _, _) = fit_exponent(&series).unwrap();
            prop_assert!((slope - beta).abs() < 1e-9);
        }
    }

    #[test]
    fn ks_accepts_uniform() {
        let mut xs: Vec<f64> = (0..2000).map(|i| (i as f64 + 0.5) / 2000.0).collect();
        let (_, pass) = ks_one_sample(&mut xs, |x| x.clamp(0.0, 1.0), 0.01);
        assert!(pass);
    }

    #[test]
    fn wilson_brackets_proportion() {
        let (lo, hi) = wilson_interval(50, 100);
        assert!(lo < 0.5 && 0.5 < hi);
        assert!(hi - lo < 0.25);
    }
}
