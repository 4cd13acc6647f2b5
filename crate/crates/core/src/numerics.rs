//! Shared numeric kernels: compensated summation, Riemann zeta via
//! Euler–Maclaurin, power-sum tails, Gauss–Legendre rules.

use once_cell::sync::Lazy;
use statrs::function::gamma::gamma;

/// Neumaier-compensated accumulator. Keeps absolute drift near one ulp of
/// the running total regardless of term count.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Bernoulli numbers B_2, B_4, ..., B_14 over (2j)!.
const BERNOULLI_OVER_FACT: [f64; 7] = [
    1.0 / 12.0,                 // B2/2!
    -1.0 / 720.0,               // B4/4!
    1.0 / 30240.0,              // B6/6!
    -1.0 / 1209600.0,           // B8/8!
    1.0 / 47900160.0,           // B10/10!
    -691.0 / 1307674368000.0,   // B12/12!
    7.0 / 74724249600.0,        // B14/14!
];

fn rising(s: f64, count: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..count {
        p *= s + i as f64;
    }
    p
}

/// Tail power sum `sum_{x >= k} x^{-s}` for `s > 1`, by Euler–Maclaurin
/// anchored at `k`. Relative error below 1e-15 for `k >= 16`.
pub fn power_tail(k: u64, s: f64) -> f64 {
    debug_assert!(s > 1.0);
    const ANCHOR: u64 = 64;
    let mut head = Kahan::new();
    let start = k.max(1);
    let anchor = start.max(ANCHOR);
    for x in start..anchor {
        head.add((x as f64).powf(-s));
    }
    let n = anchor as f64;
    let mut t = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    let mut scale = n.powf(-s - 1.0);
    for (j, b) in BERNOULLI_OVER_FACT.iter().enumerate() {
        let order = 2 * j as u32 + 1;
        t += b * rising(s, order) * scale;
        scale /= n * n;
    }
    head.total() + t
}

/// Riemann zeta for `s > 1`.
pub fn zeta(s: f64) -> f64 {
    power_tail(1, s)
}

/// Riemann zeta on the real line, `s < 1`, via the functional equation
/// `zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)`.
/// Valid for the non-integer negative arguments used by the small-angle
/// expansion of the characteristic function.
pub fn zeta_reflected(s: f64) -> f64 {
    debug_assert!(s < 1.0);
    let one_minus = 1.0 - s;
    2f64.powf(s)
        * std::f64::consts::PI.powf(s - 1.0)
        * (std::f64::consts::FRAC_PI_2 * s).sin()
        * gamma(one_minus)
        * zeta(one_minus)
}

/// `Gamma(-a)` for `a` in (0,1), via `Gamma(1-a) / (-a)`.
pub fn gamma_neg(a: f64) -> f64 {
    gamma(1.0 - a) / (-a)
}

pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes and weights on [-1, 1] by Newton iteration on P_n.
    fn build(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = (n + 1) / 2;
        for i in 0..m {
            // Chebyshev-based initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre recurrence for P_n(x) and P'_n(x).
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }
}

pub static GL16: Lazy<GaussLegendre> = Lazy::new(|| GaussLegendre::build(16));
pub static GL32: Lazy<GaussLegendre> = Lazy::new(|| GaussLegendre::build(32));

/// Upper p-quantile in the `sup { t : P(X < t) < p }` sense, for a rational
/// `p = num/den`. Equals the `ceil(p * R)`-th order statistic (1-based).
pub fn quantile_upper(sorted: &[f64], num: usize, den: usize) -> f64 {
    assert!(!sorted.is_empty() && num < den);
    let r = sorted.len();
    let idx = (num * r + den - 1) / den; // ceil(num*r/den)
    sorted[idx.max(1) - 1]
}

/// Median and interquartile values with linear interpolation between order
/// statistics (the common "type 7" rule).
pub fn quantile_interp(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty());
    let r = sorted.len();
    if r == 1 {
        return sorted[0];
    }
    let h = p * (r - 1) as f64;
    let lo = h.floor() as usize;
    let hi = lo.min(r - 2) + 1;
    let frac = h - lo as f64;
    sorted[lo] * (1.0 - frac) + sorted[hi] * frac
}

#[inline]
pub fn abs_i128(x: i128) -> u128 {
    x.unsigned_abs()
}

#[inline]
pub fn u128_to_f64(x: u128) -> f64 {
    x as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zeta_known_values() {
        let pi = std::f64::consts::PI;
        assert_abs_diff_eq!(zeta(2.0), pi * pi / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(zeta(4.0), pi.powi(4) / 90.0, epsilon = 1e-14);
        // Catalan-free spot value from tables.
        assert_abs_diff_eq!(zeta(1.5), 2.612375348685488, epsilon = 1e-12);
        assert_abs_diff_eq!(zeta(3.0), 1.2020569031595943, epsilon = 1e-13);
    }

    #[test]
    fn zeta_reflection_hits_integers() {
        // zeta(-1) = -1/12 approached through nearby non-integer points.
        assert_abs_diff_eq!(zeta_reflected(-0.9999999), -1.0 / 12.0, epsilon = 1e-5);
        assert_abs_diff_eq!(zeta_reflected(-0.5), -0.2078862249773546, epsilon = 1e-12);
    }

    #[test]
    fn power_tail_matches_zeta_difference() {
        let s = 1.25;
        let direct: f64 = (1..100u64).map(|x| (x as f64).powf(-s)).sum();
        assert_abs_diff_eq!(power_tail(100, s), zeta(s) - direct, epsilon = 1e-12);
    }

    #[test]
    fn gl_rules_integrate_polynomials() {
        // GL16 is exact through degree 31.
        let gl = &*GL16;
        let integral: f64 = gl
            .nodes
            .iter()
            .zip(&gl.weights)
            .map(|(x, w)| w * x.powi(20))
            .sum();
        assert_abs_diff_eq!(integral, 2.0 / 21.0, epsilon = 1e-14);
        let gl32 = &*GL32;
        let total: f64 = gl32.weights.iter().sum();
        assert_abs_diff_eq!(total, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn upper_quantile_definition() {
        // sup { t : P(X < t) < p } on small samples, including ties.
        assert_eq!(quantile_upper(&[1.0, 2.0, 3.0], 1, 2), 2.0);
        assert_eq!(quantile_upper(&[1.0, 2.0, 2.0, 3.0], 1, 2), 2.0);
        let six: Vec<f64> = (1..=6).map(f64::from).collect();
        assert_eq!(quantile_upper(&six, 5, 6), 5.0);
        let twenty: Vec<f64> = (1..=20).map(f64::from).collect();
        assert_eq!(quantile_upper(&twenty, 5, 6), 17.0);
    }
}
