//! Green function of the walk via Fourier inversion:
//! `G(x) = (1/2pi) Int_{-pi}^{pi} cos(theta x) / (1 - phi(theta)) dtheta`.
//!
//! Two evaluation routes share the integrand:
//!
//! * `green_quadrature` — adaptive Gauss–Legendre panels in the substituted
//!   variable `v = theta^(1-alpha)`, which absorbs the `theta^(-alpha)`
//!   singularity at the origin. Used for isolated arguments and the small-x
//!   part of the cache.
//! * the table builder — a midpoint grid plus FFT (a DCT-II) after
//!   subtracting the two leading singular terms of `1/(1-phi)`; the
//!   subtracted pieces are restored through analytic oscillatory integrals.
//!   Both routes are spliced and cross-checked at build time.
//!
//! Beyond the cache the table extrapolates with a fitted coefficient on the
//! known power decay, evaluated through logarithms so astronomically large
//! arguments never overflow.

use crate::error::Error;
use crate::numerics::{self, Kahan, GL16, GL32};
use crate::rng::{derive, StreamLabel};
use crate::steplaw::StepLaw;
use crate::{Result, Site};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use statrs::function::gamma::gamma;
use std::f64::consts::PI;
use std::io::{BufRead, Write};

pub const DEFAULT_X_CACHE: u32 = 1 << 16;
pub const DEFAULT_QUAD_TOL: f64 = 1e-9;

/// Largest argument handled by the per-x adaptive quadrature.
const MAX_QUAD_X: u128 = 1 << 20;

/// Cache entries below this argument are always filled by the adaptive
/// route; the FFT route covers the rest and must agree on the overlap.
const SMALL_DIRECT: u32 = 64;

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TableHeader {
    version: u32,
    alpha: f64,
    x_cache: u32,
    quad_tolerance: f64,
    asym_coeff: f64,
    fit_slope: f64,
    fit_residual_std: f64,
}

/// Cached Green function values plus the fitted asymptotic coefficient.
#[derive(Clone, Debug)]
pub struct GreenTable {
    alpha: f64,
    x_cache: u32,
    values: Vec<f64>,
    asym_coeff: f64,
    fit_slope: f64,
    fit_residual_std: f64,
    band_lo: f64,
    band_hi: f64,
    quad_tolerance: f64,
}

impl GreenTable {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn x_cache(&self) -> u32 {
        self.x_cache
    }

    /// Fitted coefficient of the `|x|^(alpha-1)` decay beyond the cache.
    pub fn asym_coeff(&self) -> f64 {
        self.asym_coeff
    }

    pub fn fit_slope(&self) -> f64 {
        self.fit_slope
    }

    pub fn fit_residual_std(&self) -> f64 {
        self.fit_residual_std
    }

    /// Observed band of `G(x) |x|^(1-alpha)` over the cache.
    pub fn band(&self) -> (f64, f64) {
        (self.band_lo, self.band_hi)
    }

    pub fn quad_tolerance(&self) -> f64 {
        self.quad_tolerance
    }

    /// `G(x)`: cache lookup below the cutoff, logarithmic power evaluation
    /// beyond it.
    #[inline]
    pub fn green(&self, x: Site) -> f64 {
        let m = numerics::abs_i128(x);
        if m <= self.x_cache as u128 {
            self.values[m as usize]
        } else {
            self.asym(m)
        }
    }

    #[inline]
    fn asym(&self, m: u128) -> f64 {
        let lnm = numerics::u128_to_f64(m).ln();
        self.asym_coeff * ((self.alpha - 1.0) * lnm).exp()
    }

    /// Hex digest identifying this table in output headers.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.alpha.to_le_bytes());
        h.update(self.x_cache.to_le_bytes());
        h.update(self.quad_tolerance.to_le_bytes());
        h.update(self.asym_coeff.to_le_bytes());
        for v in &self.values {
            h.update(v.to_le_bytes());
        }
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Versioned textual dump: a JSON header line, then one value per line.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        let header = TableHeader {
            version: 1,
            alpha: self.alpha,
            x_cache: self.x_cache,
            quad_tolerance: self.quad_tolerance,
            asym_coeff: self.asym_coeff,
            fit_slope: self.fit_slope,
            fit_residual_std: self.fit_residual_std,
        };
        writeln!(w, "{}", serde_json::to_string(&header)?)?;
        for v in &self.values {
            writeln!(w, "{v}")?;
        }
        Ok(())
    }

    pub fn load<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header_line = lines
            .next()
            .ok_or_else(|| Error::LogFormat("empty green table".into()))??;
        let header: TableHeader = serde_json::from_str(&header_line)?;
        if header.version != 1 {
            return Err(Error::LogFormat(format!(
                "unsupported green table version {}",
                header.version
            )));
        }
        let mut values = Vec::with_capacity(header.x_cache as usize + 1);
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            values.push(
                line.parse::<f64>()
                    .map_err(|e| Error::LogFormat(format!("bad value: {e}")))?,
            );
        }
        if values.len() != header.x_cache as usize + 1 {
            return Err(Error::LogFormat(format!(
                "expected {} values, found {}",
                header.x_cache + 1,
                values.len()
            )));
        }
        let (band_lo, band_hi) = scan_band(header.alpha, &values);
        Ok(Self {
            alpha: header.alpha,
            x_cache: header.x_cache,
            values,
            asym_coeff: header.asym_coeff,
            fit_slope: header.fit_slope,
            fit_residual_std: header.fit_residual_std,
            band_lo,
            band_hi,
            quad_tolerance: header.quad_tolerance,
        })
    }
}

fn scan_band(alpha: f64, values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for (x, g) in values.iter().enumerate().skip(1) {
        let r = g * (x as f64).powf(1.0 - alpha);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    (lo, hi)
}

/// `G(x)` by adaptive quadrature for a single argument.
///
/// The substitution `v = theta^(1-alpha)` turns the integrable singularity
/// into a bounded integrand; panels then bisect on an embedded 16/32-point
/// Gauss–Legendre error estimate until the local share of `tol` is met.
pub fn green_quadrature(law: &StepLaw, x: Site, tol: f64) -> Result<f64> {
    let m = numerics::abs_i128(x);
    assert!(m <= MAX_QUAD_X, "adaptive route is for |x| <= 2^20");
    let alpha = law.alpha();
    let xf = m as f64;
    let vmax = PI.powf(1.0 - alpha);
    let inv = 1.0 / (1.0 - alpha);

    let integrand = |v: f64| -> f64 {
        let theta = v.powf(inv);
        // theta^alpha / (1 - phi) stays bounded as v -> 0.
        let weight = if theta > 0.0 {
            theta.powf(alpha) / law.one_minus_char(theta)
        } else {
            1.0 / law.singular_coeff()
        };
        (theta * xf).cos() * weight * inv
    };

    let panel = |v0: f64, v1: f64| -> (f64, f64) {
        let c = 0.5 * (v0 + v1);
        let r = 0.5 * (v1 - v0);
        let mut coarse = 0.0;
        for (n, w) in GL16.nodes.iter().zip(&GL16.weights) {
            coarse += w * integrand(c + r * n);
        }
        let mut fine = 0.0;
        for (n, w) in GL32.nodes.iter().zip(&GL32.weights) {
            fine += w * integrand(c + r * n);
        }
        (fine * r, (fine - coarse).abs() * r)
    };

    // The theta-integral equals pi * G; budget the tolerance there.
    let tol_i = tol * PI;
    let n0 = (m as usize).clamp(8, 1 << 15);
    let mut stack: Vec<(f64, f64)> = (0..n0)
        .rev()
        .map(|i| {
            (
                vmax * i as f64 / n0 as f64,
                vmax * (i + 1) as f64 / n0 as f64,
            )
        })
        .collect();
    let mut acc = Kahan::new();
    let mut panels = 0usize;
    const MAX_PANELS: usize = 1 << 21;
    while let Some((v0, v1)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::QuadratureBudget {
                panels,
                residual: tol_i,
            });
        }
        let (val, err) = panel(v0, v1);
        if err <= tol_i * (v1 - v0) / vmax || (v1 - v0) < 1e-14 {
            acc.add(val);
        } else {
            let mid = 0.5 * (v0 + v1);
            stack.push((mid, v1));
            stack.push((v0, mid));
        }
    }
    Ok(acc.total() / PI)
}

/// `Int_0^pi theta^beta cos(theta x) dtheta` for `x >= 1`, via the
/// regularized infinite integral minus an integration-by-parts tail.
/// Accurate once `pi x` is large; callers keep `x >= 64`.
fn oscillatory_power_integral(beta: f64, x: f64) -> f64 {
    debug_assert!(x >= 1.0 && beta > -1.0);
    let cap_x = PI * x;
    let full = gamma(beta + 1.0) * (PI * (beta + 1.0) / 2.0).cos();
    // T(beta, X) = Int_X^inf u^beta e^{iu} du by downward recursion.
    let eix = Complex64::from_polar(1.0, cap_x);
    let i = Complex64::new(0.0, 1.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut prefactor = Complex64::new(1.0, 0.0);
    let mut pow = cap_x.powf(beta);
    let mut b = beta;
    for k in 0..48 {
        total += prefactor * i * eix * pow;
        prefactor *= i * b;
        b -= 1.0;
        pow /= cap_x;
        if b < -1.0 {
            // |T(b, X)| <= X^(b+1) / (-1 - b)
            let bound = prefactor.norm() * cap_x.powf(b + 1.0) / (-1.0 - b);
            if bound < 1e-18 || k == 47 {
                break;
            }
        }
    }
    let value = full - total.re;
    x.powf(-beta - 1.0) * value
}

/// DCT-II of `f` (length must be a power of two): output
/// `k -> sum_n f[n] cos(pi k (2n+1) / (2N))`.
fn dct2(f: &[f64]) -> Vec<f64> {
    let n = f.len();
    assert!(n.is_power_of_two());
    let mut buf: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n / 2 {
        buf[j] = Complex64::new(f[2 * j], 0.0);
        buf[n - 1 - j] = Complex64::new(f[2 * j + 1], 0.0);
    }
    let mut planner = rustfft::FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);
    buf.iter()
        .enumerate()
        .map(|(k, y)| (y * Complex64::from_polar(1.0, -PI * k as f64 / (2.0 * n as f64))).re)
        .collect()
}

/// Builds the cached table: adaptive quadrature for small arguments, the
/// subtracted-singularity FFT route for the bulk, then the asymptotic fit.
pub fn build_table(law: &StepLaw, x_cache: u32, quad_tol: f64) -> Result<GreenTable> {
    assert!(x_cache >= 1 << 10, "cache must span at least 2^10 arguments");
    let alpha = law.alpha();
    let small = SMALL_DIRECT.min(x_cache);

    let mut values = vec![0.0f64; x_cache as usize + 1];
    let direct: Vec<(usize, f64)> = (0..=small as usize)
        .into_par_iter()
        .map(|x| Ok((x, green_quadrature(law, x as Site, quad_tol)?)))
        .collect::<Result<_>>()?;
    for (x, g) in direct {
        values[x] = g;
    }

    if x_cache > small {
        let n_grid = ((x_cache as usize) * 64).next_power_of_two().max(1 << 20);
        let h = PI / n_grid as f64;
        let a = law.singular_coeff();
        let b = law.curvature_coeff();
        let a1 = 1.0 / a;
        let a2 = -b / (a * a);
        let d: Vec<f64> = (0..n_grid)
            .into_par_iter()
            .map(|j| {
                let theta = (j as f64 + 0.5) * h;
                let u = law.one_minus_char(theta);
                1.0 / u - (a1 * theta.powf(-alpha) + a2 * theta.powf(2.0 - 2.0 * alpha))
            })
            .collect();
        let transform = dct2(&d);
        let eval_fft = |x: usize| -> f64 {
            let xf = x as f64;
            (h * transform[x]
                + a1 * oscillatory_power_integral(-alpha, xf)
                + a2 * oscillatory_power_integral(2.0 - 2.0 * alpha, xf))
                / PI
        };
        let fill: Vec<(usize, f64)> = (small as usize + 1..=x_cache as usize)
            .into_par_iter()
            .map(|x| (x, eval_fft(x)))
            .collect();
        for (x, g) in fill {
            values[x] = g;
        }

        // Splice audit: the two routes must agree where they overlap.
        for probe in [small as usize - 1, small as usize] {
            let fft_val = eval_fft(probe);
            let adaptive = values[probe];
            if (fft_val - adaptive).abs() > 1e-6 * adaptive.abs().max(1e-3) {
                return Err(Error::QuadratureBudget {
                    panels: probe,
                    residual: (fft_val - adaptive).abs(),
                });
            }
        }
    }

    // Positivity and maximality at the origin.
    if values[0] < 1.0 {
        return Err(Error::QuadratureBudget {
            panels: 0,
            residual: values[0],
        });
    }
    for (x, v) in values.iter().enumerate().skip(1) {
        if !(*v > 0.0 && *v <= values[0]) {
            return Err(Error::QuadratureBudget {
                panels: x,
                residual: *v,
            });
        }
    }

    // Fixed-slope least squares for the asymptotic coefficient over the top
    // decade of the cache; a free-slope fit is kept for diagnostics.
    let fit_lo = (x_cache / 10).max(2);
    let mut shift = Kahan::new();
    let mut count = 0usize;
    for x in fit_lo..=x_cache {
        shift.add(values[x as usize].ln() - (alpha - 1.0) * (x as f64).ln());
        count += 1;
    }
    let ln_a = shift.total() / count as f64;
    let asym_coeff = ln_a.exp();
    let mut rss = Kahan::new();
    for x in fit_lo..=x_cache {
        let r = values[x as usize].ln() - (ln_a + (alpha - 1.0) * (x as f64).ln());
        rss.add(r * r);
    }
    let fit_residual_std = (rss.total() / count as f64).sqrt();
    let series: Vec<(f64, f64)> = (fit_lo..=x_cache)
        .step_by(((x_cache - fit_lo) as usize / 64).max(1))
        .map(|x| (x as f64, values[x as usize]))
        .collect();
    let (fit_slope, _, _) = crate::stats::fit_exponent(&series)?;

    let (band_lo, band_hi) = scan_band(alpha, &values);

    let table = GreenTable {
        alpha,
        x_cache,
        values,
        asym_coeff,
        fit_slope,
        fit_residual_std,
        band_lo,
        band_hi,
        quad_tolerance: quad_tol,
    };

    // Boundary continuity between cache and extrapolation.
    let inside = table.values[x_cache as usize];
    let outside = table.asym(x_cache as u128 + 1);
    if ((inside - outside) / inside).abs() > 0.02 {
        return Err(Error::QuadratureBudget {
            panels: x_cache as usize,
            residual: ((inside - outside) / inside).abs(),
        });
    }
    Ok(table)
}

/// Confidence interval for `G(x)` from visit counting.
#[derive(Clone, Copy, Debug)]
pub struct GreenInterval {
    pub lo: f64,
    pub hi: f64,
    pub mean: f64,
    pub stderr: f64,
    pub bias_bound: f64,
}

impl GreenInterval {
    pub fn contains(&self, g: f64) -> bool {
        self.lo <= g && g <= self.hi
    }
}

/// Monte Carlo oracle: mean visit count to `x` over `n_walks` walks of
/// `t_max` steps from the origin, widened by three standard errors and a
/// post-horizon bias allowance `A_G m^(alpha-1)` at the 10th displacement
/// percentile.
pub fn mc_green_estimate(
    law: &StepLaw,
    table: &GreenTable,
    x: Site,
    n_walks: usize,
    t_max: usize,
    seed: u64,
) -> Result<GreenInterval> {
    Ok(mc_green_estimate_multi(law, table, &[x], n_walks, t_max, seed)?.remove(0))
}

/// Visit counting for several arguments sharing one ensemble of walks.
pub fn mc_green_estimate_multi(
    law: &StepLaw,
    table: &GreenTable,
    xs: &[Site],
    n_walks: usize,
    t_max: usize,
    seed: u64,
) -> Result<Vec<GreenInterval>> {
    assert!(n_walks >= 1_000, "too few walks for the interval contract");
    const CHUNK: usize = 1 << 12;
    let n_chunks = n_walks.div_ceil(CHUNK);
    let k = xs.len();

    struct ChunkStat {
        sums: Vec<f64>,
        sq: Vec<f64>,
        finals: Vec<Vec<f64>>,
    }

    let stats: Vec<ChunkStat> = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| -> Result<ChunkStat> {
            let mut rng = derive(seed, StreamLabel::Chunk, chunk as u64);
            let walks = CHUNK.min(n_walks - chunk * CHUNK);
            let mut sums = vec![0.0; k];
            let mut sq = vec![0.0; k];
            let mut finals = vec![Vec::with_capacity(walks); k];
            for _ in 0..walks {
                let mut pos: i128 = 0;
                let mut visits = vec![0u32; k];
                for (i, &xi) in xs.iter().enumerate() {
                    if pos == xi {
                        visits[i] += 1;
                    }
                }
                for _ in 0..t_max {
                    pos += law.sample_step(&mut rng)?;
                    for (i, &xi) in xs.iter().enumerate() {
                        if pos == xi {
                            visits[i] += 1;
                        }
                    }
                }
                for i in 0..k {
                    let v = visits[i] as f64;
                    sums[i] += v;
                    sq[i] += v * v;
                    finals[i].push(numerics::u128_to_f64(numerics::abs_i128(pos - xs[i])));
                }
            }
            Ok(ChunkStat { sums, sq, finals })
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        let mut finals: Vec<f64> = Vec::with_capacity(n_walks);
        for st in &stats {
            sum += st.sums[i];
            sumsq += st.sq[i];
            finals.extend_from_slice(&st.finals[i]);
        }
        let n = n_walks as f64;
        let mean = sum / n;
        let var = (sumsq / n - mean * mean).max(0.0);
        let stderr = (var / n).sqrt();
        finals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let m = numerics::quantile_interp(&finals, 0.10).max(1.0);
        let bias_bound = table.asym_coeff() * m.powf(law.alpha() - 1.0);
        out.push(GreenInterval {
            lo: mean - 3.0 * stderr,
            hi: mean + 3.0 * stderr + bias_bound,
            mean,
            stderr,
            bias_bound,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use once_cell::sync::Lazy;

    static LAW_HALF: Lazy<StepLaw> = Lazy::new(|| StepLaw::new(0.5).unwrap());
    static TABLE_HALF: Lazy<GreenTable> =
        Lazy::new(|| build_table(&LAW_HALF, 1 << 10, DEFAULT_QUAD_TOL).unwrap());

    #[test]
    fn dct2_matches_naive() {
        let f: Vec<f64> = (0..32)
            .map(|i| ((i * 37 + 11) % 17) as f64 / 7.0 - 1.0)
            .collect();
        let fast = dct2(&f);
        for k in 0..32 {
            let naive: f64 = f
                .iter()
                .enumerate()
                .map(|(n, v)| v * (PI * k as f64 * (2 * n + 1) as f64 / 64.0).cos())
                .sum();
            assert_abs_diff_eq!(fast[k], naive, epsilon = 1e-10);
        }
    }

    #[test]
    fn oscillatory_integral_matches_panels() {
        // Oracle: substitute w = theta^(1+beta) so the power factor
        // integrates away exactly, then fine Gauss–Legendre panels.
        for &(beta, x) in &[(-0.5f64, 70.0f64), (1.0, 65.0), (-0.25, 200.0)] {
            let wmax = PI.powf(1.0 + beta);
            let mut oracle = Kahan::new();
            let panels = 64 * x as usize;
            for p in 0..panels {
                let lo = wmax * p as f64 / panels as f64;
                let hi = wmax * (p + 1) as f64 / panels as f64;
                let c = 0.5 * (lo + hi);
                let r = 0.5 * (hi - lo);
                for (n, w) in GL32.nodes.iter().zip(&GL32.weights) {
                    let t = (c + r * n).powf(1.0 / (1.0 + beta));
                    oracle.add(w * r * (t * x).cos() / (1.0 + beta));
                }
            }
            assert_abs_diff_eq!(
                oscillatory_power_integral(beta, x),
                oracle.total(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn quadrature_symmetry_and_max_at_origin() {
        let g3 = green_quadrature(&LAW_HALF, 3, 1e-9).unwrap();
        let gm3 = green_quadrature(&LAW_HALF, -3, 1e-9).unwrap();
        assert_eq!(g3, gm3);
        let g0 = green_quadrature(&LAW_HALF, 0, 1e-9).unwrap();
        for x in [1i128, 2, 7, 19] {
            assert!(green_quadrature(&LAW_HALF, x, 1e-9).unwrap() < g0);
        }
        assert!(g0 >= 1.0);
    }

    #[test]
    fn table_matches_adaptive_inside_fft_range() {
        // Spot-check the FFT-filled region against the per-x route.
        for x in [65i128, 100, 333, 1000] {
            let direct = green_quadrature(&LAW_HALF, x, 1e-10).unwrap();
            let table = TABLE_HALF.green(x);
            assert!(
                (direct - table).abs() <= 1e-7 * direct.max(1e-6),
                "mismatch at {x}: {direct} vs {table}"
            );
        }
    }

    #[test]
    fn fitted_slope_near_alpha_minus_one() {
        for alpha in [0.25, 0.75] {
            let law = StepLaw::new(alpha).unwrap();
            let t = build_table(&law, 1 << 10, DEFAULT_QUAD_TOL).unwrap();
            assert!(
                (t.fit_slope() - (alpha - 1.0)).abs() < 0.05,
                "slope {} vs {}",
                t.fit_slope(),
                alpha - 1.0
            );
            let (lo, hi) = t.band();
            assert!(lo > 0.0 && hi.is_finite());
        }
    }

    #[test]
    fn boundary_continuity_and_ratio() {
        let t = &*TABLE_HALF;
        let xc = t.x_cache() as i128;
        let inside = t.green(xc);
        let outside = t.green(xc + 1);
        assert!(((inside - outside) / inside).abs() < 0.02);
        for a in [1i128, 5] {
            let ratio = t.green(xc - 8 + a) / t.green(xc - 8);
            assert!((0.99..=1.01).contains(&ratio), "ratio {ratio}");
        }
    }

    #[test]
    fn huge_arguments_stay_finite() {
        let t = &*TABLE_HALF;
        let g = t.green(10i128.pow(30));
        let expect = t.asym_coeff() * 10f64.powf(30.0 * (t.alpha() - 1.0));
        assert!(g.is_finite() && g > 0.0);
        assert_abs_diff_eq!(g, expect, epsilon = 1e-12 * expect);
    }

    #[test]
    fn serialization_round_trip() {
        let mut buf = Vec::new();
        TABLE_HALF.save(&mut buf).unwrap();
        let reloaded = GreenTable::load(std::io::BufReader::new(buf.as_slice())).unwrap();
        assert_eq!(reloaded.green(17), TABLE_HALF.green(17));
        assert_eq!(reloaded.fingerprint(), TABLE_HALF.fingerprint());
        assert_eq!(reloaded.asym_coeff(), TABLE_HALF.asym_coeff());
    }

    #[test]
    fn mc_interval_narrows_and_covers_small_x() {
        // A cheap preview of the inclusion oracle; the full-size version
        // runs in the integration suite.
        let xs = [0i128, 1];
        let iv = mc_green_estimate_multi(&LAW_HALF, &TABLE_HALF, &xs, 20_000, 20_000, 99).unwrap();
        for (x, i) in xs.iter().zip(&iv) {
            assert!(
                i.contains(TABLE_HALF.green(*x)),
                "G({x}) = {} outside [{}, {}]",
                TABLE_HALF.green(*x),
                i.lo,
                i.hi
            );
        }
        let wide = mc_green_estimate(&LAW_HALF, &TABLE_HALF, 0, 2_000, 5_000, 3).unwrap();
        let narrow = mc_green_estimate(&LAW_HALF, &TABLE_HALF, 0, 18_000, 5_000, 3).unwrap();
        assert!(narrow.stderr < wide.stderr);
    }
}
