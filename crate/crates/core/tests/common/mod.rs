//! Reference implementations used as oracles by the integration tests. They
//! share no numerical code with the library: dense normal equations solved by
//! Gaussian elimination, and a brute-force posterior scan.
#![allow(dead_code)]

pub mod stats_reference;

use std::f64::consts::PI;

use scenetemp::curves::Fourier3;

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

fn phi(t: f64) -> [f64; 3] {
    let w = 2.0 * PI / 24.0;
    [1.0, (w * t).sin(), (w * t).cos()]
}

/// Least-squares Fourier coefficients from `(XᵀX) c = Xᵀy`.
pub fn smoothing_oracle(points: &[(f64, f64)]) -> [f64; 3] {
    let mut xtx = vec![vec![0.0; 3]; 3];
    let mut xty = vec![0.0; 3];
    for &(t, y) in points {
        let p = phi(t);
        for i in 0..3 {
            xty[i] += p[i] * y;
            for j in 0..3 {
                xtx[i][j] += p[i] * p[j];
            }
        }
    }
    let c = solve_dense(xtx, xty);
    [c[0], c[1], c[2]]
}

fn eval(c: &[f64; 3], t: f64) -> f64 {
    let p = phi(t);
    c[0] * p[0] + c[1] * p[1] + c[2] * p[2]
}

/// Minimiser of `Σ_days ∫₀²⁴ (β₀(t)X(t) + β₁(t) − Y(t))² dt` over the six
/// basis coefficients of β₀ and β₁. The integrands are trigonometric
/// polynomials of low degree, so a uniform rule on 96 nodes is exact.
pub fn mtm_oracle(station: &[[f64; 3]], scene: &[[f64; 3]]) -> [f64; 6] {
    const NODES: usize = 96;
    let h = 24.0 / NODES as f64;
    let mut m = vec![vec![0.0; 6]; 6];
    let mut r = vec![0.0; 6];
    for (x, y) in station.iter().zip(scene) {
        for k in 0..NODES {
            let t = k as f64 * h;
            let p = phi(t);
            let xt = eval(x, t);
            let f = [xt * p[0], xt * p[1], xt * p[2], p[0], p[1], p[2]];
            let yt = eval(y, t);
            for i in 0..6 {
                r[i] += h * f[i] * yt;
                for j in 0..6 {
                    m[i][j] += h * f[i] * f[j];
                }
            }
        }
    }
    let b = solve_dense(m, r);
    std::array::from_fn(|i| b[i])
}

/// Grid definition for the brute-force scan, spelled out independently of
/// `StmConfig`'s enumeration helpers.
pub struct ScanGrid {
    pub t_m: f64,
    pub a0_halfwidth: f64,
    pub a0_step: f64,
    pub amp_max: f64,
    pub a_step: f64,
    pub prior_mean: f64,
    pub prior_sd: f64,
    pub sigma_min: f64,
    pub sigma_step: f64,
    pub n_sigma: usize,
}

impl ScanGrid {
    pub fn defaults(t_m: f64) -> Self {
        Self {
            t_m,
            a0_halfwidth: 5.0,
            a0_step: 0.25,
            amp_max: 20.0,
            a_step: 0.25,
            prior_mean: 1.0,
            prior_sd: 0.75,
            sigma_min: 0.05,
            sigma_step: 0.01,
            n_sigma: 496,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanResult {
    pub curve: Fourier3,
    pub sigma: f64,
    pub log_posterior: f64,
    pub n_candidates: usize,
}

fn ln_normal_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    -0.5 * z * z - sd.ln() - 0.5 * (2.0 * PI).ln()
}

/// Every candidate, every σ, posterior summed point by point. Iteration is
/// lexicographic in (a0, a1, a2) then ascending σ, and only a strictly better
/// score replaces the incumbent.
pub fn stm_exhaustive(points: &[(f64, f64)], g: &ScanGrid) -> ScanResult {
    let sigmas: Vec<(f64, f64, f64)> = (0..g.n_sigma)
        .map(|k| {
            let s = g.sigma_min + k as f64 * g.sigma_step;
            (s, ln_normal_pdf(s, g.prior_mean, g.prior_sd), s.ln() + 0.5 * (2.0 * PI).ln())
        })
        .collect();
    let w = 2.0 * PI / 24.0;
    let basis: Vec<(f64, f64, f64)> = points.iter().map(|&(t, y)| (y, (w * t).sin(), (w * t).cos())).collect();

    let ka = (g.a0_halfwidth / g.a0_step) as i64 + 1;
    let kb = (g.amp_max / g.a_step) as i64 + 1;
    let mut best = ScanResult {
        curve: Fourier3::ZERO,
        sigma: f64::NAN,
        log_posterior: f64::NEG_INFINITY,
        n_candidates: 0,
    };
    for i in -ka..=ka {
        let off = i as f64 * g.a0_step;
        if off.abs() >= g.a0_halfwidth {
            continue;
        }
        let a0 = g.t_m + off;
        for j in -kb..=kb {
            let a1 = j as f64 * g.a_step;
            for k in -kb..=kb {
                let a2 = k as f64 * g.a_step;
                if a1 * a1 + a2 * a2 >= g.amp_max * g.amp_max {
                    continue;
                }
                best.n_candidates += 1;
                let resid: Vec<f64> = basis.iter().map(|&(y, s, c)| y - (a0 + a1 * s + a2 * c)).collect();
                for &(sigma, log_prior, log_norm) in &sigmas {
                    let mut lp = log_prior;
                    for r in &resid {
                        let z = r / sigma;
                        lp += -0.5 * z * z - log_norm;
                    }
                    if lp > best.log_posterior {
                        best.curve = Fourier3::new(a0, a1, a2);
                        best.sigma = sigma;
                        best.log_posterior = lp;
                    }
                }
            }
        }
    }
    best
}

/// Points `(t, curve(t))` at consecutive hours from `start`.
pub fn exact_points(curve: &Fourier3, start: usize, n: usize) -> Vec<(f64, f64)> {
    (start..start + n).map(|h| (h as f64, eval(&curve.to_array(), h as f64))).collect()
}
