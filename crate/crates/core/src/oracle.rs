//! Brute-force numerical routes used to cross-check the closed forms.
//!
//! Nothing here reuses the closed-form code it is meant to check.

use nalgebra::{Cholesky, Matrix4, Vector4};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use std::f64::consts::PI;

use crate::error::{ensure, Error, Result};
use crate::gaussian::{make_twin_beam, seeded_rng, ComplexGaussian, TwinBeamParams};
use crate::quad::GaussLegendre;

/// Minimum of `|Σ wⱼ e^{iγⱼ}|` over the probability simplex.
///
/// Starts from the best of `samples` random weight vectors (full simplex,
/// random edges and random triangles in turn), then runs pairwise exact line
/// searches until no transfer of weight lowers the modulus.
pub fn simplex_min_modulus(phases: &[f64], samples: usize, seed: u64) -> Result<f64> {
    ensure(!phases.is_empty(), "phases", 0.0, "non-empty")?;
    ensure(samples >= 1, "samples", samples as f64, ">= 1")?;
    let m = phases.len();
    let v: Vec<Complex64> = phases.iter().map(|&g| Complex64::from_polar(1.0, g)).collect();
    let point = |w: &[f64]| -> Complex64 { w.iter().zip(&v).map(|(wi, vi)| vi * *wi).sum() };

    let mut rng = seeded_rng(seed);
    let mut best = vec![0.0; m];
    best[0] = 1.0;
    let mut best_val = point(&best).norm_sqr();
    let mut w = vec![0.0; m];
    for s in 0..samples {
        w.iter_mut().for_each(|x| *x = 0.0);
        let support = match s % 3 {
            0 => m,
            1 => 2.min(m),
            _ => 3.min(m),
        };
        for k in 0..support {
            let j = if support == m { k } else { rng.random_range(0..m) };
            let e: f64 = Exp1.sample(&mut rng);
            w[j] += e;
        }
        let total: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= total);
        let val = point(&w).norm_sqr();
        if val < best_val {
            best_val = val;
            best.copy_from_slice(&w);
        }
    }

    let mut z = point(&best);
    for _ in 0..10_000 {
        let mut improved = false;
        for i in 0..m {
            for j in 0..m {
                if i == j || best[i] <= 0.0 {
                    continue;
                }
                // Move t from i to j: z(t) = z + t(vⱼ − vᵢ), t ∈ [0, wᵢ].
                let d = v[j] - v[i];
                let dd = d.norm_sqr();
                if dd == 0.0 {
                    continue;
                }
                let t = (-(z.conj() * d).re / dd).clamp(0.0, best[i]);
                if t <= 0.0 {
                    continue;
                }
                let next = z + d * t;
                if next.norm_sqr() < z.norm_sqr() * (1.0 - 1e-15) {
                    best[i] -= t;
                    best[j] += t;
                    z = next;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(z.norm())
}

/// Integral of `g_κ(|β − a|²) − g_κ(|β + a|²)` over `Re β > 0`, the region
/// where the key-averaged difference operator is positive.
pub fn half_plane_positive_mass(a: f64, kappa_key: f64) -> Result<f64> {
    ensure(a >= 0.0, "a", a, ">= 0")?;
    ensure(kappa_key > 0.0, "kappa_key", kappa_key, "> 0")?;
    let g = |t: f64| (-t / kappa_key).exp() / (PI * kappa_key);
    let f = |x: f64, y: f64| g((x - a).powi(2) + y * y) - g((x + a).powi(2) + y * y);
    let width = 12.0 * kappa_key.sqrt();
    let rule = GaussLegendre::new(24);
    Ok(rule.integrate_2d(f, (0.0, a + width), (-width, width), 24))
}

/// Eve's heterodyne density as a numerical convolution of Bob's density
/// with the key distribution, evaluated at `z`.
pub fn convolved_pdf(bob: &ComplexGaussian, kappa_key: f64, z: Complex64) -> Result<f64> {
    ensure(kappa_key > 0.0, "kappa_key", kappa_key, "> 0")?;
    let key = ComplexGaussian::new(Complex64::new(0.0, 0.0), kappa_key)?;
    // The integrand is confined to α near z − z₀ by the narrower factor.
    let centre = z - bob.mean;
    let width = 10.0 * bob.variance.min(kappa_key).sqrt();
    let rule = GaussLegendre::new(20);
    Ok(rule.integrate_2d(
        |re, im| {
            let alpha = Complex64::new(re, im);
            bob.pdf(z - alpha) * key.pdf(alpha)
        },
        (centre.re - width, centre.re + width),
        (centre.im - width, centre.im + width),
        16,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledVariance {
    pub estimate: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuEstimate {
    pub plus: SampledVariance,
    pub minus: SampledVariance,
}

/// Euler–Maruyama integration of `dq = −(γ/2)q dτ + ½ dW` for every
/// quadrature, starting from twin-beam samples. Returns the sample
/// variances of the anti-squeezed and squeezed EPR combinations.
pub fn ornstein_uhlenbeck_variances(
    r0: f64,
    m: f64,
    tau: f64,
    n_paths: usize,
    steps: usize,
    seed: u64,
) -> Result<OuEstimate> {
    ensure(m >= 0.0, "M", m, ">= 0")?;
    ensure(tau >= 0.0, "tau", tau, ">= 0")?;
    ensure(n_paths >= 2, "n_paths", n_paths as f64, ">= 2")?;
    ensure(steps >= 1, "steps", steps as f64, ">= 1")?;
    let cov = *make_twin_beam(&TwinBeamParams::from_squeezing(r0)?).cov();
    let chol = Cholesky::new(cov).ok_or(Error::NonPhysical("twin-beam covariance not positive definite"))?;
    let l: Matrix4<f64> = chol.l();

    let gamma = 1.0 / (2.0 * m + 1.0);
    let dt = tau / steps as f64;
    let drift = 1.0 - 0.5 * gamma * dt;
    let kick = 0.5 * dt.sqrt();
    let mut rng = seeded_rng(seed);
    let normal = |rng: &mut rand_chacha::ChaCha8Rng| -> f64 { StandardNormal.sample(rng) };

    let mut plus = Vec::with_capacity(2 * n_paths);
    let mut minus = Vec::with_capacity(2 * n_paths);
    for _ in 0..n_paths {
        let z = Vector4::from_fn(|_, _| normal(&mut rng));
        let mut q = l * z;
        for _ in 0..steps {
            for k in 0..4 {
                q[k] = drift * q[k] + kick * normal(&mut rng);
            }
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        plus.push(s * (q[0] + q[2]));
        plus.push(s * (q[1] - q[3]));
        minus.push(s * (q[0] - q[2]));
        minus.push(s * (q[1] + q[3]));
    }
    Ok(OuEstimate {
        plus: sample_variance(&plus),
        minus: sample_variance(&minus),
    })
}

/// Zero-mean variance estimate. The two combinations pooled per path are
/// independent, so the Gaussian standard error `v·√(2/n)` applies.
fn sample_variance(xs: &[f64]) -> SampledVariance {
    let n = xs.len() as f64;
    let estimate = xs.iter().map(|x| x * x).sum::<f64>() / n;
    SampledVariance {
        estimate,
        std_error: estimate * (2.0 / n).sqrt(),
    }
}

/// Quadratic coefficient `c` of `f(h) = f(0) − c h² + O(h⁴)`, from one
/// Richardson step on `(f(0) − f(h))/h²` at `h` and `h/2`.
pub fn richardson_quadratic_coefficient<F: Fn(f64) -> f64>(f: F, f0: f64, h: f64) -> f64 {
    let coarse = (f0 - f(h)) / (h * h);
    let fine = (f0 - f(h / 2.0)) / (h * h / 4.0);
    (4.0 * fine - coarse) / 3.0
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}
