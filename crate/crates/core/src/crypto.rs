//! Secret-key transmission with displaced twin-beams.
//!
//! Bit `j` is sent as `D(z_j)|x⟩⟩` after a random key displacement `D(α)`.
//! Bob knows `α` and undoes it; Eve sees the key-averaged mixture. Symbols
//! are real and symmetric, `z₁ = a`, `z₀ = −a`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use statrs::function::erf::{erf, erfc};
use std::f64::consts::PI;

use crate::discrimination::helstrom_pure;
use crate::error::{ensure, Result};
use crate::fock;
use crate::gaussian::{seeded_rng, ComplexGaussian, NoiseParams, TwinBeamParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolConfig {
    probe: TwinBeamParams,
    /// Symbol amplitude: `z₁ = a`, `z₀ = −a`.
    pub a: f64,
    /// Variance of the Gaussian key displacement (the `κ` of `g_κ`).
    pub kappa_key: f64,
    noise: NoiseParams,
}

impl ProtocolConfig {
    pub fn new(x: f64, a: f64, kappa_key: f64) -> Result<Self> {
        ensure(a >= 0.0 && a.is_finite(), "a", a, "finite and >= 0")?;
        ensure(kappa_key > 0.0 && kappa_key.is_finite(), "kappa_key", kappa_key, "finite and > 0")?;
        Ok(Self {
            probe: TwinBeamParams::from_schmidt(x)?,
            a,
            kappa_key,
            noise: NoiseParams::new(0.0)?,
        })
    }

    /// Arbitrary complex symbols, rotated and shifted onto `±a`.
    pub fn from_symbols(x: f64, z0: Complex64, z1: Complex64, kappa_key: f64) -> Result<Self> {
        Self::new(x, (z1 - z0).norm() / 2.0, kappa_key)
    }

    /// Thermal noise of the transmission line, added per quadrature to
    /// every heterodyne outcome.
    pub fn with_channel_noise(mut self, nbar: f64) -> Result<Self> {
        self.noise = NoiseParams::new(nbar)?;
        Ok(self)
    }

    pub fn x(&self) -> f64 {
        self.probe.x()
    }

    pub fn nbar(&self) -> f64 {
        self.noise.nbar()
    }

    /// Per-quadrature variance of Bob's outcome: `σ²ₓ + n̄`.
    pub fn bob_quadrature_variance(&self) -> f64 {
        heterodyne_receiver_variance(self.x()) + self.nbar()
    }

    /// Bob's sign-threshold error including channel noise.
    pub fn bob_threshold_error(&self) -> f64 {
        threshold_error(self.a, self.bob_quadrature_variance())
    }

    /// Eve's sign-threshold error on the `x → 1` channel with the key unknown.
    pub fn eve_threshold_error(&self) -> f64 {
        threshold_error(self.a, self.kappa_key / 2.0 + self.nbar())
    }
}

/// `P(Re z < 0)` for `Re z ~ N(a, variance)`.
fn threshold_error(a: f64, quadrature_variance: f64) -> f64 {
    0.5 * erfc(a / (2.0 * quadrature_variance).sqrt())
}

/// `N` of a twin-beam with Schmidt parameter `x`.
fn photon_number(x: f64) -> Result<f64> {
    Ok(TwinBeamParams::from_schmidt(x)?.photon_number())
}

/// Helstrom error between `D(z₀)|x⟩⟩` and `D(z₁)|x⟩⟩`, whose squared
/// overlap is `exp{−|z₀−z₁|²(1+N)}`.
pub fn bob_ideal_error(x: f64, z0: Complex64, z1: Complex64) -> Result<f64> {
    let n = photon_number(x)?;
    Ok(helstrom_pure((-(z0 - z1).norm_sqr() * (1.0 + n)).exp()))
}

/// Large-separation form `¼ exp{−|z₀−z₁|²(1+N)}`.
pub fn bob_ideal_asymptote(x: f64, z0: Complex64, z1: Complex64) -> Result<f64> {
    let n = photon_number(x)?;
    Ok(0.25 * (-(z0 - z1).norm_sqr() * (1.0 + n)).exp())
}

/// Helstrom error between coherent states `|α₀⟩` and `|α₁⟩`.
pub fn coherent_error(alpha0: Complex64, alpha1: Complex64) -> f64 {
    helstrom_pure((-(alpha0 - alpha1).norm_sqr()).exp())
}

/// Uniformly distributed key: the averaged `σ₁ − σ₀` is `tr[σ₁ − σ₀]·1 = 0`,
/// so Eve can only guess.
pub fn eve_error_uniform() -> f64 {
    0.5
}

/// Eve's optimal error for a Gaussian key, `½[1 − Erf(a/√κ)]`.
pub fn eve_error_gaussian_key(a: f64, kappa_key: f64) -> Result<f64> {
    ensure(a >= 0.0, "a", a, ">= 0")?;
    ensure(kappa_key > 0.0, "kappa_key", kappa_key, "> 0")?;
    Ok(0.5 * (1.0 - erf(a / kappa_key.sqrt())))
}

/// `S₊ = Erf(a/√κ)`, the positive spectral mass of the key-averaged `Λ`.
pub fn positive_eigenvalue_sum(a: f64, kappa_key: f64) -> f64 {
    erf(a / kappa_key.sqrt())
}

/// `(√κ/(2a√π)) exp{−a²/κ}` for `a ≫ √κ`.
pub fn eve_error_gaussian_key_asymptote(a: f64, kappa_key: f64) -> f64 {
    kappa_key.sqrt() / (2.0 * a * PI.sqrt()) * (-a * a / kappa_key).exp()
}

/// `σ²ₓ = (1−x)(1+x)/2`, the quadrature variance used by the threshold
/// receiver.
pub fn heterodyne_receiver_variance(x: f64) -> f64 {
    0.5 * (1.0 - x) * (1.0 + x)
}

/// Bob's heterodyne threshold error `½[1 − Erf(a/√(2σ²ₓ))]`; bit 0 is
/// inferred when `Re z < 0`.
pub fn bob_heterodyne_error(x: f64, a: f64) -> Result<f64> {
    ensure((0.0..1.0).contains(&x), "x", x, "0 <= x < 1")?;
    ensure(a >= 0.0, "a", a, ">= 0")?;
    Ok(0.5 * (1.0 - erf(a / (2.0 * heterodyne_receiver_variance(x)).sqrt())))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecurityMargin {
    /// `2σ²ₓ < κ`.
    pub secure: bool,
    pub two_sigma_sq: f64,
    pub bob_err: f64,
    pub eve_err: f64,
}

pub fn security_margin(x: f64, a: f64, kappa_key: f64) -> Result<SecurityMargin> {
    let bob_err = bob_heterodyne_error(x, a)?;
    let eve_err = eve_error_gaussian_key(a, kappa_key)?;
    let two_sigma_sq = 2.0 * heterodyne_receiver_variance(x);
    Ok(SecurityMargin {
        secure: two_sigma_sq < kappa_key,
        two_sigma_sq,
        bob_err,
        eve_err,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphabetPdfs {
    /// Centred at `z₀` with variance `Δ²ₓ`.
    pub bob: ComplexGaussian,
    /// Centred at `z₀` with variance `Δ²ₓ + κ`.
    pub eve: ComplexGaussian,
}

/// Heterodyne statistics for a complex-alphabet symbol `z₀`.
pub fn alphabet_pdfs(z0: Complex64, x: f64, kappa_key: f64) -> Result<AlphabetPdfs> {
    ensure(kappa_key >= 0.0, "kappa_key", kappa_key, ">= 0")?;
    let delta_sq = TwinBeamParams::from_schmidt(x)?.heterodyne_variance();
    Ok(AlphabetPdfs {
        bob: ComplexGaussian::new(z0, delta_sq)?,
        eve: ComplexGaussian::new(z0, delta_sq + kappa_key)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProtocolTally {
    pub n_bits: u64,
    pub bob_errors: u64,
    pub eve_errors: u64,
}

impl ProtocolTally {
    pub fn bob_rate(&self) -> f64 {
        self.bob_errors as f64 / self.n_bits as f64
    }

    pub fn eve_rate(&self) -> f64 {
        self.eve_errors as f64 / self.n_bits as f64
    }
}

/// End-to-end run: random bits, Gaussian keys, heterodyne outcomes. Bob
/// removes the key and thresholds `Re z`; Eve thresholds without it.
pub fn simulate_binary_protocol(config: &ProtocolConfig, n_bits: u64, seed: u64) -> Result<ProtocolTally> {
    ensure(n_bits >= 1, "n_bits", n_bits as f64, ">= 1")?;
    let mut rng = seeded_rng(seed);
    let zero = Complex64::new(0.0, 0.0);
    let key = ComplexGaussian::new(zero, config.kappa_key)?;
    let bob_noise = ComplexGaussian::new(zero, 2.0 * config.bob_quadrature_variance())?;
    let eve_noise = (config.nbar() > 0.0)
        .then(|| ComplexGaussian::new(zero, 2.0 * config.nbar()))
        .transpose()?;

    let mut tally = ProtocolTally {
        n_bits,
        bob_errors: 0,
        eve_errors: 0,
    };
    for _ in 0..n_bits {
        let bit: bool = rng.random();
        let symbol = if bit { config.a } else { -config.a };
        let alpha = key.sample(&mut rng);
        let sent = Complex64::new(symbol, 0.0) + alpha;

        let bob = sent + bob_noise.sample(&mut rng) - alpha;
        if (bob.re >= 0.0) != bit {
            tally.bob_errors += 1;
        }

        let eve = match &eve_noise {
            Some(n) => sent + n.sample(&mut rng),
            None => sent,
        };
        if (eve.re >= 0.0) != bit {
            tally.eve_errors += 1;
        }
    }
    Ok(tally)
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniformKeyAverage {
    pub radius: f64,
    pub grid_points: usize,
    /// Largest `|λ|` of the disk-averaged `σ₁ − σ₀`, compressed to the kept levels.
    pub max_abs_eigenvalue: f64,
    pub trace: f64,
}

/// Averages `D(α)(σ₁ − σ₀)D†(α)` over a square lattice of spacing `step`
/// inside the disk `|α| ≤ radius`, restricted to the lowest `levels` Fock
/// states of the displaced mode.
pub fn uniform_key_average(x: f64, a: f64, radius: f64, step: f64, levels: usize) -> Result<UniformKeyAverage> {
    ensure((0.0..1.0).contains(&x), "x", x, "0 <= x < 1")?;
    ensure(radius > 0.0, "radius", radius, "> 0")?;
    ensure(step > 0.0 && step < radius, "step", step, "0 < step < radius")?;
    ensure(levels >= 1, "levels", levels as f64, ">= 1")?;

    let d_b = fock::default_d_max(x, 1e-10) + 1;
    let coeffs: Vec<f64> = (0..d_b)
        .map(|p| (1.0 - x * x).sqrt() * x.powi(p as i32))
        .collect();
    let dim = levels * d_b;

    // Column p of the (levels × d_b) amplitude block is c_p D(β)|p⟩.
    let symbol_vector = |beta: Complex64| -> DVector<Complex64> {
        let mut v = DVector::from_element(dim, Complex64::new(0.0, 0.0));
        for (p, c) in coeffs.iter().enumerate() {
            let col = fock::displaced_number_state(beta, p, levels);
            for m in 0..levels {
                v[m * d_b + p] = col[m] * *c;
            }
        }
        v
    };

    let mut lambda = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let half = (radius / step).ceil() as i64;
    let mut count = 0usize;
    for i in -half..half {
        for j in -half..half {
            let alpha = Complex64::new((i as f64 + 0.5) * step, (j as f64 + 0.5) * step);
            if alpha.norm() > radius {
                continue;
            }
            count += 1;
            let one = symbol_vector(alpha + a);
            let zero = symbol_vector(alpha - a);
            lambda.ger(Complex64::new(1.0, 0.0), &one, &one.conjugate(), Complex64::new(1.0, 0.0));
            lambda.ger(Complex64::new(-1.0, 0.0), &zero, &zero.conjugate(), Complex64::new(1.0, 0.0));
        }
    }
    lambda /= Complex64::new(count as f64, 0.0);
    let trace = lambda.trace().re;
    let eig = SymmetricEigen::new(lambda);
    let max_abs_eigenvalue = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(UniformKeyAverage {
        radius,
        grid_points: count,
        max_abs_eigenvalue,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bob_ideal_examples() {
        assert_eq!(bob_ideal_error(0.4, c(0.3, 0.1), c(0.3, 0.1)).unwrap(), 0.5);
        let (z0, z1) = (c(-0.6, 0.2), c(0.5, -0.3));
        assert_relative_eq!(bob_ideal_error(0.0, z0, z1).unwrap(), coherent_error(z0, z1), max_relative = 1e-15);

        let x = 1.0 / 3f64.sqrt(); // N = 1
        let p = bob_ideal_error(x, c(-1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_relative_eq!(p, 0.5 * (1.0 - (1.0 - (-8.0f64).exp()).sqrt()), max_relative = 1e-9);
        assert_relative_eq!(p, 8.39e-5, max_relative = 1e-3);
        let asym = bob_ideal_asymptote(x, c(-1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_relative_eq!(p, asym, max_relative = 1e-3);
    }

    #[test]
    fn coherent_examples() {
        assert_eq!(coherent_error(c(1.0, 1.0), c(1.0, 1.0)), 0.5);
        let p = coherent_error(c(-1.0, 0.0), c(1.0, 0.0));
        assert_relative_eq!(p, 0.5 * (1.0 - (1.0 - (-4.0f64).exp()).sqrt()), max_relative = 1e-12);
        assert_relative_eq!(p, 4.60e-3, max_relative = 1e-3);
        assert!(bob_ideal_error(0.3, c(-1.0, 0.0), c(1.0, 0.0)).unwrap() < p);
    }

    #[test]
    fn eve_examples() {
        assert_eq!(eve_error_uniform(), 0.5);
        assert_eq!(eve_error_gaussian_key(0.0, 2.0).unwrap(), 0.5);
        let p = eve_error_gaussian_key(1.3, 1.69).unwrap();
        assert_relative_eq!(p, 0.5 * (1.0 - erf(1.0)), max_relative = 1e-14);
        assert_relative_eq!(p, 0.0786, epsilon = 1e-4);
        let exact = eve_error_gaussian_key(3.0, 1.0).unwrap();
        let asym = eve_error_gaussian_key_asymptote(3.0, 1.0);
        assert!((asym - exact).abs() / exact < 0.1);
        assert!(eve_error_gaussian_key(1.0, 0.0).is_err());
    }

    #[test]
    fn heterodyne_examples() {
        assert_eq!(bob_heterodyne_error(0.7, 0.0).unwrap(), 0.5);
        assert_relative_eq!(bob_heterodyne_error(0.0, 1.0).unwrap(), 0.5 * (1.0 - erf(1.0)), max_relative = 1e-14);
        assert_relative_eq!(heterodyne_receiver_variance(0.8), 0.18, max_relative = 1e-14);
    }

    #[test]
    fn heterodyne_formula_vs_twin_beam_statistics() {
        // The receiver variance (1−x²)/2 is not the twin-beam heterodyne
        // variance Δ²ₓ/2; with Δ²ₓ the threshold error is ½ erfc(a/Δₓ).
        let (x, a) = (0.8, 0.5);
        let delta_sq = TwinBeamParams::from_schmidt(x).unwrap().heterodyne_variance();
        let twin_beam_threshold = threshold_error(a, delta_sq / 2.0);
        assert_relative_eq!(twin_beam_threshold, 0.5 * erfc(1.5), max_relative = 1e-12);
        assert!(twin_beam_threshold < bob_heterodyne_error(x, a).unwrap());
    }

    #[test]
    fn security_examples() {
        let s = security_margin(0.999_999, 0.5, 1e-3).unwrap();
        assert!(s.secure);
        let s = security_margin(0.0, 0.5, 1.0).unwrap();
        assert_eq!(s.two_sigma_sq, 1.0);
        assert!(!s.secure);
        let s = security_margin(0.8, 0.5, 1.0).unwrap();
        assert_relative_eq!(s.two_sigma_sq, 0.36, max_relative = 1e-14);
        assert!(s.secure && s.bob_err < s.eve_err);
    }

    #[test]
    fn alphabet_examples() {
        let z0 = c(0.4, -1.1);
        let p = alphabet_pdfs(z0, 0.6, 0.0).unwrap();
        assert_eq!(p.bob, p.eve);
        let p = alphabet_pdfs(z0, 1.0 / 3.0, 1.0).unwrap();
        assert_relative_eq!(p.bob.variance, 0.5, max_relative = 1e-14);
        assert_relative_eq!(p.eve.variance, 1.5, max_relative = 1e-14);
        assert_eq!(p.bob.mean, z0);
    }

    #[test]
    fn complex_symbols_reduce_to_real_frame() {
        let cfg = ProtocolConfig::from_symbols(0.5, c(1.0, 1.0), c(1.6, 1.8), 1.0).unwrap();
        assert_relative_eq!(cfg.a, 0.5, max_relative = 1e-14);
    }

    #[test]
    fn protocol_simulation_examples() {
        let cfg = ProtocolConfig::new(0.8, 0.5, 1.0).unwrap();
        let n = 200_000;
        let t = simulate_binary_protocol(&cfg, n, 7).unwrap();
        assert_eq!(t, simulate_binary_protocol(&cfg, n, 7).unwrap());
        let p = bob_heterodyne_error(0.8, 0.5).unwrap();
        let sd = (p * (1.0 - p) / n as f64).sqrt();
        assert!((t.bob_rate() - p).abs() < 3.0 * sd);

        let loose = ProtocolConfig::new(0.8, 0.5, 1e6).unwrap();
        let t = simulate_binary_protocol(&loose, n, 8).unwrap();
        assert!((t.eve_rate() - 0.5).abs() < 0.01);
    }

    #[test]
    fn channel_noise_degrades_both_parties() {
        let cfg = ProtocolConfig::new(0.8, 0.5, 1.0)
            .unwrap()
            .with_channel_noise(0.2)
            .unwrap();
        let n = 200_000;
        let t = simulate_binary_protocol(&cfg, n, 4).unwrap();
        for (rate, p) in [(t.bob_rate(), cfg.bob_threshold_error()), (t.eve_rate(), cfg.eve_threshold_error())] {
            let sd = (p * (1.0 - p) / n as f64).sqrt();
            assert!((rate - p).abs() < 3.0 * sd);
        }
        assert!(cfg.bob_threshold_error() > bob_heterodyne_error(0.8, 0.5).unwrap());
    }

    #[test]
    fn uniform_key_residual_shrinks_with_radius() {
        let mut last = f64::INFINITY;
        for radius in [1.0, 2.0, 3.0, 4.0, 5.0, 6.0] {
            let avg = uniform_key_average(0.5, 0.5, radius, 0.25, 16).unwrap();
            assert!(avg.trace.abs() < 1e-12);
            assert!(avg.max_abs_eigenvalue < last, "radius {radius}: {} !< {last}", avg.max_abs_eigenvalue);
            last = avg.max_abs_eigenvalue;
        }
        assert!(last < 0.05);
    }
}
