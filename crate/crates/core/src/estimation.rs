//! Displacement estimation with a vacuum probe versus a twin-beam probe,
//! through a Gaussian noise channel.

use num_complex::Complex64;

use crate::error::{ensure, Result};
use crate::gaussian::{
    make_twin_beam, GaussianTwoModeState, Mode, NoiseParams, NoiseTarget, TwinBeamParams,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationSetting {
    probe: TwinBeamParams,
    noise: NoiseParams,
    pub alpha: Complex64,
}

impl EstimationSetting {
    /// `x` is the probe Schmidt parameter, `nbar_t` the total noise before
    /// and after the displacement.
    pub fn new(x: f64, nbar_t: f64, alpha: Complex64) -> Result<Self> {
        ensure(alpha.re.is_finite() && alpha.im.is_finite(), "alpha", alpha.norm(), "finite")?;
        Ok(Self {
            probe: TwinBeamParams::from_schmidt(x)?,
            noise: NoiseParams::new(nbar_t)?,
            alpha,
        })
    }

    pub fn x(&self) -> f64 {
        self.probe.x()
    }

    pub fn nbar_t(&self) -> f64 {
        self.noise.nbar()
    }

    /// Twin-beam probe after displacement and noise on both beams.
    pub fn entangled_output(&self) -> GaussianTwoModeState {
        make_twin_beam(&self.probe)
            .apply_displacement(self.alpha, Mode::One)
            .apply_gaussian_noise(self.noise, NoiseTarget::Both)
    }

    /// Vacuum probe; only the probed mode crosses the noisy channel.
    pub fn unentangled_output(&self) -> GaussianTwoModeState {
        GaussianTwoModeState::vacuum()
            .apply_displacement(self.alpha, Mode::One)
            .apply_gaussian_noise(self.noise, NoiseTarget::One)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalVariances {
    /// `σ₂² = Δ²ₓ + 2n̄_T`: noise acts on both beams.
    pub entangled: f64,
    /// `σ₁² = 1 + n̄_T`.
    pub unentangled: f64,
}

pub fn conditional_variance(setting: &EstimationSetting) -> ConditionalVariances {
    let n = setting.nbar_t();
    ConditionalVariances {
        entangled: setting.probe.heterodyne_variance() + 2.0 * n,
        unentangled: 1.0 + n,
    }
}

/// `σ₂² < σ₁²`, i.e. `n̄_T < 1 − Δ²ₓ`.
pub fn entanglement_convenient(setting: &EstimationSetting) -> bool {
    let v = conditional_variance(setting);
    v.entangled < v.unentangled
}

/// Noise level at which both probes perform equally, `1 − Δ²ₓ`.
pub fn noise_crossover(x: f64) -> Result<f64> {
    Ok(1.0 - TwinBeamParams::from_schmidt(x)?.heterodyne_variance())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmsErrors {
    pub entangled: f64,
    pub unentangled: f64,
    pub n_trials: usize,
}

/// Estimates `α` by the raw heterodyne outcome on each probe and reports
/// the root-mean-square error. The two probes draw from separate streams
/// derived from `seed`.
pub fn simulate_estimation(setting: &EstimationSetting, n_trials: usize, seed: u64) -> Result<RmsErrors> {
    ensure(n_trials >= 1, "n_trials", n_trials as f64, ">= 1")?;
    let rms = |state: GaussianTwoModeState, stream: u64| -> Result<f64> {
        let samples = state.sample_heterodyne(n_trials, stream)?;
        let mse = samples.iter().map(|z| (z - setting.alpha).norm_sqr()).sum::<f64>() / n_trials as f64;
        Ok(mse.sqrt())
    };
    Ok(RmsErrors {
        entangled: rms(setting.entangled_output(), seed)?,
        unentangled: rms(setting.unentangled_output(), seed ^ 0x9E37_79B9_7F4A_7C15)?,
        n_trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn setting(x: f64, n: f64) -> EstimationSetting {
        EstimationSetting::new(x, n, Complex64::new(0.7, -1.2)).unwrap()
    }

    #[test]
    fn variance_examples() {
        let v = conditional_variance(&setting(0.0, 0.0));
        assert_eq!((v.entangled, v.unentangled), (1.0, 1.0));

        let v = conditional_variance(&setting(0.999_999, 0.0));
        assert!(v.entangled < 1e-6);

        let v = conditional_variance(&setting(0.9, 0.5));
        assert_relative_eq!(v.entangled, 0.1 / 1.9 + 1.0, max_relative = 1e-14);
        assert_relative_eq!(v.entangled, 1.0526, epsilon = 1e-4);
        assert_eq!(v.unentangled, 1.5);
    }

    #[test]
    fn formulas_agree_with_state_moments() {
        for (x, n) in [(0.0, 0.0), (0.3, 0.2), (0.9, 0.5), (0.99, 1.3)] {
            let s = setting(x, n);
            let v = conditional_variance(&s);
            let ent = s.entangled_output().heterodyne_distribution().unwrap();
            let une = s.unentangled_output().heterodyne_distribution().unwrap();
            assert_relative_eq!(ent.variance, v.entangled, max_relative = 1e-12);
            assert_relative_eq!(une.variance, v.unentangled, max_relative = 1e-12);
            assert_relative_eq!(ent.mean.re, s.alpha.re, max_relative = 1e-14);
            assert_relative_eq!(une.mean.im, s.alpha.im, max_relative = 1e-14);
        }
    }

    #[test]
    fn convenience_examples() {
        assert!(entanglement_convenient(&setting(0.99, 0.9)));
        for x in [0.0, 0.5, 0.9, 0.999] {
            assert!(!entanglement_convenient(&setting(x, 1.0)));
        }
        for n in [0.0, 0.3, 2.0] {
            assert!(!entanglement_convenient(&setting(0.0, n)));
        }
    }

    #[test]
    fn crossover_is_root_of_variance_gap() {
        for x in [0.1, 0.5, 0.9, 0.999] {
            let n = noise_crossover(x).unwrap();
            let v = conditional_variance(&setting(x, n));
            assert!((v.entangled - v.unentangled).abs() < 1e-15);
        }
        assert!(noise_crossover(1.0).is_err());
    }

    #[test]
    fn simulation_examples() {
        let n = 100_000;
        let r = simulate_estimation(&setting(0.0, 0.0), n, 1).unwrap();
        // |z − α|² ~ Exp(σ²): mean σ², sd σ²/√n
        assert!((r.entangled.powi(2) - 1.0).abs() < 3.0 / (n as f64).sqrt());

        let r = simulate_estimation(&setting(0.9, 0.0), n, 2).unwrap();
        let expected = 0.1 / 1.9;
        assert!((r.entangled.powi(2) - expected).abs() < 3.0 * expected / (n as f64).sqrt());

        let r = simulate_estimation(&setting(0.999, 1.0), n, 3).unwrap();
        let sd = 3.0 * 2.0 * (2.0 / n as f64).sqrt();
        assert!(r.entangled.powi(2) >= r.unentangled.powi(2) - sd);
    }

    #[test]
    fn simulation_is_deterministic() {
        let s = setting(0.6, 0.1);
        assert_eq!(simulate_estimation(&s, 1000, 9), simulate_estimation(&s, 1000, 9));
        assert!(simulate_estimation(&s, 0, 9).is_err());
    }
}
