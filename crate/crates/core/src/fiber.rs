//! Twin-beam decoherence in a pair of identical noisy fibers.
//!
//! Each quadrature relaxes towards the reservoir value `(2M+1)/4` with
//! drift `γ = 1/(2M+1)` in the rescaled time `τ = (Γ/γ)t`.

use nalgebra::{Matrix4, Vector4};

use crate::error::{ensure, Result};
use crate::gaussian::{make_twin_beam, GaussianTwoModeState, TwinBeamParams, VACUUM_VARIANCE};

/// Grid points count as separable only above this PPT margin; below it a
/// state sitting on the boundary (the `M = 0` asymptote) is not mistaken
/// for a transition.
pub const SCAN_MARGIN: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberParams {
    gamma_damp: f64,
    m: f64,
    probe: TwinBeamParams,
}

impl FiberParams {
    pub fn new(gamma_damp: f64, m: f64, r0: f64) -> Result<Self> {
        ensure(gamma_damp > 0.0 && gamma_damp.is_finite(), "gamma_damp", gamma_damp, "finite and > 0")?;
        check_m(m)?;
        Ok(Self {
            gamma_damp,
            m,
            probe: TwinBeamParams::from_squeezing(r0)?,
        })
    }

    pub fn gamma_damp(&self) -> f64 {
        self.gamma_damp
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn r0(&self) -> f64 {
        self.probe.r0()
    }

    pub fn gamma_drift(&self) -> f64 {
        gamma_drift(self.m)
    }

    pub fn rescaled_time(&self, t: f64) -> f64 {
        self.gamma_damp * t / self.gamma_drift()
    }

    pub fn physical_time(&self, tau: f64) -> f64 {
        tau * self.gamma_drift() / self.gamma_damp
    }

    pub fn separability_time(&self) -> Result<SeparabilityTime> {
        Ok(match separability_time_rescaled(self.m, self.r0())? {
            SeparabilityTime::At(tau) => SeparabilityTime::At(self.physical_time(tau)),
            SeparabilityTime::Never => SeparabilityTime::Never,
        })
    }
}

fn check_m(m: f64) -> Result<()> {
    ensure(m >= 0.0 && m.is_finite(), "M", m, "finite and >= 0")
}

/// `γ = 1/(2M+1)`.
pub fn gamma_drift(m: f64) -> f64 {
    1.0 / (2.0 * m + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolvedVariances {
    /// Anti-squeezed EPR combination.
    pub plus: f64,
    /// Squeezed EPR combination; entanglement survives while it is below 1/4.
    pub minus: f64,
}

/// `Σ²± = e^{−γτ}σ²± + (1 − e^{−γτ})/(4γ)`.
pub fn evolve_variances(r0: f64, m: f64, tau: f64) -> Result<EvolvedVariances> {
    ensure(tau >= 0.0, "tau", tau, ">= 0")?;
    check_m(m)?;
    let r0 = TwinBeamParams::from_squeezing(r0)?.r0();
    let gamma = gamma_drift(m);
    let decay = (-gamma * tau).exp();
    let d_sq = -(-gamma * tau).exp_m1() / (4.0 * gamma);
    Ok(EvolvedVariances {
        plus: decay * (2.0 * r0).exp() / 4.0 + d_sq,
        minus: decay * (-2.0 * r0).exp() / 4.0 + d_sq,
    })
}

/// Full covariance after time `τ`: every quadrature relaxes independently,
/// so `σ(τ) = e^{−γτ}σ(0) + D²·1`.
pub fn evolve_state(r0: f64, m: f64, tau: f64) -> Result<GaussianTwoModeState> {
    ensure(tau >= 0.0, "tau", tau, ">= 0")?;
    check_m(m)?;
    let initial = make_twin_beam(&TwinBeamParams::from_squeezing(r0)?);
    let gamma = gamma_drift(m);
    let d_sq = -(-gamma * tau).exp_m1() / (4.0 * gamma);
    let cov = initial.cov() * (-gamma * tau).exp() + Matrix4::identity() * d_sq;
    GaussianTwoModeState::new(Vector4::zeros(), cov)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparabilityTime {
    At(f64),
    /// The state stays entangled at all times (`M = 0`).
    Never,
}

impl SeparabilityTime {
    pub fn value(&self) -> Option<f64> {
        match self {
            Self::At(t) => Some(*t),
            Self::Never => None,
        }
    }
}

/// `1 − e^{−2r₀}`, written as `2N/(N + √(N(N+2)))` when starting from `N`.
fn squeezing_gap_from_photons(n: f64) -> f64 {
    2.0 * n / (n + (n * (n + 2.0)).sqrt())
}

/// `τ_s = (1/γ) log(1 + γ(1 − e^{−2r₀})/(1 − γ))`.
pub fn separability_time_rescaled(m: f64, r0: f64) -> Result<SeparabilityTime> {
    check_m(m)?;
    ensure(r0 > 0.0 && r0.is_finite(), "r0", r0, "finite and > 0")?;
    if m == 0.0 {
        return Ok(SeparabilityTime::Never);
    }
    let gamma = gamma_drift(m);
    let gap = -(-2.0 * r0).exp_m1();
    // γ/(1−γ) = 1/(2M)
    Ok(SeparabilityTime::At((gap * gamma / (1.0 - gamma)).ln_1p() / gamma))
}

/// The same threshold written through the photon number:
/// `τ_s = (2M+1) log(1 − (N − √(N(N+2)))/(2M))`.
pub fn separability_time_rescaled_from_photons(m: f64, n: f64) -> Result<SeparabilityTime> {
    check_m(m)?;
    ensure(n > 0.0 && n.is_finite(), "N", n, "finite and > 0")?;
    if m == 0.0 {
        return Ok(SeparabilityTime::Never);
    }
    Ok(SeparabilityTime::At(
        (2.0 * m + 1.0) * (squeezing_gap_from_photons(n) / (2.0 * m)).ln_1p(),
    ))
}

/// `t_s = (1/Γ) log(1 − (N − √(N(N+2)))/(2M))`.
pub fn separability_time(gamma_damp: f64, m: f64, n: f64) -> Result<SeparabilityTime> {
    ensure(gamma_damp > 0.0 && gamma_damp.is_finite(), "gamma_damp", gamma_damp, "finite and > 0")?;
    check_m(m)?;
    ensure(n > 0.0 && n.is_finite(), "N", n, "finite and > 0")?;
    if m == 0.0 {
        return Ok(SeparabilityTime::Never);
    }
    Ok(SeparabilityTime::At(
        (squeezing_gap_from_photons(n) / (2.0 * m)).ln_1p() / gamma_damp,
    ))
}

/// `N → ∞` limit, `(1/Γ) log(1 + 1/(2M))`.
pub fn separability_time_large_n(gamma_damp: f64, m: f64) -> Result<SeparabilityTime> {
    ensure(gamma_damp > 0.0, "gamma_damp", gamma_damp, "> 0")?;
    check_m(m)?;
    if m == 0.0 {
        return Ok(SeparabilityTime::Never);
    }
    Ok(SeparabilityTime::At((1.0 / (2.0 * m)).ln_1p() / gamma_damp))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanOutcome {
    /// First rescaled time at which the evolved state is PPT.
    Found(f64),
    NotFound,
}

impl ScanOutcome {
    pub fn value(&self) -> Option<f64> {
        match self {
            Self::Found(t) => Some(*t),
            Self::NotFound => None,
        }
    }
}

/// Evolves the full covariance on a uniform grid over `[0, τ_max]`, stops at
/// the first PPT point and bisects the bracket.
pub fn scan_separability(r0: f64, m: f64, tau_max: f64, steps: usize) -> Result<ScanOutcome> {
    ensure(steps >= 2, "steps", steps as f64, ">= 2")?;
    ensure(tau_max > 0.0 && tau_max.is_finite(), "tau_max", tau_max, "finite and > 0")?;
    let separable = |tau: f64| -> Result<bool> { Ok(evolve_state(r0, m, tau)?.ppt_separable().separable) };
    let clearly_separable =
        |tau: f64| -> Result<bool> { Ok(evolve_state(r0, m, tau)?.ppt_separable().margin() > SCAN_MARGIN) };

    if separable(0.0)? {
        return Ok(ScanOutcome::Found(0.0));
    }
    let h = tau_max / (steps - 1) as f64;
    let mut first = None;
    for k in 1..steps {
        if clearly_separable(k as f64 * h)? {
            first = Some(k);
            break;
        }
    }
    let Some(k) = first else {
        return Ok(ScanOutcome::NotFound);
    };

    let (mut lo, mut hi) = ((k - 1) as f64 * h, k as f64 * h);
    while hi - lo > 1e-13 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if separable(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ScanOutcome::Found(hi))
}

/// `Σ²₊Σ²₋ − 1/16`, non-negative for every physical evolution.
pub fn uncertainty_excess(v: &EvolvedVariances) -> f64 {
    v.plus * v.minus - VACUUM_VARIANCE * VACUUM_VARIANCE
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn variance_examples() {
        let v = evolve_variances(1.0, 0.5, 0.0).unwrap();
        assert_relative_eq!(v.plus, 2f64.exp() / 4.0, max_relative = 1e-15);
        assert_relative_eq!(v.minus, (-2f64).exp() / 4.0, max_relative = 1e-15);

        let v = evolve_variances(1.0, 0.5, 1e4).unwrap();
        assert_relative_eq!(v.plus, 0.5, max_relative = 1e-12);
        assert_relative_eq!(v.minus, 0.5, max_relative = 1e-12);

        let v = evolve_variances(1.0, 0.5, 1.0).unwrap();
        let expected = (-0.5f64).exp() * (-2f64).exp() / 4.0 + 0.5 * (1.0 - (-0.5f64).exp());
        assert_relative_eq!(v.minus, expected, max_relative = 1e-14);
        assert_relative_eq!(v.minus, 0.2172, epsilon = 1e-4);

        assert!(evolve_variances(1.0, 0.5, -1.0).is_err());
    }

    #[test]
    fn full_covariance_matches_epr_variances() {
        for (r0, m, tau) in [(0.3, 0.0, 2.0), (1.0, 0.5, 1.0), (2.0, 3.0, 0.4)] {
            let v = evolve_variances(r0, m, tau).unwrap();
            let s = evolve_state(r0, m, tau).unwrap();
            let cov = s.cov();
            let plus = (cov[(0, 0)] + cov[(2, 2)]) / 2.0 + cov[(0, 2)];
            let minus = (cov[(0, 0)] + cov[(2, 2)]) / 2.0 - cov[(0, 2)];
            assert_relative_eq!(plus, v.plus, max_relative = 1e-13);
            assert_relative_eq!(minus, v.minus, max_relative = 1e-13);
            let ppt = s.ppt_separable();
            assert_relative_eq!(ppt.witness, v.minus.min(v.plus), max_relative = 1e-10);
        }
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(separability_time_rescaled(0.0, 1.0).unwrap(), SeparabilityTime::Never);
        assert_eq!(separability_time(1.0, 0.0, 2.0).unwrap(), SeparabilityTime::Never);

        let r0 = 1f64.asinh();
        let params = TwinBeamParams::from_squeezing(r0).unwrap();
        assert_relative_eq!(params.photon_number(), 2.0, max_relative = 1e-14);
        let ts = separability_time(1.0, 0.5, 2.0).unwrap().value().unwrap();
        assert_relative_eq!(ts, (8f64.sqrt() - 1.0).ln(), max_relative = 1e-14);
        assert_relative_eq!(ts, 0.6035, epsilon = 1e-4);

        let tau = separability_time_rescaled(0.5, r0).unwrap().value().unwrap();
        assert_relative_eq!(tau * gamma_drift(0.5), ts, max_relative = 1e-14);
        let fiber = FiberParams::new(1.0, 0.5, r0).unwrap();
        assert_relative_eq!(fiber.separability_time().unwrap().value().unwrap(), ts, max_relative = 1e-14);

        assert_relative_eq!(
            separability_time_large_n(1.0, 0.5).unwrap().value().unwrap(),
            2f64.ln(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn threshold_is_root_of_squeezed_variance() {
        for (m, r0) in [(0.1, 0.2), (0.5, 1.0), (4.0, 2.5)] {
            let tau = separability_time_rescaled(m, r0).unwrap().value().unwrap();
            let v = evolve_variances(r0, m, tau).unwrap();
            assert!((v.minus - 0.25).abs() < 1e-10);
            assert!(v.plus > 0.25);
        }
    }

    #[test]
    fn printed_forms_agree() {
        for (m, r0) in [(0.01, 0.05), (0.5, 1f64.asinh()), (5.0, 3.0)] {
            let n = TwinBeamParams::from_squeezing(r0).unwrap().photon_number();
            let a = separability_time_rescaled(m, r0).unwrap().value().unwrap();
            let b = separability_time_rescaled_from_photons(m, n).unwrap().value().unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn large_n_limit_from_below() {
        let limit = separability_time_large_n(1.0, 0.5).unwrap().value().unwrap();
        let mut last = 0.0;
        for n in [1e2, 1e4, 1e6, 1e8] {
            let t = separability_time(1.0, 0.5, n).unwrap().value().unwrap();
            assert!(t > last && t < limit);
            last = t;
        }
        assert!(limit - last < 1e-7);
    }

    #[test]
    fn scan_examples() {
        let r0 = 1f64.asinh();
        let tau = scan_separability(r0, 0.5, 10.0, 64).unwrap().value().unwrap();
        let closed = separability_time_rescaled(0.5, r0).unwrap().value().unwrap();
        assert!((tau - closed).abs() < 1e-8);
        assert_relative_eq!(tau * gamma_drift(0.5), 0.6035, epsilon = 1e-4);

        for r0 in [0.1, 1.0, 3.0] {
            assert_eq!(scan_separability(r0, 0.0, 1e3, 1000).unwrap(), ScanOutcome::NotFound);
        }
        assert!(scan_separability(1.0, 0.5, 10.0, 1).is_err());
    }

    #[test]
    fn threshold_increases_with_squeezing() {
        let mut last = 0.0;
        for k in 1..=20 {
            let t = scan_separability(0.15 * k as f64, 1.0, 20.0, 50).unwrap().value().unwrap();
            assert!(t > last);
            last = t;
        }
    }

    #[test]
    fn entanglement_never_returns() {
        let (r0, m) = (1.2, 0.7);
        let ts = separability_time_rescaled(m, r0).unwrap().value().unwrap();
        for k in 1..200 {
            let tau = ts * (1.0 + 0.05 * k as f64);
            assert!(evolve_variances(r0, m, tau).unwrap().minus >= 0.25);
        }
    }

    #[test]
    fn uncertainty_bound_holds() {
        let v = evolve_variances(0.8, 1.5, 0.0).unwrap();
        assert!(uncertainty_excess(&v).abs() < 1e-15);
        for tau in [0.1, 1.0, 10.0] {
            assert!(uncertainty_excess(&evolve_variances(0.8, 1.5, tau).unwrap()) > 0.0);
        }
    }
}
