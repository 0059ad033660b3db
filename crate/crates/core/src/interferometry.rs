//! Neyman–Pearson detection of an interferometric phase perturbation.
//!
//! The perturbation is `U_φ = exp{iφ(a†b + ab†)} = exp{2iφJ_x}`, the
//! convention under which the twin-beam overlap is
//! `|κ|² = [1 + N(N+2) sin²φ]⁻¹`.

use std::f64::consts::FRAC_PI_4;

use crate::error::{ensure, Error, Result};
use crate::fock::{self, FockTwoModeState, JxEvolution};
use crate::gaussian::TwinBeamParams;

/// Largest truncation tail accepted by the Fock-space routines here.
pub const TAIL_TOLERANCE: f64 = 1e-10;

/// Bisection tolerance when inverting the zero-count probability.
pub const INVERSION_TOL: f64 = 1e-10;

fn check_probability(name: &'static str, v: f64) -> Result<()> {
    ensure((0.0..=1.0).contains(&v), name, v, "0 <= value <= 1")
}

/// Optimal detection probability at false-alarm rate `q0` for two pure
/// states with squared overlap `kappa_sq`.
pub fn np_detection_probability(q0: f64, kappa_sq: f64) -> Result<f64> {
    check_probability("q0", q0)?;
    check_probability("kappa_sq", kappa_sq)?;
    if q0 > kappa_sq {
        return Ok(1.0);
    }
    let amp = (q0 * kappa_sq).sqrt() + ((1.0 - q0) * (1.0 - kappa_sq)).sqrt();
    Ok((amp * amp).min(1.0))
}

/// `|⟨⟨x|U_φ|x⟩⟩|²` for a twin-beam carrying `n` photons.
pub fn twin_beam_overlap_sq(n: f64, phi: f64) -> Result<f64> {
    ensure(n >= 0.0 && n.is_finite(), "N", n, "finite and >= 0")?;
    let s = phi.sin();
    Ok(1.0 / (1.0 + n * (n + 2.0) * s * s))
}

/// `g(Q₀, γ*)`: the overlap deficit `1 − |κ|²` at which the optimal test
/// reaches `Q_φ = γ*Q₀`. Also written `Λ(Q₀, γ*)`.
pub fn acceptance_deficit(q0: f64, gamma_star: f64) -> Result<f64> {
    check_probability("q0", q0)?;
    ensure(gamma_star >= 1.0, "gamma_star", gamma_star, ">= 1")?;
    ensure(gamma_star * q0 <= 1.0, "gamma_star * q0", gamma_star * q0, "<= 1")?;
    let root = (gamma_star * (1.0 - q0) * (1.0 - gamma_star * q0)).sqrt();
    Ok(q0 * (1.0 + gamma_star * (1.0 - 2.0 * q0) - 2.0 * root))
}

/// Probability that a detection is a true perturbation, `pγ*/(pγ* + 1 − p)`.
pub fn posterior_probability(p_prior: f64, gamma_star: f64) -> f64 {
    p_prior * gamma_star / (p_prior * gamma_star + 1.0 - p_prior)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MinPhase {
    Detectable(f64),
    /// The arcsin argument exceeds 1: no phase reaches the acceptance ratio.
    Undetectable { arcsin_argument: f64 },
}

impl MinPhase {
    pub fn value(&self) -> Option<f64> {
        match self {
            MinPhase::Detectable(v) => Some(*v),
            MinPhase::Undetectable { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealMinPhase {
    pub q0: f64,
    pub gamma_star: f64,
    pub photon_number: f64,
    pub lambda: f64,
    pub phi_min: MinPhase,
    /// Large-`N` form `√(Λ/(1−Λ))/N`.
    pub asymptote: f64,
}

impl IdealMinPhase {
    pub fn posterior(&self, p_prior: f64) -> f64 {
        posterior_probability(p_prior, self.gamma_star)
    }
}

pub fn min_detectable_phase_ideal(q0: f64, gamma_star: f64, n: f64) -> Result<IdealMinPhase> {
    ensure(n > 0.0 && n.is_finite(), "N", n, "finite and > 0")?;
    let lambda = acceptance_deficit(q0, gamma_star)?;
    ensure(lambda > 0.0 && lambda < 1.0, "Lambda", lambda, "0 < value < 1")?;
    let ratio = (lambda / (1.0 - lambda)).sqrt();
    let arg = ratio / (n * (n + 2.0)).sqrt();
    let phi_min = if arg <= 1.0 {
        MinPhase::Detectable(arg.asin())
    } else {
        MinPhase::Undetectable { arcsin_argument: arg }
    };
    Ok(IdealMinPhase {
        q0,
        gamma_star,
        photon_number: n,
        lambda,
        phi_min,
        asymptote: ratio / n,
    })
}

/// Mach–Zehnder with a twin-beam input and photocount-difference readout,
/// evaluated in truncated Fock space.
#[derive(Debug)]
pub struct MachZehnder {
    params: TwinBeamParams,
    d_max: usize,
    input: FockTwoModeState,
    evolution: JxEvolution,
}

impl MachZehnder {
    /// `d_max = None` picks the smallest truncation meeting [`TAIL_TOLERANCE`].
    pub fn new(x: f64, d_max: Option<usize>) -> Result<Self> {
        let params = TwinBeamParams::from_schmidt(x)?;
        let suggested = fock::default_d_max(x, TAIL_TOLERANCE);
        let d_max = d_max.unwrap_or(suggested);
        let tail = fock::twin_beam_tail(x, d_max);
        if tail >= TAIL_TOLERANCE {
            return Err(Error::TruncationTail {
                tail,
                tolerance: TAIL_TOLERANCE,
                suggested_d_max: suggested,
            });
        }
        let input = fock::twin_beam_fock(x, d_max)?;
        let evolution = JxEvolution::new(input.n_max());
        Ok(Self {
            params,
            d_max,
            input,
            evolution,
        })
    }

    pub fn params(&self) -> &TwinBeamParams {
        &self.params
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn evolved(&self, phi: f64) -> FockTwoModeState {
        self.evolution
            .apply(&self.input, 2.0 * phi)
            .expect("propagator matches input truncation")
    }

    /// `P(d ≡ 0 | U_φ) = Σ_n |⟨⟨n,n|U_φ|x⟩⟩|²`.
    pub fn zero_count_probability(&self, phi: f64) -> f64 {
        self.evolved(phi).zero_difference_probability()
    }

    /// `Q_φ = 1 − P(d ≡ 0 | U_φ)`; the false-alarm rate is zero.
    pub fn detection_probability(&self, phi: f64) -> f64 {
        1.0 - self.zero_count_probability(phi)
    }

    /// `Q₀ = P(d ≠ 0 | no perturbation)`, zero up to the truncation tail.
    pub fn false_alarm_probability(&self) -> f64 {
        1.0 - self.zero_count_probability(0.0) - fock::twin_beam_tail(self.params.x(), self.d_max)
    }

    /// `|⟨⟨x|U_φ|x⟩⟩|²` by brute force.
    pub fn overlap_sq(&self, phi: f64) -> f64 {
        fock::overlap(&self.input, &self.evolved(phi))
            .expect("same truncation")
            .norm_sqr()
    }

    /// Smallest `φ` with `Q_φ = target`: first crossing on `[0, π/4]`,
    /// refined by bisection.
    pub fn invert_detection(&self, target_q_phi: f64) -> Option<f64> {
        const GRID: usize = 256;
        let f = |phi: f64| self.detection_probability(phi) - target_q_phi;
        let mut lo = 0.0;
        let mut hi = None;
        for i in 1..=GRID {
            let phi = FRAC_PI_4 * i as f64 / GRID as f64;
            if f(phi) >= 0.0 {
                hi = Some(phi);
                break;
            }
            lo = phi;
        }
        let mut hi = hi?;
        while hi - lo > INVERSION_TOL {
            let mid = 0.5 * (lo + hi);
            if f(mid) >= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(0.5 * (lo + hi))
    }
}

/// One-shot zero-count probability.
pub fn mz_zero_count_probability(x: f64, phi: f64, d_max: Option<usize>) -> Result<f64> {
    Ok(MachZehnder::new(x, d_max)?.zero_count_probability(phi))
}

/// Small-phase Mach–Zehnder sensitivity `√(2Q_φ)/N`.
pub fn mz_min_phase(target_q_phi: f64, n: f64) -> Result<f64> {
    ensure(target_q_phi > 0.0 && target_q_phi < 1.0, "Q_phi", target_q_phi, "0 < value < 1")?;
    ensure(n > 0.0 && n.is_finite(), "N", n, "finite and > 0")?;
    Ok((2.0 * target_q_phi).sqrt() / n)
}
