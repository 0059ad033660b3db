//! Continuous-variable entanglement toolkit.
//!
//! Closed-form results for twin-beam (two-mode squeezed vacuum) protocols,
//! each paired with an independent numerical route:
//!
//! | module | closed form | independent route |
//! |--------|-------------|-------------------|
//! | [`estimation`] | heterodyne conditional variances | Monte Carlo over [`gaussian`] samples |
//! | [`discrimination`] | hull distance of the eigenvalue polygon | simplex brute force, explicit N-copy spectra |
//! | [`interferometry`] | Neyman–Pearson detection, twin-beam overlap | truncated Fock space ([`fock`]) |
//! | [`crypto`] | Erf error probabilities for Bob and Eve | protocol simulation, half-plane quadrature |
//! | [`fiber`] | separability time of a twin-beam in a noisy fiber | PPT bisection, Ornstein–Uhlenbeck sampling |
//!
//! Quadratures follow `x = (a + a†)/2`, so the vacuum has variance 1/4 per
//! quadrature.

pub mod crypto;
pub mod discrimination;
pub mod error;
pub mod estimation;
pub mod fiber;
pub mod fock;
pub mod gaussian;
pub mod interferometry;
pub mod oracle;
pub mod quad;

pub use error::{Error, Result};
pub use gaussian::{
    ComplexGaussian, GaussianTwoModeState, Mode, NoiseParams, NoiseTarget, PptReport,
    TwinBeamParams,
};

pub use num_complex::Complex64;
