//! Two-mode Gaussian states described by first and second moments.
//!
//! Quadrature ordering is `(x1, y1, x2, y2)` with `x = (a + a†)/2`,
//! `y = (a − a†)/2i`; the vacuum covariance is `diag(1/4, 1/4, 1/4, 1/4)`.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::PI;

use crate::error::{ensure, Error, Result};

/// Variance of each vacuum quadrature.
pub const VACUUM_VARIANCE: f64 = 0.25;

/// Relative tolerance for structural checks on covariance matrices.
const STRUCTURE_TOL: f64 = 1e-12;

/// Tolerance on the bona fide invariants, relative to the fourth power of the
/// largest covariance entry.
const BONA_FIDE_TOL: f64 = 1e-12;

/// Deterministic generator used for every Monte Carlo routine in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Squeezing of a twin-beam, kept in its three equivalent parametrisations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwinBeamParams {
    r0: f64,
    x: f64,
    photon_number: f64,
}

impl TwinBeamParams {
    pub fn from_squeezing(r0: f64) -> Result<Self> {
        ensure(r0 >= 0.0 && r0.is_finite(), "r0", r0, "finite and >= 0")?;
        let s = r0.sinh();
        Ok(Self {
            r0,
            x: r0.tanh(),
            photon_number: 2.0 * s * s,
        })
    }

    /// `x = tanh r0`, the Schmidt parameter of `√(1−x²) Σ x^p |p,p⟩`.
    pub fn from_schmidt(x: f64) -> Result<Self> {
        ensure((0.0..1.0).contains(&x), "x", x, "0 <= x < 1")?;
        Ok(Self {
            r0: x.atanh(),
            x,
            photon_number: 2.0 * x * x / (1.0 - x * x),
        })
    }

    /// Total mean photon number of both beams, `N = 2 sinh² r0`.
    pub fn from_photon_number(n: f64) -> Result<Self> {
        ensure(n >= 0.0 && n.is_finite(), "N", n, "finite and >= 0")?;
        Ok(Self {
            r0: (n / 2.0).sqrt().asinh(),
            x: (n / (n + 2.0)).sqrt(),
            photon_number: n,
        })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn photon_number(&self) -> f64 {
        self.photon_number
    }

    /// Complex-plane heterodyne variance `Δ²ₓ = (1−x)/(1+x) = e^{−2r0}`.
    pub fn heterodyne_variance(&self) -> f64 {
        (1.0 - self.x) / (1.0 + self.x)
    }
}

/// Mean thermal photon number of the Gaussian displacement channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParams {
    nbar: f64,
}

impl NoiseParams {
    pub fn new(nbar: f64) -> Result<Self> {
        ensure(nbar >= 0.0 && nbar.is_finite(), "nbar", nbar, "finite and >= 0")?;
        Ok(Self { nbar })
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    One,
    Two,
}

impl Mode {
    fn offset(self) -> usize {
        match self {
            Mode::One => 0,
            Mode::Two => 2,
        }
    }
}

impl TryFrom<u8> for Mode {
    type Error = Error;

    fn try_from(index: u8) -> Result<Self> {
        match index {
            1 => Ok(Mode::One),
            2 => Ok(Mode::Two),
            other => Err(Error::InvalidMode(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseTarget {
    One,
    Two,
    Both,
}

impl From<Mode> for NoiseTarget {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::One => NoiseTarget::One,
            Mode::Two => NoiseTarget::Two,
        }
    }
}

/// Circular complex Gaussian with `E|z − mean|² = variance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexGaussian {
    pub mean: Complex64,
    pub variance: f64,
}

impl ComplexGaussian {
    pub fn new(mean: Complex64, variance: f64) -> Result<Self> {
        ensure(
            variance > 0.0 && variance.is_finite(),
            "variance",
            variance,
            "finite and > 0",
        )?;
        Ok(Self { mean, variance })
    }

    pub fn pdf(&self, z: Complex64) -> f64 {
        (-(z - self.mean).norm_sqr() / self.variance).exp() / (PI * self.variance)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Complex64 {
        let sd = (self.variance / 2.0).sqrt();
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        self.mean + Complex64::new(sd * re, sd * im)
    }

    pub fn sample_n(&self, n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = seeded_rng(seed);
        (0..n).map(|_| self.sample(&mut rng)).collect()
    }
}

/// Outcome of the partial-transposition test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptReport {
    pub separable: bool,
    /// Smallest symplectic eigenvalue of the partially transposed covariance.
    pub witness: f64,
}

impl PptReport {
    /// `witness − 1/4`; negative means entangled.
    pub fn margin(&self) -> f64 {
        self.witness - VACUUM_VARIANCE
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianTwoModeState {
    mean: Vector4<f64>,
    cov: Matrix4<f64>,
}

impl GaussianTwoModeState {
    /// Validates symmetry, positive definiteness and `σ + (i/4)Ω ≥ 0`.
    pub fn new(mean: Vector4<f64>, cov: Matrix4<f64>) -> Result<Self> {
        if mean.iter().chain(cov.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonPhysical("non-finite entries"));
        }
        let scale = cov.amax().max(VACUUM_VARIANCE);
        if (cov - cov.transpose()).amax() > STRUCTURE_TOL * scale {
            return Err(Error::NonPhysical("covariance is not symmetric"));
        }
        let cov = (cov + cov.transpose()) * 0.5;
        if cov.cholesky().is_none() {
            return Err(Error::NonPhysical("covariance is not positive definite"));
        }
        // ν± ≥ v  ⇔  det σ ≥ v⁴ and (ν₊² − v²)(ν₋² − v²) = det σ − v²Δ + v⁴ ≥ 0,
        // which avoids the square root that amplifies rounding near pure states.
        let (delta, det) = symplectic_invariants(&cov);
        let v2 = VACUUM_VARIANCE * VACUUM_VARIANCE;
        let tol = BONA_FIDE_TOL * scale.powi(4);
        if det < v2 * v2 - tol || det - v2 * delta + v2 * v2 < -tol {
            return Err(Error::NonPhysical("violates the uncertainty principle"));
        }
        Ok(Self { mean, cov })
    }

    pub fn vacuum() -> Self {
        Self {
            mean: Vector4::zeros(),
            cov: Matrix4::identity() * VACUUM_VARIANCE,
        }
    }

    pub fn mean(&self) -> &Vector4<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix4<f64> {
        &self.cov
    }

    /// Shifts the chosen mode's quadrature means by `(Re α, Im α)`.
    pub fn apply_displacement(&self, alpha: Complex64, mode: Mode) -> Self {
        let mut out = self.clone();
        let k = mode.offset();
        out.mean[k] += alpha.re;
        out.mean[k + 1] += alpha.im;
        out
    }

    /// Random displacement with complex variance `n̄`: adds `n̄/2` to each
    /// quadrature variance of the targeted modes.
    pub fn apply_gaussian_noise(&self, noise: NoiseParams, target: NoiseTarget) -> Self {
        let mut out = self.clone();
        let idx: &[usize] = match target {
            NoiseTarget::One => &[0, 1],
            NoiseTarget::Two => &[2, 3],
            NoiseTarget::Both => &[0, 1, 2, 3],
        };
        for &i in idx {
            out.cov[(i, i)] += noise.nbar / 2.0;
        }
        out
    }

    /// Statistics of the joint measurement `Z` with `Re Z = x1 − x2`,
    /// `Im Z = y1 + y2`, the observable whose zero eigenstate is `Σ|p,p⟩`.
    ///
    /// Only defined on the twin-beam family: each mode isotropic and the
    /// cross block proportional to `diag(1, −1)`.
    pub fn heterodyne_distribution(&self) -> Result<ComplexGaussian> {
        let c = &self.cov;
        let tol = STRUCTURE_TOL * c.amax().max(VACUUM_VARIANCE);
        let in_family = (c[(0, 0)] - c[(1, 1)]).abs() <= tol
            && (c[(2, 2)] - c[(3, 3)]).abs() <= tol
            && c[(0, 1)].abs() <= tol
            && c[(2, 3)].abs() <= tol
            && c[(0, 3)].abs() <= tol
            && c[(1, 2)].abs() <= tol
            && (c[(0, 2)] + c[(1, 3)]).abs() <= tol;
        if !in_family {
            return Err(Error::UnsupportedState(
                "heterodyne statistics need a displaced or noisy twin-beam covariance",
            ));
        }
        let var_re = c[(0, 0)] + c[(2, 2)] - 2.0 * c[(0, 2)];
        let var_im = c[(1, 1)] + c[(3, 3)] + 2.0 * c[(1, 3)];
        let m = &self.mean;
        ComplexGaussian::new(Complex64::new(m[0] - m[2], m[1] + m[3]), var_re + var_im)
    }

    pub fn heterodyne_pdf(&self, z: Complex64) -> Result<f64> {
        Ok(self.heterodyne_distribution()?.pdf(z))
    }

    pub fn sample_heterodyne(&self, n_samples: usize, seed: u64) -> Result<Vec<Complex64>> {
        Ok(self.heterodyne_distribution()?.sample_n(n_samples, seed))
    }

    pub fn ppt_separable(&self) -> PptReport {
        ppt_report(&self.cov)
    }

    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        symplectic_spectrum(&self.cov)
    }
}

/// Twin-beam covariance: `(x1±x2)/√2` and `(y1∓y2)/√2` carry
/// `σ²₊ = e^{2r0}/4` and `σ²₋ = e^{−2r0}/4` respectively.
pub fn make_twin_beam(params: &TwinBeamParams) -> GaussianTwoModeState {
    let r = params.r0();
    let plus = (2.0 * r).exp() / 4.0;
    let minus = (-2.0 * r).exp() / 4.0;
    twin_beam_family(plus, minus)
}

/// Zero-mean state with the twin-beam correlation pattern and the given
/// variances on the anti-squeezed (`plus`) and squeezed (`minus`) EPR
/// combinations. The caller is responsible for `plus · minus ≥ 1/16`.
pub(crate) fn twin_beam_family(plus: f64, minus: f64) -> GaussianTwoModeState {
    let a = (plus + minus) / 2.0;
    let c = (plus - minus) / 2.0;
    #[rustfmt::skip]
    let cov = Matrix4::new(
        a,   0.0, c,   0.0,
        0.0, a,   0.0, -c,
        c,   0.0, a,   0.0,
        0.0, -c,  0.0, a,
    );
    GaussianTwoModeState {
        mean: Vector4::zeros(),
        cov,
    }
}

/// PPT test on a raw covariance matrix, validating it first.
pub fn ppt_from_covariance(cov: &Matrix4<f64>) -> Result<PptReport> {
    let state = GaussianTwoModeState::new(Vector4::zeros(), *cov)?;
    Ok(state.ppt_separable())
}

/// Momentum sign flip on mode 2.
pub fn partial_transpose(cov: &Matrix4<f64>) -> Matrix4<f64> {
    let flip = Matrix4::from_diagonal(&Vector4::new(1.0, 1.0, 1.0, -1.0));
    flip * cov * flip
}

fn ppt_report(cov: &Matrix4<f64>) -> PptReport {
    let (witness, _) = symplectic_spectrum(&partial_transpose(cov));
    PptReport {
        separable: witness >= VACUUM_VARIANCE,
        witness,
    }
}

/// `(Δ, det σ)` with `Δ = det A + det B + 2 det C`.
fn symplectic_invariants(cov: &Matrix4<f64>) -> (f64, f64) {
    let block = |r: usize, c: usize| -> Matrix2<f64> { cov.fixed_view::<2, 2>(r, c).into_owned() };
    let delta = block(0, 0).determinant() + block(2, 2).determinant() + 2.0 * block(0, 2).determinant();
    (delta, cov.determinant())
}

/// Symplectic eigenvalues `(ν₋, ν₊)` of a two-mode covariance matrix.
///
/// `K = σ^½ Ω σ^½` is antisymmetric with eigenvalues `±iν`, so `KᵀK` is
/// symmetric with each `ν²` appearing twice. Unlike the `(Δ, det σ)`
/// quadratic this stays accurate when `ν₋ ≈ ν₊`.
fn symplectic_spectrum(cov: &Matrix4<f64>) -> (f64, f64) {
    let eig = SymmetricEigen::new(*cov);
    let root_vals = eig.eigenvalues.map(|l| l.max(0.0).sqrt());
    let root = eig.eigenvectors * Matrix4::from_diagonal(&root_vals) * eig.eigenvectors.transpose();
    #[rustfmt::skip]
    let omega = Matrix4::new(
        0.0,  1.0, 0.0,  0.0,
        -1.0, 0.0, 0.0,  0.0,
        0.0,  0.0, 0.0,  1.0,
        0.0,  0.0, -1.0, 0.0,
    );
    let k = root * omega * root;
    let mut nu_sq: Vec<f64> = SymmetricEigen::new(k.transpose() * k).eigenvalues.iter().copied().collect();
    nu_sq.sort_by(f64::total_cmp);
    let minus_sq = 0.5 * (nu_sq[0] + nu_sq[1]);
    let plus_sq = 0.5 * (nu_sq[2] + nu_sq[3]);
    (minus_sq.max(0.0).sqrt(), plus_sq.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_squeezing_is_vacuum() {
        let s = make_twin_beam(&TwinBeamParams::from_squeezing(0.0).unwrap());
        assert_eq!(s, GaussianTwoModeState::vacuum());
    }

    #[test]
    fn twin_beam_epr_variances() {
        let s = make_twin_beam(&TwinBeamParams::from_squeezing(1.0).unwrap());
        let cov = s.cov();
        // Var((x1 + x2)/√2) and Var((x1 − x2)/√2)
        let var = |u: [f64; 4]| {
            let v = Vector4::from(u) / 2f64.sqrt();
            (v.transpose() * cov * v)[(0, 0)]
        };
        let e2 = (2.0f64).exp();
        assert_relative_eq!(var([1.0, 0.0, 1.0, 0.0]), e2 / 4.0, max_relative = 1e-14);
        assert_relative_eq!(var([0.0, 1.0, 0.0, -1.0]), e2 / 4.0, max_relative = 1e-14);
        assert_relative_eq!(var([1.0, 0.0, -1.0, 0.0]), 1.0 / (4.0 * e2), max_relative = 1e-14);
        assert_relative_eq!(var([0.0, 1.0, 0.0, 1.0]), 1.0 / (4.0 * e2), max_relative = 1e-14);
        assert_relative_eq!(e2 / 4.0, 1.847, epsilon = 1e-3);
        assert_relative_eq!(1.0 / (4.0 * e2), 0.0338, epsilon = 1e-4);
    }

    #[test]
    fn photon_number_of_schmidt_one_over_root_three() {
        let p = TwinBeamParams::from_schmidt(1.0 / 3f64.sqrt()).unwrap();
        assert_relative_eq!(p.photon_number(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(TwinBeamParams::from_squeezing(-0.1).is_err());
        assert!(TwinBeamParams::from_schmidt(1.0).is_err());
        assert!(TwinBeamParams::from_photon_number(f64::NAN).is_err());
        assert!(NoiseParams::new(-1e-3).is_err());
        assert_eq!(Mode::try_from(3), Err(Error::InvalidMode(3)));
        assert_eq!(Mode::try_from(2), Ok(Mode::Two));
    }

    #[test]
    fn displacement_examples() {
        let vac = GaussianTwoModeState::vacuum();
        assert_eq!(vac.apply_displacement(c(0.0, 0.0), Mode::One), vac);
        let coh = vac.apply_displacement(c(1.0, 0.0), Mode::One);
        assert_eq!(coh.mean(), &Vector4::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(coh.cov(), vac.cov());

        let tb = make_twin_beam(&TwinBeamParams::from_squeezing(1.0).unwrap());
        let moved = tb.apply_displacement(c(0.0, 2.0), Mode::Two);
        assert_eq!(moved.mean(), &Vector4::new(0.0, 0.0, 0.0, 2.0));
        assert_eq!(moved.cov(), tb.cov());
    }

    #[test]
    fn noise_examples() {
        let vac = GaussianTwoModeState::vacuum();
        let zero = NoiseParams::new(0.0).unwrap();
        assert_eq!(vac.apply_gaussian_noise(zero, NoiseTarget::Both), vac);

        let noisy = vac.apply_gaussian_noise(NoiseParams::new(1.0).unwrap(), NoiseTarget::One);
        assert_eq!(noisy.cov()[(0, 0)], 0.75);
        assert_eq!(noisy.cov()[(1, 1)], 0.75);
        assert_eq!(noisy.cov()[(2, 2)], 0.25);
    }

    #[test]
    fn noise_matches_random_displacement_sampling() {
        // Vacuum quadrature plus Re γ with γ ~ CN(0, 1), sampled directly.
        let mut rng = seeded_rng(11);
        let n = 200_000;
        let vac_sd = VACUUM_VARIANCE.sqrt();
        let gamma = ComplexGaussian::new(c(0.0, 0.0), 1.0).unwrap();
        let (mut sx, mut sxx, mut sy, mut syy) = (0.0, 0.0, 0.0, 0.0);
        for _ in 0..n {
            let g = gamma.sample(&mut rng);
            let x = vac_sd * rng.sample::<f64, _>(StandardNormal) + g.re;
            let y = vac_sd * rng.sample::<f64, _>(StandardNormal) + g.im;
            sx += x;
            sxx += x * x;
            sy += y;
            syy += y * y;
        }
        let nf = n as f64;
        let var_x = sxx / nf - (sx / nf).powi(2);
        let var_y = syy / nf - (sy / nf).powi(2);
        let noisy = GaussianTwoModeState::vacuum()
            .apply_gaussian_noise(NoiseParams::new(1.0).unwrap(), NoiseTarget::One);
        // sd of a sample variance of a Gaussian: σ²√(2/n)
        let tol = 3.0 * 0.75 * (2.0 / nf).sqrt();
        assert!((var_x - noisy.cov()[(0, 0)]).abs() < tol);
        assert!((var_y - noisy.cov()[(1, 1)]).abs() < tol);
    }

    #[test]
    fn heterodyne_examples() {
        let vac = GaussianTwoModeState::vacuum();
        let z = c(0.3, -0.7);
        let expected = (-z.norm_sqr()).exp() / PI;
        assert_relative_eq!(vac.heterodyne_pdf(z).unwrap(), expected, max_relative = 1e-14);

        let third = TwinBeamParams::from_schmidt(1.0 / 3.0).unwrap();
        let d = make_twin_beam(&third).heterodyne_distribution().unwrap();
        assert_relative_eq!(d.variance, 0.5, max_relative = 1e-12);
        assert_relative_eq!(third.heterodyne_variance(), 0.5, max_relative = 1e-14);

        let p = TwinBeamParams::from_schmidt(0.9).unwrap();
        let noisy = make_twin_beam(&p)
            .apply_gaussian_noise(NoiseParams::new(0.5).unwrap(), NoiseTarget::Both)
            .heterodyne_distribution()
            .unwrap();
        assert_relative_eq!(noisy.variance, 0.1 / 1.9 + 1.0, max_relative = 1e-12);
        assert_relative_eq!(noisy.variance, 1.0526, epsilon = 1e-4);
    }

    #[test]
    fn heterodyne_is_centred_on_the_displacement() {
        let p = TwinBeamParams::from_schmidt(0.6).unwrap();
        let alpha = c(1.5, -0.4);
        let d = make_twin_beam(&p)
            .apply_displacement(alpha, Mode::One)
            .heterodyne_distribution()
            .unwrap();
        assert_relative_eq!(d.mean.re, alpha.re);
        assert_relative_eq!(d.mean.im, alpha.im);
    }

    #[test]
    fn heterodyne_rejects_states_outside_family() {
        let mut cov = Matrix4::identity() * 0.3;
        cov[(0, 1)] = 0.05;
        cov[(1, 0)] = 0.05;
        let s = GaussianTwoModeState::new(Vector4::zeros(), cov).unwrap();
        assert!(matches!(s.heterodyne_distribution(), Err(Error::UnsupportedState(_))));
    }

    #[test]
    fn sampling_statistics_and_determinism() {
        let n = 100_000;
        let coherent = GaussianTwoModeState::vacuum().apply_displacement(c(3.0, 0.0), Mode::One);
        let s = coherent.sample_heterodyne(n, 5).unwrap();
        assert_eq!(s, coherent.sample_heterodyne(n, 5).unwrap());
        let nf = n as f64;
        let mean = s.iter().sum::<Complex64>() / nf;
        let var = s.iter().map(|z| (z - mean).norm_sqr()).sum::<f64>() / nf;
        // Complex variance 1: mean components have sd √(1/2n); |z−μ|² is Exp(1).
        assert!((mean.re - 3.0).abs() < 3.0 * (0.5 / nf).sqrt());
        assert!(mean.im.abs() < 3.0 * (0.5 / nf).sqrt());
        assert!((var - 1.0).abs() < 3.0 / nf.sqrt());

        let tight = make_twin_beam(&TwinBeamParams::from_schmidt(0.9).unwrap());
        let s = tight.sample_heterodyne(n, 6).unwrap();
        let var = s.iter().map(|z| z.norm_sqr()).sum::<f64>() / nf;
        let expected = 0.1 / 1.9;
        assert!((var - expected).abs() < 3.0 * expected / nf.sqrt());
    }

    #[test]
    fn ppt_examples() {
        let vac = GaussianTwoModeState::vacuum().ppt_separable();
        assert!(vac.separable);
        assert_relative_eq!(vac.witness, 0.25, max_relative = 1e-15);

        let tb = make_twin_beam(&TwinBeamParams::from_squeezing(1.0).unwrap()).ppt_separable();
        assert!(!tb.separable);
        assert_relative_eq!(tb.witness, (-2.0f64).exp() / 4.0, max_relative = 1e-10);
    }

    #[test]
    fn rejects_unphysical_covariances() {
        let squeezed_too_far = Matrix4::identity() * 0.2;
        assert!(matches!(
            GaussianTwoModeState::new(Vector4::zeros(), squeezed_too_far),
            Err(Error::NonPhysical(_))
        ));
        let mut asym = Matrix4::identity() * 0.3;
        asym[(0, 2)] = 0.01;
        assert!(ppt_from_covariance(&asym).is_err());
        assert!(ppt_from_covariance(&(Matrix4::identity() * 0.3)).unwrap().separable);
    }

    #[test]
    fn pure_twin_beam_is_bona_fide_at_large_squeezing() {
        for r in [0.5, 1.5, 3.0] {
            let s = make_twin_beam(&TwinBeamParams::from_squeezing(r).unwrap());
            assert!(GaussianTwoModeState::new(*s.mean(), *s.cov()).is_ok());
            let (lo, hi) = s.symplectic_eigenvalues();
            assert_relative_eq!(lo, 0.25, max_relative = 1e-6);
            assert_relative_eq!(hi, 0.25, max_relative = 1e-6);
        }
    }
}
