//! Truncated two-mode Fock space, used as a brute-force oracle.
//!
//! States are stored block by block in total photon number: block `n` holds
//! the amplitudes `⟨k, n−k|ψ⟩` for `k = 0..=n`. Beam-splitter generators
//! conserve `a†a + b†b`, so evolution never mixes blocks.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use std::sync::OnceLock;

use crate::error::{ensure, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Tail tolerance used when a truncation is chosen automatically.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct FockTwoModeState {
    blocks: Vec<DVector<Complex64>>,
}

impl FockTwoModeState {
    pub fn zeros(n_max: usize) -> Self {
        Self {
            blocks: (0..=n_max).map(|n| DVector::from_element(n + 1, ZERO)).collect(),
        }
    }

    /// Builds the state from `(p, q) ↦ ⟨p, q|ψ⟩` for all `p + q ≤ n_max`.
    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(n_max: usize, mut f: F) -> Self {
        let mut s = Self::zeros(n_max);
        for (n, block) in s.blocks.iter_mut().enumerate() {
            for k in 0..=n {
                block[k] = f(k, n - k);
            }
        }
        s
    }

    /// `|p, q⟩`.
    pub fn basis(p: usize, q: usize, n_max: usize) -> Result<Self> {
        if p + q > n_max {
            return Err(Error::ShapeMismatch {
                left: p + q,
                right: n_max,
            });
        }
        let mut s = Self::zeros(n_max);
        s.blocks[p + q][p] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Largest total photon number kept.
    pub fn n_max(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn amplitude(&self, p: usize, q: usize) -> Complex64 {
        self.blocks.get(p + q).map_or(ZERO, |b| b[p])
    }

    pub fn block(&self, n: usize) -> &DVector<Complex64> {
        &self.blocks[n]
    }

    pub fn block_norms_sqr(&self) -> Vec<f64> {
        self.blocks.iter().map(|b| b.norm_squared()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.block_norms_sqr().iter().sum()
    }

    /// `⟨a⟩` for mode 1 or `⟨b⟩` for mode 2 within the truncation.
    pub fn mean_annihilation(&self, mode: crate::Mode) -> Complex64 {
        let mut acc = ZERO;
        for n in 1..self.blocks.len() {
            let (lower, upper) = (&self.blocks[n - 1], &self.blocks[n]);
            for k in 0..=n {
                let (p, q) = (k, n - k);
                let (src, factor) = match mode {
                    crate::Mode::One if p > 0 => (p - 1, p),
                    crate::Mode::Two if q > 0 => (p, q),
                    _ => continue,
                };
                acc += lower[src].conj() * upper[k] * (factor as f64).sqrt();
            }
        }
        acc
    }

    /// `P(d = 0)` for the photocount difference `a†a − b†b`: `Σ_n |⟨n,n|ψ⟩|²`.
    pub fn zero_difference_probability(&self) -> f64 {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(n, _)| n % 2 == 0)
            .map(|(n, b)| b[n / 2].norm_sqr())
            .sum()
    }
}

/// `√(1−x²) Σ_{p ≤ d_max} x^p |p, p⟩`.
pub fn twin_beam_fock(x: f64, d_max: usize) -> Result<FockTwoModeState> {
    ensure((0.0..1.0).contains(&x), "x", x, "0 <= x < 1")?;
    let mut s = FockTwoModeState::zeros(2 * d_max);
    let mut amp = (1.0 - x * x).sqrt();
    for p in 0..=d_max {
        s.blocks[2 * p][p] = Complex64::new(amp, 0.0);
        amp *= x;
    }
    Ok(s)
}

/// Probability mass dropped by truncating a twin-beam at `d_max`: `x^{2(d_max+1)}`.
pub fn twin_beam_tail(x: f64, d_max: usize) -> f64 {
    x.powi(2 * (d_max as i32 + 1))
}

/// Smallest `d_max` whose twin-beam tail is below `tolerance`.
pub fn default_d_max(x: f64, tolerance: f64) -> usize {
    if x <= 0.0 {
        return 0;
    }
    let needed = (tolerance.ln() / (2.0 * x.ln())).ceil() - 1.0;
    let mut d = needed.max(0.0) as usize;
    while twin_beam_tail(x, d) >= tolerance {
        d += 1;
    }
    d
}

/// Inner product `⟨a|b⟩`.
pub fn overlap(a: &FockTwoModeState, b: &FockTwoModeState) -> Result<Complex64> {
    if a.n_max() != b.n_max() {
        return Err(Error::ShapeMismatch {
            left: a.n_max(),
            right: b.n_max(),
        });
    }
    Ok(a.blocks.iter().zip(&b.blocks).map(|(u, v)| u.dotc(v)).sum())
}

/// `J_x = (a†b + ab†)/2` restricted to total photon number `n`, in the
/// basis `|k, n−k⟩`.
pub fn jx_block(n: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n + 1, n + 1);
    for k in 0..n {
        // a†b |k, n−k⟩ = √((k+1)(n−k)) |k+1, n−k−1⟩
        let v = 0.5 * (((k + 1) * (n - k)) as f64).sqrt();
        m[(k + 1, k)] = v;
        m[(k, k + 1)] = v;
    }
    m
}

/// `exp(iφJ_x)` with per-block eigendecompositions computed on first use.
#[derive(Debug)]
pub struct JxEvolution {
    blocks: Vec<OnceLock<SymmetricEigen<f64, nalgebra::Dyn>>>,
}

impl JxEvolution {
    pub fn new(n_max: usize) -> Self {
        Self {
            blocks: (0..=n_max).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.blocks.len() - 1
    }

    fn eigen(&self, n: usize) -> &SymmetricEigen<f64, nalgebra::Dyn> {
        self.blocks[n].get_or_init(|| SymmetricEigen::new(jx_block(n)))
    }

    pub fn apply(&self, state: &FockTwoModeState, phi: f64) -> Result<FockTwoModeState> {
        if state.n_max() != self.n_max() {
            return Err(Error::ShapeMismatch {
                left: state.n_max(),
                right: self.n_max(),
            });
        }
        let blocks = state
            .blocks
            .iter()
            .enumerate()
            .map(|(n, v)| {
                if v.iter().all(|c| *c == ZERO) {
                    return v.clone();
                }
                let eig = self.eigen(n);
                let basis = eig.eigenvectors.map(|r| Complex64::new(r, 0.0));
                let mut coeffs = basis.transpose() * v;
                for (c, lambda) in coeffs.iter_mut().zip(eig.eigenvalues.iter()) {
                    *c *= Complex64::from_polar(1.0, phi * lambda);
                }
                basis * coeffs
            })
            .collect();
        Ok(FockTwoModeState { blocks })
    }
}

/// One-shot `exp(iφJ_x)|ψ⟩`.
pub fn apply_jx_evolution(state: &FockTwoModeState, phi: f64) -> FockTwoModeState {
    JxEvolution::new(state.n_max())
        .apply(state, phi)
        .expect("propagator built for this truncation")
}

/// First `dim` amplitudes of `D(β)|p⟩`, from `D(β)|p⟩ = (a† − β̄)^p/√p! |β⟩`.
///
/// Row `m` of `a†v` only depends on rows below `m`, so truncating before
/// applying the raising operators is exact.
pub fn displaced_number_state(beta: Complex64, p: usize, dim: usize) -> DVector<Complex64> {
    let mut v = DVector::from_element(dim, ZERO);
    if dim == 0 {
        return v;
    }
    v[0] = Complex64::new((-beta.norm_sqr() / 2.0).exp(), 0.0);
    for m in 1..dim {
        v[m] = v[m - 1] * beta / (m as f64).sqrt();
    }
    let bc = beta.conj();
    for k in 0..p {
        let mut next = DVector::from_element(dim, ZERO);
        for m in 0..dim {
            let raised = if m > 0 { v[m - 1] * (m as f64).sqrt() } else { ZERO };
            next[m] = (raised - bc * v[m]) / ((k + 1) as f64).sqrt();
        }
        v = next;
    }
    v
}
