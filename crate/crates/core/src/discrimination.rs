//! Minimum-error discrimination of two unitaries from the eigenphases of
//! `U₂†U₁`.
//!
//! For a probe `ψ`, `⟨ψ|U₂†U₁|ψ⟩ = Σ_j |ψ_j|² e^{iγ_j}` ranges over the convex
//! polygon `K` spanned by the eigenvalues. The smallest reachable overlap is
//! the distance `r` from `K` to the origin.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{ensure, Result};

/// Phases closer than this (mod 2π) are merged into one eigenvalue.
const PHASE_MERGE_TOL: f64 = 1e-12;

/// Origin distances below this count as containment.
pub const HULL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenphaseSpectrum {
    phases: Vec<f64>,
}

impl EigenphaseSpectrum {
    /// Reduces the phases mod 2π, sorts them and collapses multiplicities.
    pub fn new(phases: &[f64]) -> Result<Self> {
        ensure(!phases.is_empty(), "spectrum length", 0.0, "at least one phase")?;
        if let Some(bad) = phases.iter().find(|p| !p.is_finite()) {
            ensure(false, "phase", *bad, "finite")?;
        }
        let mut reduced: Vec<f64> = phases.iter().map(|p| reduce_phase(*p)).collect();
        reduced.sort_by(f64::total_cmp);
        reduced.dedup_by(|b, a| (*b - *a).abs() <= PHASE_MERGE_TOL);
        if reduced.len() > 1 && reduced[0] + TAU - reduced[reduced.len() - 1] <= PHASE_MERGE_TOL {
            reduced.pop();
        }
        Ok(Self { phases: reduced })
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.phases.iter().map(|g| Complex64::from_polar(1.0, *g)).collect()
    }

    /// Eigenphases of `(U₂†U₁)^{⊗n}`: every sum of `n` phases, mod 2π.
    pub fn n_copy_spectrum(&self, n: usize) -> Result<Self> {
        ensure(n >= 1, "copies", n as f64, ">= 1")?;
        let mut sums = self.phases.clone();
        for _ in 1..n {
            let next: Vec<f64> = sums
                .iter()
                .flat_map(|s| self.phases.iter().map(move |g| s + g))
                .collect();
            sums = Self::new(&next)?.phases;
        }
        Self::new(&sums)
    }

    /// Eigenphases of `U₂†U₁ ⊗ I` on an ancilla of dimension `ancilla_dim`.
    pub fn with_identity_ancilla(&self, ancilla_dim: usize) -> Result<Self> {
        ensure(ancilla_dim >= 1, "ancilla dimension", ancilla_dim as f64, ">= 1")?;
        let repeated: Vec<f64> = self
            .phases
            .iter()
            .flat_map(|g| std::iter::repeat_n(*g, ancilla_dim))
            .collect();
        Self::new(&repeated)
    }
}

fn reduce_phase(p: f64) -> f64 {
    let r = p.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonK {
    /// `e^{iγ_j}` in increasing phase order, which is also hull order.
    pub vertices: Vec<Complex64>,
    /// Distance from the polygon to the origin.
    pub r: f64,
    /// Minimal arc of the unit circle covering every eigenvalue.
    pub delta: f64,
    /// Phases bounding the covering arc, `γ₊ − γ₋ = Δ` (mod 2π).
    pub gamma_minus: f64,
    pub gamma_plus: f64,
    /// Nearest point of the polygon to the origin.
    pub nearest: Complex64,
    /// Probe weights `|ψ_j|²` realising `nearest`, aligned with `vertices`.
    pub weights: Vec<f64>,
}

impl PolygonK {
    pub fn contains_origin(&self) -> bool {
        self.r == 0.0
    }
}

pub fn build_polygon(spectrum: &EigenphaseSpectrum) -> PolygonK {
    let phases = spectrum.phases();
    let vertices = spectrum.eigenvalues();
    let m = phases.len();

    // Largest circular gap; the covering arc is its complement.
    let (mut gap, mut gap_end) = (phases[0] + TAU - phases[m - 1], 0usize);
    for i in 1..m {
        let g = phases[i] - phases[i - 1];
        if g > gap {
            gap = g;
            gap_end = i;
        }
    }
    let delta = if m == 1 { 0.0 } else { TAU - gap };
    let gamma_minus = phases[gap_end];
    let gamma_plus = phases[(gap_end + m - 1) % m];

    let (nearest, weights) = nearest_point(&vertices);
    let r = nearest.norm();
    let (r, nearest) = if r <= HULL_TOL {
        (0.0, Complex64::new(0.0, 0.0))
    } else {
        (r, nearest)
    };
    PolygonK {
        vertices,
        r,
        delta,
        gamma_minus,
        gamma_plus,
        nearest,
        weights,
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Nearest hull point to the origin and barycentric weights producing it.
fn nearest_point(vertices: &[Complex64]) -> (Complex64, Vec<f64>) {
    let m = vertices.len();
    let mut weights = vec![0.0; m];
    if m == 1 {
        weights[0] = 1.0;
        return (vertices[0], weights);
    }

    if m >= 3 && let Some((tri, bary)) = containing_triangle(vertices) {
        for (idx, w) in tri.iter().zip(bary) {
            weights[*idx] = w;
        }
        return (Complex64::new(0.0, 0.0), weights);
    }

    // Origin outside (or on the boundary): closest point over hull edges,
    // ties resolved towards the lowest starting vertex.
    let edges = if m == 2 { 1 } else { m };
    let mut best: Option<(f64, usize, usize, f64)> = None;
    for i in 0..edges {
        let j = (i + 1) % m;
        let (a, b) = (vertices[i], vertices[j]);
        let d = b - a;
        let t = if d.norm_sqr() > 0.0 {
            (-(a.re * d.re + a.im * d.im) / d.norm_sqr()).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let dist = (a + d * t).norm();
        if best.is_none_or(|(bd, ..)| dist < bd) {
            best = Some((dist, i, j, t));
        }
    }
    let (_, i, j, t) = best.expect("at least one edge");
    weights[i] += 1.0 - t;
    weights[j] += t;
    (vertices[i] * (1.0 - t) + vertices[j] * t, weights)
}

/// Fan triangle from vertex 0 containing the origin, with barycentric
/// coordinates of the origin.
fn containing_triangle(vertices: &[Complex64]) -> Option<([usize; 3], [f64; 3])> {
    let a = vertices[0];
    let mut best: Option<([usize; 3], [f64; 3])> = None;
    for k in 1..vertices.len() - 1 {
        let (b, c) = (vertices[k], vertices[k + 1]);
        let area2 = cross(b - a, c - a);
        if area2 <= 0.0 {
            continue;
        }
        let bary = [cross(b, c) / area2, cross(c, a) / area2, cross(a, b) / area2];
        let worst = bary.iter().cloned().fold(f64::INFINITY, f64::min);
        if worst >= -HULL_TOL && best.is_none_or(|(_, w)| worst > w.iter().cloned().fold(f64::INFINITY, f64::min)) {
            best = Some(([0, k, k + 1], bary));
        }
    }
    best.map(|(idx, bary)| {
        let clipped = bary.map(|w| w.max(0.0));
        let total: f64 = clipped.iter().sum();
        (idx, clipped.map(|w| w / total))
    })
}

/// Helstrom bound for the optimal probe, `½(1 − √(1 − r²))`.
pub fn min_error_probability(polygon: &PolygonK) -> f64 {
    helstrom_pure(polygon.r * polygon.r)
}

/// `½(1 − √(1 − |⟨a|b⟩|²))` for two pure states.
pub fn helstrom_pure(overlap_sq: f64) -> f64 {
    0.5 * (1.0 - (1.0 - overlap_sq.clamp(0.0, 1.0)).sqrt())
}

/// Closed-form error in terms of the spread alone,
/// `½(1 − √(1 − cos⁴(Δ/2)))` for `Δ < π` and 0 beyond.
///
/// This equals [`helstrom_pure`] at overlap `r⁴` rather than `r²`, with
/// `r = cos(Δ/2)`, so it sits below [`min_error_probability`] for two-point
/// spectra.
pub fn spread_formula_error(delta: f64) -> f64 {
    if delta >= PI {
        return 0.0;
    }
    helstrom_pure((delta / 2.0).cos().powi(4))
}

pub fn optimal_probe_weights(polygon: &PolygonK) -> &[f64] {
    &polygon.weights
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AncillaComparison {
    pub r_single: f64,
    pub r_with_ancilla: f64,
    pub equal: bool,
}

/// Compares the polygon of `U₂†U₁` with that of `U₂†U₁ ⊗ I`.
pub fn entanglement_no_single_copy_gain(spectrum: &EigenphaseSpectrum) -> AncillaComparison {
    let extended = spectrum
        .with_identity_ancilla(2)
        .expect("ancilla dimension is positive");
    let r_single = build_polygon(spectrum).r;
    let r_with_ancilla = build_polygon(&extended).r;
    AncillaComparison {
        r_single,
        r_with_ancilla,
        equal: r_single == r_with_ancilla,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Copies {
    Finite(usize),
    /// `Δ = 0`: the unitaries differ by a global phase.
    Unbounded,
}

/// Smallest `N` with `N·Δ ≥ π`, at which the N-copy polygon reaches the
/// origin.
pub fn copies_for_exact(spectrum: &EigenphaseSpectrum) -> Copies {
    let delta = build_polygon(spectrum).delta;
    if delta <= 0.0 {
        return Copies::Unbounded;
    }
    if delta >= PI - HULL_TOL {
        return Copies::Finite(1);
    }
    let mut n = (PI / delta).ceil() as usize;
    // Guard against π/Δ landing just above an integer through rounding.
    while n > 1 && (n - 1) as f64 * delta >= PI - HULL_TOL {
        n -= 1;
    }
    Copies::Finite(n)
}
