//! Subcommand arguments and row builders.

use clap::{Args, ValueEnum};

use cventlab::crypto::{
    bob_heterodyne_error, bob_ideal_asymptote, bob_ideal_error, coherent_error,
    eve_error_gaussian_key, eve_error_gaussian_key_asymptote, positive_eigenvalue_sum,
    security_margin, simulate_binary_protocol, ProtocolConfig,
};
use cventlab::discrimination::{
    build_polygon, copies_for_exact, helstrom_pure, min_error_probability, spread_formula_error,
    Copies, EigenphaseSpectrum,
};
use cventlab::estimation::{
    conditional_variance, entanglement_convenient, noise_crossover, simulate_estimation,
    EstimationSetting,
};
use cventlab::fiber::{
    scan_separability, separability_time, separability_time_large_n, separability_time_rescaled,
    separability_time_rescaled_from_photons, FiberParams, SeparabilityTime,
};
use cventlab::interferometry::{
    min_detectable_phase_ideal, mz_min_phase, np_detection_probability, twin_beam_overlap_sq,
    MachZehnder,
};
use cventlab::oracle::{half_plane_positive_mass, simplex_min_modulus};
use cventlab::{Complex64, TwinBeamParams};

use crate::sweep::{grid, RangeSpec};
use crate::table::{format_number, Table, Value};
use crate::CliError;

/// A subcommand evaluated at one parameter point per row.
pub trait Experiment: Clone {
    const NAME: &'static str;
    /// Parameters accepted by `--range`.
    const KEYS: &'static [&'static str];

    fn set(&mut self, key: &str, value: f64);
    fn columns(&self) -> Vec<&'static str>;
    fn params(&self) -> Vec<(String, Value)>;
    fn row(&self, seed: u64) -> Result<Vec<Value>, CliError>;

    fn validate(&self) -> Result<(), CliError> {
        Ok(())
    }
}

/// Row `i` of a sweep draws from its own stream; row 0 uses `seed` itself.
fn row_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn run_experiment<E: Experiment>(base: &E, ranges: &[RangeSpec], seed: u64) -> Result<Table, CliError> {
    for (i, r) in ranges.iter().enumerate() {
        if !E::KEYS.contains(&r.key.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown range key '{}' for {}; expected one of: {}",
                r.key,
                E::NAME,
                E::KEYS.join(", ")
            )));
        }
        if ranges[..i].iter().any(|p| p.key == r.key) {
            return Err(CliError::Usage(format!("range key '{}' given twice", r.key)));
        }
    }
    let points = grid(ranges);
    let mut rows = Vec::with_capacity(points.len());
    let mut columns = base.columns();
    for (i, point) in points.iter().enumerate() {
        let mut e = base.clone();
        for (k, v) in point {
            e.set(k, *v);
        }
        e.validate()?;
        columns = e.columns();
        rows.push(e.row(row_seed(seed, i))?);
    }
    Ok(Table {
        command: E::NAME.to_string(),
        seed,
        params: base.params(),
        ranges: ranges.iter().map(|r| r.to_string()).collect(),
        columns,
        rows,
    })
}

fn diff(a: Option<f64>, b: Option<f64>) -> Value {
    match (a, b) {
        (Some(a), Some(b)) => Value::Num(b - a),
        _ => Value::Missing,
    }
}

fn num(name: &str, v: f64) -> (String, Value) {
    (name.to_string(), Value::Num(v))
}

#[derive(Debug, Clone, Args)]
pub struct EstimateArgs {
    /// Schmidt parameter of the twin-beam probe.
    #[arg(long, default_value_t = 0.9)]
    pub x: f64,
    /// Total noise of the channel.
    #[arg(long, default_value_t = 0.5)]
    pub nbar: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub alpha_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha_im: f64,
    /// Monte Carlo trials per probe.
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
}

impl Experiment for EstimateArgs {
    const NAME: &'static str = "estimate";
    const KEYS: &'static [&'static str] = &["x", "nbar", "alpha_re", "alpha_im"];

    fn set(&mut self, key: &str, value: f64) {
        match key {
            "x" => self.x = value,
            "nbar" => self.nbar = value,
            "alpha_re" => self.alpha_re = value,
            "alpha_im" => self.alpha_im = value,
            _ => unreachable!("validated key"),
        }
    }

    fn columns(&self) -> Vec<&'static str> {
        vec![
            "x",
            "nbar",
            "alpha_re",
            "alpha_im",
            "trials",
            "delta_sq",
            "sigma2_entangled",
            "sigma2_unentangled",
            "noise_crossover",
            "entanglement_convenient",
            "mc_sigma2_entangled",
            "mc_sigma2_unentangled",
            "diff_entangled",
            "diff_unentangled",
            "stderr_entangled",
            "stderr_unentangled",
        ]
    }

    fn params(&self) -> Vec<(String, Value)> {
        vec![
            num("x", self.x),
            num("nbar", self.nbar),
            num("alpha_re", self.alpha_re),
            num("alpha_im", self.alpha_im),
            ("trials".into(), self.trials.into()),
        ]
    }

    fn row(&self, seed: u64) -> Result<Vec<Value>, CliError> {
        let s = EstimationSetting::new(self.x, self.nbar, Complex64::new(self.alpha_re, self.alpha_im))?;
        let v = conditional_variance(&s);
        let mc = simulate_estimation(&s, self.trials, seed)?;
        let (me, mu) = (mc.entangled.powi(2), mc.unentangled.powi(2));
        let root_n = (self.trials as f64).sqrt();
        Ok(vec![
            self.x.into(),
            self.nbar.into(),
            self.alpha_re.into(),
            self.alpha_im.into(),
            self.trials.into(),
            TwinBeamParams::from_schmidt(self.x)?.heterodyne_variance().into(),
            v.entangled.into(),
            v.unentangled.into(),
            noise_crossover(self.x)?.into(),
            entanglement_convenient(&s).into(),
            me.into(),
            mu.into(),
            (me - v.entangled).into(),
            (mu - v.unentangled).into(),
            (v.entangled / root_n).into(),
            (v.unentangled / root_n).into(),
        ])
    }
}

#[derive(Debug, Clone, Args)]
pub struct DiscriminateArgs {
    /// Eigenphases of U₂†U₁, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "delta")]
    pub phases: Vec<f64>,
    /// Two-point spectrum {0, delta}.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Random simplex points for the brute-force oracle.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
}

/// Largest explicit N-copy spectrum built for the `n_copy_r` column.
const MAX_N_COPY_TERMS: f64 = 2e5;

impl DiscriminateArgs {
    fn spectrum_phases(&self) -> Vec<f64> {
        match self.delta {
            Some(d) => vec![0.0, d],
            None => self.phases.clone(),
        }
    }
}

/// Multisets of size `n` drawn from `m` phases, `C(n+m−1, m−1)`.
fn multiset_count(m: usize, n: usize) -> f64 {
    (1..m).fold(1.0, |acc, k| acc * (n + k) as f64 / k as f64)
}

impl Experiment for DiscriminateArgs {
    const NAME: &'static str = "discriminate";
    const KEYS: &'static [&'static str] = &["delta"];

    fn set(&mut self, key: &str, value: f64) {
        match key {
            "delta" => self.delta = Some(value),
            _ => unreachable!("validated key"),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.delta.is_some() && !self.phases.is_empty() {
            return Err(CliError::Usage("--phases cannot be combined with a delta sweep".into()));
        }
        if self.delta.is_none() && self.phases.is_empty() {
            return Err(CliError::Usage("give --phases or --delta".into()));
        }
        if self.samples == 0 {
            return Err(CliError::Usage("--samples must be positive".into()));
        }
        Ok(())
    }

    fn columns(&self) -> Vec<&'static str> {
        vec![
            "phases",
            "n_phases",
            "delta",
            "r",
            "p_error",
            "p_error_spread",
            "brute_r",
            "brute_p_error",
            "diff_p_error",
            "copies_for_exact",
            "n_copy_r",
        ]
    }

    fn params(&self) -> Vec<(String, Value)> {
        let phases = self.spectrum_phases().iter().map(|p| format_number(*p)).collect::<Vec<_>>().join(",");
        vec![
            ("phases".into(), Value::Text(phases)),
            ("samples".into(), self.samples.into()),
        ]
    }

    fn row(&self, seed: u64) -> Result<Vec<Value>, CliError> {
        let spectrum = EigenphaseSpectrum::new(&self.spectrum_phases())?;
        let polygon = build_polygon(&spectrum);
        let p_error = min_error_probability(&polygon);
        let brute_r = simplex_min_modulus(spectrum.phases(), self.samples, seed)?;
        let brute_p_error = helstrom_pure(brute_r * brute_r);
        let (copies, n_copy_r) = match copies_for_exact(&spectrum) {
            Copies::Finite(n) => {
                let r = if multiset_count(spectrum.phases().len(), n) <= MAX_N_COPY_TERMS {
                    Value::Num(build_polygon(&spectrum.n_copy_spectrum(n)?).r)
                } else {
                    Value::Missing
                };
                (Value::from(n), r)
            }
            Copies::Unbounded => (Value::Missing, Value::Missing),
        };
        let phases = spectrum.phases().iter().map(|p| format_number(*p)).collect::<Vec<_>>().join(",");
        Ok(vec![
            Value::Text(phases),
            spectrum.phases().len().into(),
            polygon.delta.into(),
            polygon.r.into(),
            p_error.into(),
            spread_formula_error(polygon.delta).into(),
            brute_r.into(),
            brute_p_error.into(),
            (brute_p_error - p_error).into(),
            copies,
            n_copy_r,
        ])
    }
}

#[derive(Debug, Clone, Args)]
pub struct InterfereArgs {
    /// Schmidt parameter of the twin-beam input.
    #[arg(long, default_value_t = 0.5)]
    pub x: f64,
    /// Phase of the perturbation.
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub phi: f64,
    /// False-alarm probability of the ideal test.
    #[arg(long, default_value_t = 0.01)]
    pub q0: f64,
    /// Required ratio of detection to false-alarm probability.
    #[arg(long, default_value_t = 10.0)]
    pub gamma_star: f64,
    /// Target detection probability for the Mach–Zehnder scheme.
    #[arg(long, default_value_t = 0.05)]
    pub q: f64,
    /// Fock truncation per mode; picked from the tail tolerance when omitted.
    #[arg(long)]
    pub d_max: Option<usize>,
}

impl Experiment for InterfereArgs {
    const NAME: &'static str = "interfere";
    const KEYS: &'static [&'static str] = &["x", "phi", "q0", "gamma_star", "q"];

    fn set(&mut self, key: &str, value: f64) {
        match key {
            "x" => self.x = value,
            "phi" => self.phi = value,
            "q0" => self.q0 = value,
            "gamma_star" => self.gamma_star = value,
            "q" => self.q = value,
            _ => unreachable!("validated key"),
        }
    }

    fn columns(&self) -> Vec<&'static str> {
        vec![
            "x",
            "photon_number",
            "phi",
            "d_max",
            "kappa_sq",
            "kappa_sq_fock",
            "diff_kappa_sq",
            "p_zero_count",
            "q0",
            "q_phi_np",
            "gamma_star",
            "lambda",
            "phi_min_ideal",
            "phi_min_ideal_asymptote",
            "q_target",
            "phi_min_mz",
            "phi_min_mz_fock",
            "diff_phi_min_mz",
            "false_alarm_mz",
        ]
    }

    fn params(&self) -> Vec<(String, Value)> {
        vec![
            num("x", self.x),
            num("phi", self.phi),
            num("q0", self.q0),
            num("gamma_star", self.gamma_star),
            num("q", self.q),
            ("d_max".into(), self.d_max.map_or(Value::Missing, Value::from)),
        ]
    }

    fn row(&self, _seed: u64) -> Result<Vec<Value>, CliError> {
        let n = TwinBeamParams::from_schmidt(self.x)?.photon_number();
        let mz = MachZehnder::new(self.x, self.d_max)?;
        let kappa_sq = twin_beam_overlap_sq(n, self.phi)?;
        let kappa_fock = mz.overlap_sq(self.phi);
        let ideal = min_detectable_phase_ideal(self.q0, self.gamma_star, n)?;
        let mz_closed = mz_min_phase(self.q, n)?;
        let mz_fock = mz.invert_detection(self.q);
        Ok(vec![
            self.x.into(),
            n.into(),
            self.phi.into(),
            mz.d_max().into(),
            kappa_sq.into(),
            kappa_fock.into(),
            (kappa_fock - kappa_sq).into(),
            mz.zero_count_probability(self.phi).into(),
            self.q0.into(),
            np_detection_probability(self.q0, kappa_sq)?.into(),
            self.gamma_star.into(),
            ideal.lambda.into(),
            ideal.phi_min.value().into(),
            ideal.asymptote.into(),
            self.q.into(),
            mz_closed.into(),
            mz_fock.into(),
            diff(Some(mz_closed), mz_fock),
            mz.false_alarm_probability().into(),
        ])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CryptoMode {
    /// Closed-form error probabilities.
    Analytic,
    /// End-to-end protocol simulation.
    Simulate,
}

#[derive(Debug, Clone, Args)]
pub struct CryptoArgs {
    #[arg(value_enum, default_value_t = CryptoMode::Analytic)]
    pub mode: CryptoMode,
    /// Schmidt parameter of the twin-beam carrier.
    #[arg(long, default_value_t = 0.8)]
    pub x: f64,
    /// Symbol amplitude, symbols at ±a.
    #[arg(long, default_value_t = 0.5)]
    pub a: f64,
    /// Variance of the Gaussian key.
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    /// Thermal noise on the line (simulation only).
    #[arg(long, default_value_t = 0.0)]
    pub nbar: f64,
    /// Bits sent in a simulation.
    #[arg(long, default_value_t = 1_000_000)]
    pub bits: u64,
}

impl Experiment for CryptoArgs {
    const NAME: &'static str = "crypto";
    const KEYS: &'static [&'static str] = &["x", "a", "kappa", "nbar"];

    fn set(&mut self, key: &str, value: f64) {
        match key {
            "x" => self.x = value,
            "a" => self.a = value,
            "kappa" => self.kappa = value,
            "nbar" => self.nbar = value,
            _ => unreachable!("validated key"),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.mode == CryptoMode::Analytic && self.nbar != 0.0 {
            return Err(CliError::Usage("--nbar only applies to 'crypto simulate'".into()));
        }
        Ok(())
    }

    fn columns(&self) -> Vec<&'static str> {
        match self.mode {
            CryptoMode::Analytic => vec![
                "x",
                "a",
                "kappa",
                "photon_number",
                "bob_ideal_error",
                "bob_ideal_asymptote",
                "coherent_error",
                "bob_heterodyne_error",
                "eve_error",
                "eve_error_asymptote",
                "s_plus",
                "s_plus_numeric",
                "diff_s_plus",
                "two_sigma_sq",
                "secure",
            ],
            CryptoMode::Simulate => vec![
                "x",
                "a",
                "kappa",
                "nbar",
                "bits",
                "bob_errors",
                "eve_errors",
                "bob_rate",
                "bob_closed",
                "diff_bob",
                "sigma_bob",
                "eve_rate",
                "eve_closed",
                "diff_eve",
                "sigma_eve",
                "bob_beats_eve",
                "secure",
            ],
        }
    }

    fn params(&self) -> Vec<(String, Value)> {
        let mode = match self.mode {
            CryptoMode::Analytic => "analytic",
            CryptoMode::Simulate => "simulate",
        };
        vec![
            ("mode".into(), Value::Text(mode.into())),
            num("x", self.x),
            num("a", self.a),
            num("kappa", self.kappa),
            num("nbar", self.nbar),
            ("bits".into(), self.bits.into()),
        ]
    }

    fn row(&self, seed: u64) -> Result<Vec<Value>, CliError> {
        let security = security_margin(self.x, self.a, self.kappa)?;
        match self.mode {
            CryptoMode::Analytic => {
                let z1 = Complex64::new(self.a, 0.0);
                let z0 = -z1;
                let s_plus = positive_eigenvalue_sum(self.a, self.kappa);
                let s_plus_numeric = half_plane_positive_mass(self.a, self.kappa)?;
                Ok(vec![
                    self.x.into(),
                    self.a.into(),
                    self.kappa.into(),
                    TwinBeamParams::from_schmidt(self.x)?.photon_number().into(),
                    bob_ideal_error(self.x, z0, z1)?.into(),
                    bob_ideal_asymptote(self.x, z0, z1)?.into(),
                    coherent_error(z0, z1).into(),
                    bob_heterodyne_error(self.x, self.a)?.into(),
                    eve_error_gaussian_key(self.a, self.kappa)?.into(),
                    eve_error_gaussian_key_asymptote(self.a, self.kappa).into(),
                    s_plus.into(),
                    s_plus_numeric.into(),
                    (s_plus_numeric - s_plus).into(),
                    security.two_sigma_sq.into(),
                    security.secure.into(),
                ])
            }
            CryptoMode::Simulate => {
                let cfg = ProtocolConfig::new(self.x, self.a, self.kappa)?.with_channel_noise(self.nbar)?;
                let tally = simulate_binary_protocol(&cfg, self.bits, seed)?;
                let n = self.bits as f64;
                let (bob, eve) = (cfg.bob_threshold_error(), cfg.eve_threshold_error());
                Ok(vec![
                    self.x.into(),
                    self.a.into(),
                    self.kappa.into(),
                    self.nbar.into(),
                    self.bits.into(),
                    tally.bob_errors.into(),
                    tally.eve_errors.into(),
                    tally.bob_rate().into(),
                    bob.into(),
                    (tally.bob_rate() - bob).into(),
                    (bob * (1.0 - bob) / n).sqrt().into(),
                    tally.eve_rate().into(),
                    eve.into(),
                    (tally.eve_rate() - eve).into(),
                    (eve * (1.0 - eve) / n).sqrt().into(),
                    (tally.bob_errors < tally.eve_errors).into(),
                    security.secure.into(),
                ])
            }
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FiberArgs {
    /// Damping rate Γ.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Thermal photons of the reservoir.
    #[arg(long = "M", default_value_t = 0.5)]
    pub m: f64,
    /// Twin-beam photon number.
    #[arg(long = "N", default_value_t = 2.0, conflicts_with = "r0")]
    pub n: f64,
    /// Squeezing parameter, instead of `--N`.
    #[arg(long)]
    pub r0: Option<f64>,
    /// End of the rescaled-time scan.
    #[arg(long, default_value_t = 1000.0)]
    pub tau_max: f64,
    /// Grid points of the scan before bisection.
    #[arg(long, default_value_t = 10_001)]
    pub steps: usize,
}

fn time_value(t: SeparabilityTime) -> Value {
    match t {
        SeparabilityTime::At(v) => Value::Num(v),
        SeparabilityTime::Never => Value::Num(f64::INFINITY),
    }
}

impl Experiment for FiberArgs {
    const NAME: &'static str = "fiber";
    const KEYS: &'static [&'static str] = &["gamma", "M", "N", "r0"];

    fn set(&mut self, key: &str, value: f64) {
        match key {
            "gamma" => self.gamma = value,
            "M" => self.m = value,
            "N" => {
                self.n = value;
                self.r0 = None;
            }
            "r0" => self.r0 = Some(value),
            _ => unreachable!("validated key"),
        }
    }

    fn columns(&self) -> Vec<&'static str> {
        vec![
            "gamma",
            "M",
            "N",
            "r0",
            "t_s",
            "t_s_scan",
            "diff_t_s",
            "t_s_large_n",
            "tau_s",
            "tau_s_photon_form",
            "diff_tau_s_forms",
            "tau_max",
            "steps",
        ]
    }

    fn params(&self) -> Vec<(String, Value)> {
        vec![
            num("gamma", self.gamma),
            num("M", self.m),
            match self.r0 {
                Some(r) => num("r0", r),
                None => num("N", self.n),
            },
            num("tau_max", self.tau_max),
            ("steps".into(), self.steps.into()),
        ]
    }

    fn row(&self, _seed: u64) -> Result<Vec<Value>, CliError> {
        let probe = match self.r0 {
            Some(r) => TwinBeamParams::from_squeezing(r)?,
            None => TwinBeamParams::from_photon_number(self.n)?,
        };
        let (r0, n) = (probe.r0(), probe.photon_number());
        let fiber = FiberParams::new(self.gamma, self.m, r0)?;
        let closed = separability_time(self.gamma, self.m, n)?;
        let scan = scan_separability(r0, self.m, self.tau_max, self.steps)?
            .value()
            .map(|tau| fiber.physical_time(tau));
        let tau_s = separability_time_rescaled(self.m, r0)?;
        let tau_photons = separability_time_rescaled_from_photons(self.m, n)?;
        Ok(vec![
            self.gamma.into(),
            self.m.into(),
            n.into(),
            r0.into(),
            time_value(closed),
            scan.into(),
            diff(closed.value(), scan),
            time_value(separability_time_large_n(self.gamma, self.m)?),
            time_value(tau_s),
            time_value(tau_photons),
            diff(tau_s.value(), tau_photons.value()),
            self.tau_max.into(),
            self.steps.into(),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_count(2, 5), 6.0);
        assert_eq!(multiset_count(3, 2), 6.0);
        assert_eq!(multiset_count(1, 9), 1.0);
    }

    #[test]
    fn row_seeds_are_distinct() {
        assert_eq!(row_seed(7, 0), 7);
        assert_ne!(row_seed(7, 1), row_seed(7, 2));
    }
}
