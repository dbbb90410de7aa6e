// Copyright 2026 The Potentia Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Actual/potential evolution.
//!
//! A state `ψ + φ X` with `X² = 1` evolves by squaring:
//! `(ψ, φ) -> (ψ² + φ², 2ψφ)`. The branch values `a = ψ + φ` and
//! `b = ψ - φ` each square independently, which gives the closed form
//! used as an oracle. At an actualization event `X` takes the value `±1`
//! and the state becomes the number `ψ ± φ`, which keeps squaring.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::collapse::{measure_collapse, CollapsedElement, Outcome};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActualPotentialState {
    pub psi_a: f64,
    pub phi_p: f64,
}

impl ActualPotentialState {
    pub fn new(psi_a: f64, phi_p: f64) -> Result<Self> {
        if psi_a.is_finite() && phi_p.is_finite() {
            Ok(ActualPotentialState { psi_a, phi_p })
        } else {
            Err(Error::NonFinite {
                context: "actual/potential state",
            })
        }
    }

    /// Both branch values lie in `[-1, 1]`, so the orbit stays bounded.
    /// States outside this set are allowed but grow doubly exponentially.
    pub fn in_stability_domain(&self) -> bool {
        let (a, b) = self.branches();
        a.abs() <= 1.0 && b.abs() <= 1.0
    }

    /// `(ψ + φ, ψ - φ)`.
    pub fn branches(&self) -> (f64, f64) {
        (self.psi_a + self.phi_p, self.psi_a - self.phi_p)
    }

    fn checked(psi_a: f64, phi_p: f64, step: u64) -> Result<Self> {
        ActualPotentialState::new(psi_a, phi_p).map_err(|_| Error::Divergence { step })
    }
}

fn step_at(s: &ActualPotentialState, index: u64) -> Result<ActualPotentialState> {
    let (psi, phi) = (s.psi_a, s.phi_p);
    ActualPotentialState::checked(psi * psi + phi * phi, 2.0 * psi * phi, index)
}

/// One application of the map.
pub fn step(s: &ActualPotentialState) -> Result<ActualPotentialState> {
    step_at(s, 1)
}

/// `n` applications of the map; a divergence reports the step that failed.
pub fn iterate(s0: &ActualPotentialState, n: u64) -> Result<ActualPotentialState> {
    let mut s = *s0;
    for k in 1..=n {
        s = step_at(&s, k)?;
    }
    Ok(s)
}

/// `((a^(2^n) + b^(2^n)) / 2, (a^(2^n) - b^(2^n)) / 2)`.
pub fn closed_form(s0: &ActualPotentialState, n: u64) -> Result<ActualPotentialState> {
    if n == 0 {
        return Ok(*s0);
    }
    let (a, b) = s0.branches();
    // even powers: the signs of a and b drop out
    let exponent = 2f64.powf(n as f64);
    let (pa, pb) = (a.abs().powf(exponent), b.abs().powf(exponent));
    ActualPotentialState::checked((pa + pb) / 2.0, (pa - pb) / 2.0, n)
}

/// Value of the state once `X` takes the value `sign`.
pub fn actualize(s: &ActualPotentialState, sign: Outcome) -> f64 {
    s.psi_a + sign.sign() * s.phi_p
}

/// Squaring step of a general multivector state.
pub fn mv_step(z: &Multivector) -> Result<Multivector> {
    z.mul(z)
}

/// Actualization of a multivector state: `e3` takes the value `s`.
pub fn mv_actualize(z: &Multivector, s: Outcome) -> Result<CollapsedElement> {
    measure_collapse(z, s)
}

/// Squares `z0` for `actualize_at` steps, actualizes with `s`, then keeps
/// squaring inside the collapsed subalgebra until `horizon`.
pub fn mv_evolve(
    z0: &Multivector,
    actualize_at: u64,
    s: Outcome,
    horizon: u64,
) -> Result<CollapsedElement> {
    let mut z = *z0;
    let m = actualize_at.min(horizon);
    for k in 1..=m {
        z = mv_step(&z).map_err(|_| Error::Divergence { step: k })?;
    }
    let mut collapsed = mv_actualize(&z, s)?;
    for k in m + 1..=horizon {
        collapsed = collapsed
            .square()
            .map_err(|_| Error::Divergence { step: k })?;
    }
    Ok(collapsed)
}

/// When the actualization event happens.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "law")]
pub enum ActualizationLaw {
    /// Number of failed Bernoulli(`p_act`) trials before the first success.
    Geometric { p_act: f64 },
    /// Always at the given step.
    Fixed { step: u64 },
}

impl Default for ActualizationLaw {
    fn default() -> Self {
        ActualizationLaw::Geometric { p_act: 0.1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub initial: ActualPotentialState,
    pub horizon: u64,
    pub law: ActualizationLaw,
    /// Probability that `X` actualizes as `+1`.
    pub q: f64,
    pub trials: u64,
    pub seed: u64,
    /// Stop evolving at the actualization event instead of squaring on.
    pub halt_on_actualize: bool,
    pub record_trajectories: bool,
}

impl EnsembleConfig {
    pub fn new(initial: ActualPotentialState, horizon: u64, trials: u64, seed: u64) -> Self {
        EnsembleConfig {
            initial,
            horizon,
            law: ActualizationLaw::default(),
            q: 0.5,
            trials,
            seed,
            halt_on_actualize: false,
            record_trajectories: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.horizon == 0 {
            return Err(Error::InvalidConfig("horizon must be positive".into()));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.q) {
            return Err(Error::InvalidConfig(format!(
                "q = {} outside [0, 1]",
                self.q
            )));
        }
        if let ActualizationLaw::Geometric { p_act } = self.law {
            if !(p_act > 0.0 && p_act <= 1.0) {
                return Err(Error::InvalidConfig(format!(
                    "p_act = {p_act} outside (0, 1]"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActualizationEvent {
    pub step: u64,
    pub sign: Outcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub trial: u64,
    pub step: u64,
    pub psi_a: f64,
    pub phi_p: f64,
    pub actualized: bool,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub trial: u64,
    pub event: ActualizationEvent,
    pub final_value: Option<f64>,
    pub divergence_step: Option<u64>,
    #[serde(skip)]
    pub trajectory: Vec<TrajectoryRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSummary {
    pub trials: u64,
    pub converged: u64,
    pub diverged: u64,
    pub plus_events: u64,
    pub minus_events: u64,
    pub mean_actualization_step: f64,
    pub mean: Option<f64>,
    pub variance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleReport {
    pub config: EnsembleConfig,
    pub summary: EnsembleSummary,
    pub results: Vec<TrialResult>,
}

impl EnsembleReport {
    pub fn final_values(&self) -> Vec<Option<f64>> {
        self.results.iter().map(|r| r.final_value).collect()
    }

    /// Trajectory rows as CSV with a header line.
    pub fn write_csv<W: Write>(&self, writer: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in self.results.iter().flat_map(|r| r.trajectory.iter()) {
            w.serialize(row).map_err(std::io::Error::other)?;
        }
        if self.results.iter().all(|r| r.trajectory.is_empty()) {
            w.write_record(["trial", "step", "psi_a", "phi_p", "actualized", "value"])?;
        }
        w.flush()
    }
}

/// How trials are scheduled. Both produce identical reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

/// Random stream of one trial, determined by `(seed, trial)` only.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn draw_event(cfg: &EnsembleConfig, rng: &mut ChaCha8Rng) -> ActualizationEvent {
    let step = match cfg.law {
        ActualizationLaw::Fixed { step } => step,
        ActualizationLaw::Geometric { p_act } => {
            Geometric::new(p_act).expect("p_act validated").sample(rng)
        }
    }
    .min(cfg.horizon);
    let sign = if rng.random_bool(cfg.q) {
        Outcome::Plus
    } else {
        Outcome::Minus
    };
    ActualizationEvent { step, sign }
}

/// Runs one trial with its own random stream.
pub fn run_trial(cfg: &EnsembleConfig, trial: u64) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, trial);
    let event = draw_event(cfg, &mut rng);
    let record = cfg.record_trajectories;
    let mut trajectory = Vec::new();
    let mut push = |step, psi_a, phi_p, actualized, value| {
        if record {
            trajectory.push(TrajectoryRow {
                trial,
                step,
                psi_a,
                phi_p,
                actualized,
                value,
            });
        }
    };

    let mut state = cfg.initial;
    let mut divergence_step = None;
    for k in 0..event.step {
        push(k, state.psi_a, state.phi_p, false, state.psi_a);
        match step_at(&state, k + 1) {
            Ok(next) => state = next,
            Err(_) => {
                divergence_step = Some(k + 1);
                break;
            }
        }
    }

    let mut final_value = None;
    if divergence_step.is_none() {
        let mut value = actualize(&state, event.sign);
        push(event.step, value, 0.0, true, value);
        let end = if cfg.halt_on_actualize {
            event.step
        } else {
            cfg.horizon
        };
        for k in event.step + 1..=end {
            value *= value;
            if !value.is_finite() {
                divergence_step = Some(k);
                break;
            }
            push(k, value, 0.0, true, value);
        }
        if divergence_step.is_none() {
            final_value = Some(value);
        }
    }

    TrialResult {
        trial,
        event,
        final_value,
        divergence_step,
        trajectory,
    }
}

fn summarize(cfg: &EnsembleConfig, results: &[TrialResult]) -> EnsembleSummary {
    let values: Vec<f64> = results.iter().filter_map(|r| r.final_value).collect();
    let n = values.len();
    let mean = (n > 0).then(|| values.iter().sum::<f64>() / n as f64);
    let variance = mean.map(|m| values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / n as f64);
    let plus = results
        .iter()
        .filter(|r| r.event.sign == Outcome::Plus)
        .count() as u64;
    let steps: u64 = results.iter().map(|r| r.event.step).sum();
    EnsembleSummary {
        trials: cfg.trials,
        converged: n as u64,
        diverged: results.len() as u64 - n as u64,
        plus_events: plus,
        minus_events: results.len() as u64 - plus,
        mean_actualization_step: steps as f64 / results.len() as f64,
        mean,
        variance,
    }
}

/// Runs every trial in parallel; output is ordered by trial index.
pub fn run_ensemble(cfg: &EnsembleConfig) -> Result<EnsembleReport> {
    run_ensemble_with(cfg, Execution::Parallel)
}

pub fn run_ensemble_with(cfg: &EnsembleConfig, execution: Execution) -> Result<EnsembleReport> {
    cfg.validate()?;
    let results: Vec<TrialResult> = match execution {
        Execution::Sequential => (0..cfg.trials).map(|t| run_trial(cfg, t)).collect(),
        Execution::Parallel => (0..cfg.trials)
            .into_par_iter()
            .map(|t| run_trial(cfg, t))
            .collect(),
    };
    Ok(EnsembleReport {
        config: *cfg,
        summary: summarize(cfg, &results),
        results,
    })
}
