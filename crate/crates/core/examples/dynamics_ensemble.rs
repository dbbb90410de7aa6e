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

//! Seeded ensemble of squaring trajectories with random actualization.
//! Pass a path to also write the per-step trajectories as CSV.
//!
//! ```text
//! cargo run --example dynamics_ensemble -- /tmp/trajectories.csv
//! ```

use potentia::dynamics::{run_ensemble, ActualPotentialState, ActualizationLaw, EnsembleConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let csv = std::env::args().nth(1);
    let mut cfg = EnsembleConfig::new(ActualPotentialState::new(0.6, 0.4)?, 8, 2000, 42);
    cfg.law = ActualizationLaw::Geometric { p_act: 0.2 };
    cfg.q = 0.5;
    cfg.record_trajectories = csv.is_some();

    let report = run_ensemble(&cfg)?;
    let s = &report.summary;
    println!(
        "initial {:?}, branches {:?}",
        cfg.initial,
        cfg.initial.branches()
    );
    println!(
        "trials {}  converged {}  diverged {}",
        s.trials, s.converged, s.diverged
    );
    println!("events +1: {}  -1: {}", s.plus_events, s.minus_events);
    println!("mean actualization step {:.3}", s.mean_actualization_step);
    println!("final value mean {:?}  variance {:?}", s.mean, s.variance);
    for r in report.results.iter().take(5) {
        println!(
            "  trial {}: actualized at {} with {} -> {:?}",
            r.trial, r.event.step, r.event.sign, r.final_value
        );
    }
    if let Some(path) = csv {
        report.write_csv(std::fs::File::create(&path)?)?;
        println!("trajectories written to {path}");
    }
    Ok(())
}
