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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use potentia::cli::{self, FeasibilityInput};
use potentia::dynamics::{ActualPotentialState, ActualizationLaw, EnsembleConfig};
use potentia::{ComplexScalar, Outcome};

#[derive(Parser)]
#[command(
    name = "potentia",
    version,
    about = "Anticommuting-generator algebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the structure constants of a signature
    Derive {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        /// Signature K1,K2,K3
        k: [f64; 3],
        /// Solution branch whose table is printed (0 = principal)
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// Print the full product table
    Table {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, default_value = "1,1,1")]
        signature: [f64; 3],
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate an expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Collapse a pure state on measuring e3
    Collapse {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        c1: ComplexScalar,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        c2: ComplexScalar,
        #[arg(long, value_parser = parse_outcome, allow_hyphen_values = true)]
        outcome: Outcome,
        /// Scale the result to unit matrix trace
        #[arg(long)]
        renormalize: bool,
    },
    /// Check the unit-ball bound on generator mean values
    Feasibility {
        /// Probability of +1 for e1 (with --p2, --p3)
        #[arg(long, requires_all = ["p2", "p3"], conflicts_with = "means")]
        p1: Option<f64>,
        #[arg(long)]
        p2: Option<f64>,
        #[arg(long)]
        p3: Option<f64>,
        /// Mean values M1,M2,M3 instead of probabilities
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, required_unless_present = "p1")]
        means: Option<[f64; 3]>,
    },
    /// Monte Carlo ensemble of actual/potential evolutions
    Simulate {
        /// Initial actual component
        #[arg(long, allow_hyphen_values = true)]
        psi0: f64,
        /// Initial potential component
        #[arg(long, allow_hyphen_values = true)]
        phi0: f64,
        /// Horizon (number of squaring steps)
        #[arg(long)]
        steps: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Per-step actualization probability of the geometric law
        #[arg(long, default_value_t = 0.1)]
        p_act: f64,
        /// Probability that actualization picks +1
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// Actualize at exactly this step instead
        #[arg(long)]
        fixed_step: Option<u64>,
        /// Stop each trial at its actualization step
        #[arg(long)]
        halt_on_actualize: bool,
        /// Write per-step trajectories here
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the matrix representation on random products
    Repcheck {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    Ok([num(a)?, num(b)?, num(c)?])
}

fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once(',') {
        Some((re, im)) => Ok(ComplexScalar::new(num(re)?, num(im)?)),
        None => Ok(ComplexScalar::real(num(s)?)),
    }
}

fn parse_outcome(s: &str) -> Result<Outcome, String> {
    match s {
        "+1" | "1" => Ok(Outcome::Plus),
        "-1" => Ok(Outcome::Minus),
        _ => Err(format!("outcome must be +1 or -1, got `{s}`")),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn fail(err: &potentia::Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(cli::exit_code(err) as u8)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match args.command {
        Command::Derive { k, branch } => match cli::derive(k, branch) {
            Ok(r) => print_json(&r),
            Err(e) => return fail(&e),
        },
        Command::Table { signature, format } => match cli::table(signature) {
            Ok(r) => match format {
                Format::Text => print!("{}", r.to_text()),
                Format::Json => print_json(&r),
            },
            Err(e) => return fail(&e),
        },
        Command::Eval { expr } => match cli::eval(&expr) {
            Ok(r) => print_json(&r),
            Err(e) => return fail(&e),
        },
        Command::Collapse {
            c1,
            c2,
            outcome,
            renormalize,
        } => match cli::collapse(c1, c2, outcome, renormalize) {
            Ok(r) => print_json(&r),
            Err(e) => return fail(&e),
        },
        Command::Feasibility { p1, p2, p3, means } => {
            let input = match (p1, p2, p3, means) {
                (Some(a), Some(b), Some(c), _) => FeasibilityInput::PPlus([a, b, c]),
                (_, _, _, Some(m)) => FeasibilityInput::Means(m),
                _ => unreachable!("clap enforces one input form"),
            };
            match cli::feasibility(input) {
                Ok(r) => {
                    print_json(&r);
                    if !r.feasible {
                        return ExitCode::from(1);
                    }
                }
                Err(e) => return fail(&e),
            }
        }
        Command::Simulate {
            psi0,
            phi0,
            steps,
            trials,
            seed,
            p_act,
            q,
            fixed_step,
            halt_on_actualize,
            csv,
        } => {
            let initial = match ActualPotentialState::new(psi0, phi0) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            if !initial.in_stability_domain() {
                eprintln!("warning: |psi0 ± phi0| > 1, trajectories will diverge");
            }
            let mut cfg = EnsembleConfig::new(initial, steps, trials, seed);
            cfg.q = q;
            cfg.halt_on_actualize = halt_on_actualize;
            cfg.law = match fixed_step {
                Some(step) => ActualizationLaw::Fixed { step },
                None => ActualizationLaw::Geometric { p_act },
            };
            match cli::simulate(cfg, csv.as_deref()) {
                Ok(r) => print_json(&r),
                Err(e) => {
                    eprintln!("error: {e}");
                    let code = match e.downcast_ref::<potentia::Error>() {
                        Some(err) => cli::exit_code(err),
                        None => 1,
                    };
                    return ExitCode::from(code as u8);
                }
            }
        }
        Command::Repcheck { trials, seed } => match cli::repcheck(trials, seed) {
            Ok(r) => {
                print_json(&r);
                if !r.passed {
                    return ExitCode::from(1);
                }
            }
            Err(e) => return fail(&e),
        },
    }
    ExitCode::SUCCESS
}
