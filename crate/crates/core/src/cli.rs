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

//! Request/report types behind the `potentia` command-line tool. Every
//! report serializes to JSON with a fixed field order.

use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::collapse::{density_from_amplitudes, measure_collapse, projected, Outcome};
use crate::derivation::{
    alternation_report, build_system, determinant, generate_table, solve_structure_constants,
    AlternationReport, GeneratedTable, Signature, GENERATOR_NAMES,
};
use crate::dynamics::{run_ensemble, EnsembleConfig, EnsembleSummary};
use crate::error::{Error, Result};
use crate::expr::{eval_str, print_canonical};
use crate::multivector::{Axis, Blade, ComplexScalar, Multivector};
use crate::potentiality::{is_feasible, means, MeanVector, PotentialityAssignment};

/// Process exit code for an error: 1 for domain errors, 2 for bad input.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_domain_error() {
        1
    } else {
        2
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolutionEntry {
    pub omega3: ComplexScalar,
    pub lambda1: ComplexScalar,
    pub gamma2: ComplexScalar,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorTable {
    pub basis: Vec<String>,
    /// `entries[r][c]` is the product `basis[r] * basis[c]`.
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeriveReport {
    pub signature: Signature,
    pub system: [[f64; 3]; 3],
    pub determinant: f64,
    pub solutions: Vec<SolutionEntry>,
    pub branch: usize,
    pub table: GeneratorTable,
    pub verification: AlternationReport,
    pub verified: bool,
}

fn generator_table(table: &GeneratedTable) -> GeneratorTable {
    let basis: Vec<String> = GENERATOR_NAMES.iter().map(|s| s.to_string()).collect();
    let entries = (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let (coeff, g) = table.product(a, b);
                    let mut el = [ComplexScalar::ZERO; 4];
                    el[g] = coeff;
                    GeneratedTable::format_element(&el)
                })
                .collect()
        })
        .collect();
    GeneratorTable { basis, entries }
}

/// Builds the homogeneous system for `k`, solves it and verifies the table
/// of the chosen branch.
pub fn derive(k: [f64; 3], branch: usize) -> Result<DeriveReport> {
    let signature = Signature::new(k[0], k[1], k[2])?;
    if branch > 1 {
        return Err(Error::InvalidConfig(format!(
            "branch {branch} is not 0 or 1"
        )));
    }
    let system = build_system(&signature);
    let solutions = solve_structure_constants(&signature);
    let table = generate_table(&solutions[branch])?;
    let verification = alternation_report(&table);
    Ok(DeriveReport {
        signature,
        system,
        determinant: determinant(&system),
        solutions: solutions
            .iter()
            .map(|s| SolutionEntry {
                omega3: s.omega3,
                lambda1: s.lambda1,
                gamma2: s.gamma2,
                residual: s.residual(),
            })
            .collect(),
        branch,
        table: generator_table(&table),
        verified: verification.holds(),
        verification,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub signature: Signature,
    pub basis: Vec<String>,
    pub entries: Vec<Vec<String>>,
    /// Coefficients of each entry over `basis`.
    pub coefficients: Vec<Vec<Vec<f64>>>,
}

impl TableReport {
    /// Fixed-width text grid.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .flatten()
            .chain(self.basis.iter())
            .map(|s| s.len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>width$} |", "*");
        for b in &self.basis {
            let _ = write!(out, " {b:>width$}");
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (self.basis.len() + 1) + 1));
        out.push('\n');
        for (b, row) in self.basis.iter().zip(&self.entries) {
            let _ = write!(out, "{b:>width$} |");
            for e in row {
                let _ = write!(out, " {e:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// Full 8x8 product table. For `(1, 1, 1)` this is the multivector table
/// over the canonical basis, checked against the derived table; for other
/// signatures it is the table of the principal derived algebra over
/// `1, e1, e2, e3, i, i*e1, i*e2, i*e3`.
pub fn table(k: [f64; 3]) -> Result<TableReport> {
    let signature = Signature::new(k[0], k[1], k[2])?;
    let derived = generate_table(&solve_structure_constants(&signature)[0])?;

    if signature == Signature::euclidean() {
        // the derived algebra must embed homomorphically before its table is
        // replaced by the canonical one
        let derived_basis = derived.real_basis();
        for dx in &derived_basis {
            for dy in &derived_basis {
                let via_table = GeneratedTable::embed(&derived.mul(dx, dy))?;
                let direct = GeneratedTable::embed(dx)?.mul(&GeneratedTable::embed(dy)?)?;
                if via_table != direct {
                    return Err(Error::InconsistentSolution {
                        residual: via_table.max_abs_diff(&direct),
                    });
                }
            }
        }
        let basis: Vec<String> = Blade::ALL.iter().map(|b| b.name().to_string()).collect();
        let mut entries = Vec::new();
        let mut coefficients = Vec::new();
        for x in Blade::ALL {
            let mut row = Vec::new();
            let mut row_coeffs = Vec::new();
            for y in Blade::ALL {
                let p = Multivector::blade(x).mul(&Multivector::blade(y))?;
                row.push(print_canonical(&p));
                row_coeffs.push(p.coeffs().to_vec());
            }
            entries.push(row);
            coefficients.push(row_coeffs);
        }
        return Ok(TableReport {
            signature,
            basis,
            entries,
            coefficients,
        });
    }

    let basis: Vec<String> = derived
        .real_basis()
        .iter()
        .map(GeneratedTable::format_element)
        .collect();
    let products = derived.real_product_table();
    let entries = products
        .iter()
        .map(|row| row.iter().map(GeneratedTable::format_element).collect())
        .collect();
    let coefficients = products
        .iter()
        .map(|row| {
            row.iter()
                .map(|el| {
                    el.iter()
                        .map(|z| z.re)
                        .chain(el.iter().map(|z| z.im))
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(TableReport {
        signature,
        basis,
        entries,
        coefficients,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub canonical: String,
    pub coefficients: [f64; 8],
}

pub fn eval(text: &str) -> Result<EvalReport> {
    let x = eval_str(text)?;
    Ok(EvalReport {
        canonical: print_canonical(&x),
        coefficients: *x.coeffs(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CollapseReport {
    pub outcome: i8,
    /// Scalar part of the collapsed element.
    pub scalar: f64,
    /// Coefficients over `1, e1, e2, i` of the collapsed subalgebra.
    pub coefficients: [f64; 4],
    /// Matrix trace of `scalar * I`.
    pub trace: f64,
    /// Outcome probability, read from the matrix `rep(ψ_s ρ ψ_s)`.
    pub probability: f64,
    pub renormalized: bool,
}

/// Density element of `(c1, c2)` collapsed on measuring `e3`.
pub fn collapse(
    c1: ComplexScalar,
    c2: ComplexScalar,
    outcome: Outcome,
    renormalize: bool,
) -> Result<CollapseReport> {
    let (_, rho) = density_from_amplitudes(c1, c2)?;
    let mut collapsed = measure_collapse(&rho, outcome)?;
    let probability = projected(&rho, Axis::E3, outcome)?.rep().trace().re;
    if renormalize {
        collapsed = collapsed.renormalized()?;
    }
    Ok(CollapseReport {
        outcome: outcome.sign() as i8,
        scalar: collapsed.scalar(),
        coefficients: *collapsed.coeffs(),
        trace: collapsed.trace(),
        probability,
        renormalized: renormalize,
    })
}

#[derive(Debug, Clone, Copy)]
pub enum FeasibilityInput {
    /// Probabilities of `+1` for each generator.
    PPlus([f64; 3]),
    Means([f64; 3]),
}

#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityReport {
    pub means: [f64; 3],
    pub norm_sq: f64,
    pub feasible: bool,
}

pub fn feasibility(input: FeasibilityInput) -> Result<FeasibilityReport> {
    let m = match input {
        FeasibilityInput::PPlus(p) => means(&PotentialityAssignment::from_p_plus(p)?)?,
        FeasibilityInput::Means(m) => MeanVector::new(m)?,
    };
    Ok(FeasibilityReport {
        means: m.m,
        norm_sq: m.norm_sq(),
        feasible: is_feasible(&m),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulateReport {
    pub config: EnsembleConfig,
    pub summary: EnsembleSummary,
    pub final_values: Vec<Option<f64>>,
}

/// Runs an ensemble; with `csv` set, trajectories are written there.
pub fn simulate(
    mut cfg: EnsembleConfig,
    csv: Option<&std::path::Path>,
) -> std::result::Result<SimulateReport, Box<dyn std::error::Error>> {
    cfg.record_trajectories = csv.is_some();
    let report = run_ensemble(&cfg)?;
    if let Some(path) = csv {
        let file = std::fs::File::create(path)?;
        report.write_csv(std::io::BufWriter::new(file))?;
    }
    Ok(SimulateReport {
        config: cfg,
        summary: report.summary.clone(),
        final_values: report.final_values(),
    })
}

/// Multivector with coefficients uniform in `[-1, 1]`.
pub fn random_multivector<R: Rng>(rng: &mut R) -> Multivector {
    let coeffs = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
    Multivector::new(coeffs).expect("finite samples")
}

#[derive(Debug, Clone, Serialize)]
pub struct RepcheckReport {
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub max_error: f64,
    pub failures: u64,
    pub passed: bool,
}

pub const REPCHECK_TOL: f64 = 1e-12;

/// Checks `rep(x y) = rep(x) rep(y)` on seeded random pairs.
pub fn repcheck(trials: u64, seed: u64) -> Result<RepcheckReport> {
    let mut rng = crate::dynamics::trial_rng(seed, 0);
    let mut max_error: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..trials {
        let x = random_multivector(&mut rng);
        let y = random_multivector(&mut rng);
        let err = x.mul(&y)?.rep().max_abs_diff(&x.rep().matmul(&y.rep()));
        if err.is_nan() || err > REPCHECK_TOL {
            failures += 1;
        }
        max_error = max_error.max(err);
    }
    Ok(RepcheckReport {
        trials,
        seed,
        tolerance: REPCHECK_TOL,
        max_error,
        failures,
        passed: failures == 0,
    })
}
