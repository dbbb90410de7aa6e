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

//! Derivation of the generator product rules from the two axioms
//! (every generator has a scalar square, distinct generators anticommute).
//!
//! Writing `e1 e2 = ω3 e3`, `e2 e3 = λ1 e1`, `e3 e1 = γ2 e2`, the
//! alternation identities force the homogeneous system
//!
//! ```text
//! -λ1 k1 + γ2 k2          = 0
//!          γ2 k2 - ω3 k3  = 0
//!  λ1 k1          - ω3 k3 = 0
//! ```
//!
//! whose determinant vanishes identically, with solutions
//! `k1 = -γ2 ω3`, `k2 = -λ1 ω3`, `k3 = -λ1 γ2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multivector::{Blade, ComplexScalar, Multivector};

/// Tolerance for the solution relations and the associativity checks.
pub const SOLUTION_TOL: f64 = 1e-12;

/// The scalar squares `(k1, k2, k3)` of the generators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Signature {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

impl Signature {
    pub fn new(k1: f64, k2: f64, k3: f64) -> Result<Self> {
        let ok = |k: f64| k.is_finite() && k != 0.0;
        if ok(k1) && ok(k2) && ok(k3) {
            Ok(Signature { k1, k2, k3 })
        } else {
            Err(Error::InvalidSignature { k1, k2, k3 })
        }
    }

    /// `(1, 1, 1)`: the Pauli algebra.
    pub fn euclidean() -> Self {
        Signature {
            k1: 1.0,
            k2: 1.0,
            k3: 1.0,
        }
    }

    /// `(1, 1, -1)`: the third generator replaced by a unit squaring to -1.
    pub fn collapsed() -> Self {
        Signature {
            k1: 1.0,
            k2: 1.0,
            k3: -1.0,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.k1, self.k2, self.k3]
    }

    fn scale(&self) -> f64 {
        self.as_array().iter().fold(1.0_f64, |m, k| m.max(k.abs()))
    }
}

/// Coefficient matrix of the homogeneous system, unknowns ordered
/// `(λ1, γ2, ω3)`.
pub fn build_system(sig: &Signature) -> [[f64; 3]; 3] {
    let Signature { k1, k2, k3 } = *sig;
    [[-k1, k2, 0.0], [0.0, k2, -k3], [k1, 0.0, -k3]]
}

pub fn determinant(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// One branch of structure constants for a signature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StructureSolution {
    pub signature: Signature,
    pub omega3: ComplexScalar,
    pub lambda1: ComplexScalar,
    pub gamma2: ComplexScalar,
}

impl StructureSolution {
    /// Largest violation of `k1 = -γ2 ω3`, `k2 = -λ1 ω3`, `k3 = -λ1 γ2`,
    /// relative to `max(1, |k|)`.
    pub fn residual(&self) -> f64 {
        let k = self.signature.as_array();
        let implied = [
            -(self.gamma2 * self.omega3),
            -(self.lambda1 * self.omega3),
            -(self.lambda1 * self.gamma2),
        ];
        let worst = k
            .iter()
            .zip(implied)
            .map(|(&k, z)| (z - ComplexScalar::real(k)).abs())
            .fold(0.0, f64::max);
        worst / self.signature.scale()
    }

    /// Largest row residual of the homogeneous system at `(λ1, γ2, ω3)`.
    pub fn system_residual(&self) -> f64 {
        let m = build_system(&self.signature);
        let x = [self.lambda1, self.gamma2, self.omega3];
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(ComplexScalar::ZERO, |acc, (&a, z)| acc + z.scale(a))
                    .abs()
            })
            .fold(0.0, f64::max)
    }

    pub fn negated(&self) -> StructureSolution {
        StructureSolution {
            signature: self.signature,
            omega3: -self.omega3,
            lambda1: -self.lambda1,
            gamma2: -self.gamma2,
        }
    }
}

/// Both solution branches, principal square root of `-k1 k2 / k3` first.
pub fn solve_structure_constants(sig: &Signature) -> [StructureSolution; 2] {
    let Signature { k1, k2, k3 } = *sig;
    let omega3 = ComplexScalar::real(-k1 * k2 / k3).sqrt();
    let principal = StructureSolution {
        signature: *sig,
        omega3,
        gamma2: ComplexScalar::real(-k1) / omega3,
        lambda1: ComplexScalar::real(-k2) / omega3,
    };
    [principal, principal.negated()]
}

/// Names of the four generators of a derived algebra.
pub const GENERATOR_NAMES: [&str; 4] = ["1", "e1", "e2", "e3"];

/// Element of a derived algebra: complex coefficients over `1, e1, e2, e3`.
pub type GeneratedElement = [ComplexScalar; 4];

pub fn generator_element(g: usize) -> GeneratedElement {
    let mut out = [ComplexScalar::ZERO; 4];
    out[g] = ComplexScalar::ONE;
    out
}

/// Generator products of a derived algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneratedTable {
    pub signature: Signature,
    pub omega3: ComplexScalar,
    pub lambda1: ComplexScalar,
    pub gamma2: ComplexScalar,
}

/// Builds the table of a solution after checking its relations hold.
pub fn generate_table(sol: &StructureSolution) -> Result<GeneratedTable> {
    let residual = sol.residual();
    if residual.is_nan() || residual > SOLUTION_TOL {
        return Err(Error::InconsistentSolution { residual });
    }
    Ok(GeneratedTable::from_constants(
        sol.signature,
        sol.omega3,
        sol.lambda1,
        sol.gamma2,
    ))
}

impl GeneratedTable {
    /// Builds a table without checking consistency.
    pub fn from_constants(
        signature: Signature,
        omega3: ComplexScalar,
        lambda1: ComplexScalar,
        gamma2: ComplexScalar,
    ) -> Self {
        GeneratedTable {
            signature,
            omega3,
            lambda1,
            gamma2,
        }
    }

    /// `g_a * g_b = coefficient * g_c` for generator indices in `0..4`.
    pub fn product(&self, a: usize, b: usize) -> (ComplexScalar, usize) {
        let k = self.signature.as_array();
        match (a, b) {
            (0, g) | (g, 0) => (ComplexScalar::ONE, g),
            (a, b) if a == b => (ComplexScalar::real(k[a - 1]), 0),
            (1, 2) => (self.omega3, 3),
            (2, 1) => (-self.omega3, 3),
            (2, 3) => (self.lambda1, 1),
            (3, 2) => (-self.lambda1, 1),
            (3, 1) => (self.gamma2, 2),
            (1, 3) => (-self.gamma2, 2),
            _ => panic!("generator index out of range: ({a}, {b})"),
        }
    }

    pub fn mul(&self, x: &GeneratedElement, y: &GeneratedElement) -> GeneratedElement {
        let mut out = [ComplexScalar::ZERO; 4];
        for (a, &xa) in x.iter().enumerate() {
            for (b, &yb) in y.iter().enumerate() {
                let (c, g) = self.product(a, b);
                out[g] = out[g] + xa * yb * c;
            }
        }
        out
    }

    /// Real basis `1, e1, e2, e3, i, i e1, i e2, i e3` of the derived
    /// algebra, `i` being the imaginary unit of the coefficient field.
    pub fn real_basis(&self) -> [GeneratedElement; 8] {
        let mut out = [[ComplexScalar::ZERO; 4]; 8];
        for g in 0..4 {
            out[g][g] = ComplexScalar::ONE;
            out[g + 4][g] = ComplexScalar::I;
        }
        out
    }

    /// The 8x8 table of products of real basis elements.
    pub fn real_product_table(&self) -> Vec<Vec<GeneratedElement>> {
        let basis = self.real_basis();
        basis
            .iter()
            .map(|x| basis.iter().map(|y| self.mul(x, y)).collect())
            .collect()
    }

    fn tolerance(&self) -> f64 {
        let scale = [self.omega3, self.lambda1, self.gamma2]
            .iter()
            .map(|z| z.norm_sqr())
            .fold(self.signature.scale(), f64::max);
        SOLUTION_TOL * scale
    }

    /// Maps an element into the Pauli algebra, `i` going to `e1 e2 e3`.
    pub fn embed(x: &GeneratedElement) -> Result<Multivector> {
        let generator_blades = [Blade::One, Blade::E1, Blade::E2, Blade::E3];
        let mut out = Multivector::ZERO;
        for (z, blade) in x.iter().zip(generator_blades) {
            let g = Multivector::blade(blade);
            out = out.add(&Multivector::from_complex(*z)?.mul(&g)?)?;
        }
        Ok(out)
    }

    /// Renders an element as `re*g + im*i*g` terms.
    pub fn format_element(x: &GeneratedElement) -> String {
        let mut terms = Vec::new();
        for (g, z) in x.iter().enumerate() {
            for (value, unit) in [(z.re, ""), (z.im, "i")] {
                if value == 0.0 {
                    continue;
                }
                let symbol = match (unit, g) {
                    ("", 0) => String::new(),
                    ("", g) => GENERATOR_NAMES[g].to_string(),
                    (u, 0) => u.to_string(),
                    (u, g) => format!("{u}*{}", GENERATOR_NAMES[g]),
                };
                terms.push((value, symbol));
            }
        }
        crate::expr::join_terms(&terms)
    }
}

/// Outcome of [`verify_alternation`], with the worst residuals found.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlternationReport {
    pub alternation_residual: f64,
    pub associativity_residual: f64,
    pub tolerance: f64,
}

impl AlternationReport {
    pub fn holds(&self) -> bool {
        self.alternation_residual <= self.tolerance && self.associativity_residual <= self.tolerance
    }
}

fn element_diff(x: &GeneratedElement, y: &GeneratedElement) -> f64 {
    x.iter()
        .zip(y.iter())
        .map(|(a, b)| (*a - *b).abs())
        .fold(0.0, f64::max)
}

/// Checks the six left/right alternation identities and associativity of
/// every triple of real basis elements.
pub fn alternation_report(table: &GeneratedTable) -> AlternationReport {
    let g = generator_element;
    let mut alternation: f64 = 0.0;
    // (e_a e_a) e_b = e_a (e_a e_b) and e_a (e_b e_b) = (e_a e_b) e_b for cyclic (a, b)
    for (a, b) in [(1, 2), (2, 3), (3, 1)] {
        let left = table.mul(&table.mul(&g(a), &g(a)), &g(b));
        let right = table.mul(&g(a), &table.mul(&g(a), &g(b)));
        alternation = alternation.max(element_diff(&left, &right));
        let left = table.mul(&g(a), &table.mul(&g(b), &g(b)));
        let right = table.mul(&table.mul(&g(a), &g(b)), &g(b));
        alternation = alternation.max(element_diff(&left, &right));
    }

    let basis = table.real_basis();
    let mut associativity: f64 = 0.0;
    for x in &basis {
        for y in &basis {
            let xy = table.mul(x, y);
            for z in &basis {
                let left = table.mul(&xy, z);
                let right = table.mul(x, &table.mul(y, z));
                associativity = associativity.max(element_diff(&left, &right));
            }
        }
    }

    AlternationReport {
        alternation_residual: alternation,
        associativity_residual: associativity,
        tolerance: table.tolerance(),
    }
}

/// True iff the table satisfies alternation and associativity.
pub fn verify_alternation(table: &GeneratedTable) -> bool {
    alternation_report(table).holds()
}
