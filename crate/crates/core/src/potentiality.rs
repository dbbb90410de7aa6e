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

//! Probability assignments to the generators, their mean values, and the
//! unit-ball feasibility bound on the mean vector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multivector::{Axis, Multivector};

/// Tolerance on probability normalization and on the unit-ball bound.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// Bernoulli law over `{+1, -1}` for one generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bernoulli {
    pub p_plus: f64,
    pub p_minus: f64,
}

impl Bernoulli {
    pub fn new(p_plus: f64, p_minus: f64) -> Result<Self> {
        let in_range = |p: f64| (0.0..=1.0).contains(&p);
        if !in_range(p_plus) || !in_range(p_minus) {
            return Err(Error::InvalidAssignment(format!(
                "probabilities ({p_plus}, {p_minus}) must lie in [0, 1]"
            )));
        }
        if (p_plus + p_minus - 1.0).abs() > PROBABILITY_TOL {
            return Err(Error::InvalidAssignment(format!(
                "probabilities ({p_plus}, {p_minus}) do not sum to 1"
            )));
        }
        Ok(Bernoulli { p_plus, p_minus })
    }

    pub fn from_p_plus(p_plus: f64) -> Result<Self> {
        Bernoulli::new(p_plus, 1.0 - p_plus)
    }

    /// `(+1) p(+1) + (-1) p(-1)`.
    pub fn mean(&self) -> f64 {
        self.p_plus - self.p_minus
    }
}

/// Independent Bernoulli assignments to `e1`, `e2`, `e3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialityAssignment {
    pub axes: [Bernoulli; 3],
}

impl PotentialityAssignment {
    pub fn new(axes: [Bernoulli; 3]) -> Self {
        PotentialityAssignment { axes }
    }

    pub fn from_p_plus(p_plus: [f64; 3]) -> Result<Self> {
        Ok(PotentialityAssignment {
            axes: [
                Bernoulli::from_p_plus(p_plus[0])?,
                Bernoulli::from_p_plus(p_plus[1])?,
                Bernoulli::from_p_plus(p_plus[2])?,
            ],
        })
    }

    pub fn uniform() -> Self {
        let half = Bernoulli {
            p_plus: 0.5,
            p_minus: 0.5,
        };
        PotentialityAssignment { axes: [half; 3] }
    }

    pub fn axis(&self, axis: Axis) -> Bernoulli {
        self.axes[usize::from(axis.number() - 1)]
    }
}

/// Mean values `(<e1>, <e2>, <e3>)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanVector {
    pub m: [f64; 3],
}

impl MeanVector {
    pub fn new(m: [f64; 3]) -> Result<Self> {
        if m.iter()
            .all(|v| v.is_finite() && v.abs() <= 1.0 + PROBABILITY_TOL)
        {
            Ok(MeanVector { m })
        } else {
            Err(Error::InvalidAssignment(format!(
                "mean values {m:?} must lie in [-1, 1]"
            )))
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.m.iter().map(|v| v * v).sum()
    }

    /// The axis whose mean is `±1` (within `tol`), if any.
    pub fn definite_axis(&self, tol: f64) -> Option<Axis> {
        Axis::ALL
            .into_iter()
            .find(|a| (self.m[usize::from(a.number() - 1)].abs() - 1.0).abs() <= tol)
    }
}

/// Validates each Bernoulli pair and returns `p(+1) - p(-1)` per axis.
pub fn means(pa: &PotentialityAssignment) -> Result<MeanVector> {
    let checked = pa
        .axes
        .map(|b| Bernoulli::new(b.p_plus, b.p_minus).map(|b| b.mean()));
    let [m1, m2, m3] = checked;
    MeanVector::new([m1?, m2?, m3?])
}

/// The unit-ball bound `<e1>² + <e2>² + <e3>² <= 1`.
pub fn is_feasible(m: &MeanVector) -> bool {
    m.norm_sq() <= 1.0 + PROBABILITY_TOL
}

/// Mean values of the generators in the state `a + b e1 + c e2 + d e3`,
/// computed as traces `tr(rep(ρ) rep(e_k))` in the matrix representation.
pub fn means_from_density(rho: [f64; 4]) -> Result<MeanVector> {
    let [a, b, c, d] = rho;
    if !rho.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite {
            context: "density coefficients",
        });
    }
    if (a - 0.5).abs() > PROBABILITY_TOL {
        return Err(Error::Normalization(format!(
            "scalar part {a} differs from 1/2"
        )));
    }
    let state = Multivector::new([a, b, c, d, 0.0, 0.0, 0.0, 0.0])?.rep();
    let m = Axis::ALL.map(|axis| state.matmul(&Multivector::generator(axis).rep()).trace().re);
    MeanVector::new(m)
}
