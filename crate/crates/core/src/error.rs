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

use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("arithmetic overflow: product has non-finite coefficients")]
    ArithmeticOverflow,

    #[error("invalid signature ({k1}, {k2}, {k3}): every square must be finite and nonzero")]
    InvalidSignature { k1: f64, k2: f64, k3: f64 },

    #[error("structure constants violate k = -products relations (residual {residual:e})")]
    InconsistentSolution { residual: f64 },

    #[error("invalid potentiality assignment: {0}")]
    InvalidAssignment(String),

    #[error("state is not normalized: {0}")]
    Normalization(String),

    #[error("incompatible subalgebra elements: {0}")]
    IncompatibleSubalgebra(String),

    #[error("no subalgebra table for this solution: {0}")]
    DomainRestriction(String),

    #[error("evolution diverged at step {step}")]
    Divergence { step: u64 },

    #[error("invalid ensemble configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("division by zero literal at offset {offset}")]
    DivisionByZero { offset: usize },
}

impl Error {
    /// True for errors that reject a well-formed request on mathematical
    /// grounds, as opposed to malformed input.
    pub fn is_domain_error(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::InvalidConfig(_))
    }
}
