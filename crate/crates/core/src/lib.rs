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

//! Algebra of three anticommuting generators: product rules derived from
//! two axioms, the subalgebra left after one generator is given a definite
//! value, density-matrix collapse, and actual/potential dynamics.
//!
//! ```
//! use potentia::expr::eval_str;
//! use potentia::multivector::psi1;
//!
//! let p = eval_str("(1 + e3)/2").unwrap();
//! assert_eq!(p, psi1());
//! assert_eq!(p.mul(&p).unwrap(), p);
//! ```

pub mod cli;
pub mod collapse;
pub mod derivation;
pub mod dynamics;
pub mod error;
pub mod expr;
pub mod multivector;
pub mod potentiality;

pub use collapse::{CollapsedElement, Outcome};
pub use derivation::{Signature, StructureSolution};
pub use error::{Error, Result};
pub use multivector::{Axis, Blade, ComplexScalar, Matrix2, Multivector};
