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

//! Builds the density element of a qubit state and collapses it on each
//! outcome of measuring `e3`.

use potentia::collapse::{density_from_amplitudes, measure_collapse};
use potentia::{ComplexScalar, Outcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c1 = ComplexScalar::new(0.6, 0.0);
    let c2 = ComplexScalar::new(0.0, 0.8);
    let (d, rho) = density_from_amplitudes(c1, c2)?;
    println!("c1 = {c1}, c2 = {c2}");
    println!("coefficients a, b, c, d = {:?}", d.as_array());
    println!("rho = {rho}");
    println!("rep(rho) = {:?}", rho.rep());

    let mut total = 0.0;
    for s in [Outcome::Plus, Outcome::Minus] {
        let collapsed = measure_collapse(&rho, s)?;
        println!(
            "outcome {s}: {collapsed}  (probability {}, trace {})",
            collapsed.scalar(),
            collapsed.trace()
        );
        println!("  renormalized: {}", collapsed.renormalized()?);
        total += collapsed.scalar();
    }
    println!("sum of probabilities: {total}");
    Ok(())
}
