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

use potentia::collapse::density_from_amplitudes;
use potentia::potentiality::{is_feasible, means, means_from_density, PotentialityAssignment};
use potentia::ComplexScalar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [
        [0.5, 0.5, 0.5],
        [1.0, 0.5, 0.5],
        [0.9, 0.8, 0.5],
        [1.0, 1.0, 0.5],
    ] {
        let m = means(&PotentialityAssignment::from_p_plus(p)?)?;
        println!(
            "p+ = {p:?} -> m = {:?}, |m|^2 = {:.3}, feasible = {}",
            m.m,
            m.norm_sq(),
            is_feasible(&m)
        );
    }

    // a pure state always sits on the sphere
    let (c1, c2) = (ComplexScalar::new(0.6, 0.0), ComplexScalar::new(0.0, 0.8));
    let (d, _) = density_from_amplitudes(c1, c2)?;
    let m = means_from_density(d.as_array())?;
    println!("\npure state: m = {:?}, |m|^2 = {}", m.m, m.norm_sq());
    if let Some(axis) = m.definite_axis(1e-12) {
        println!("definite along e{}", axis.number());
    }
    Ok(())
}
