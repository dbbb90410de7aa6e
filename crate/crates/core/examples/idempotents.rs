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

use potentia::collapse::substitute_axis;
use potentia::multivector::idempotents_for;
use potentia::{Axis, Outcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for axis in [Axis::E1, Axis::E2, Axis::E3] {
        let (plus, minus) = idempotents_for(axis);
        let e = axis.blade();
        let e = potentia::Multivector::blade(e);
        println!("axis e{}", axis.number());
        println!("  psi+ = {plus}    psi+^2 = {}", plus.mul(&plus)?);
        println!("  psi- = {minus}    psi-^2 = {}", minus.mul(&minus)?);
        println!("  psi+ psi- = {}", plus.mul(&minus)?);
        println!(
            "  e psi+ = {}    e psi- = {}",
            e.mul(&plus)?,
            e.mul(&minus)?
        );
        for s in [Outcome::Plus, Outcome::Minus] {
            println!(
                "  s = {s}: psi+ -> {}, psi- -> {}",
                substitute_axis(&plus, axis, s),
                substitute_axis(&minus, axis, s)
            );
        }
    }
    Ok(())
}
