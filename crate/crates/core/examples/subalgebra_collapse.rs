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

//! The two-dimensional subalgebras reached by fixing `e3 = s`, shown next to
//! the tables the solver produces for the signature `(1, 1, -1)`.

use potentia::collapse::{
    b_mul, subalgebra_from_solution, substitute, verify_axis_branch, BBlade, CollapsedElement,
};
use potentia::derivation::solve_structure_constants;
use potentia::{Axis, Outcome, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for sol in solve_structure_constants(&Signature::collapsed()) {
        let derived = subalgebra_from_solution(&sol)?;
        let s = derived.orientation;
        println!("s = {s}  (omega3 = {})", sol.omega3);
        print!("{:>4} |", "*");
        for b in BBlade::ALL {
            print!(" {:>4}", b.name());
        }
        println!();
        for x in BBlade::ALL {
            print!("{:>4} |", x.name());
            for y in BBlade::ALL {
                let (c, z) = derived.product(x, y);
                let sign = if c < 0 { "-" } else { "" };
                print!(" {:>4}", format!("{sign}{}", z.name()));
            }
            println!();
        }
        println!(
            "  matches the substituted product: {}",
            derived.matches_b_mul()
        );
        for axis in [Axis::E1, Axis::E2, Axis::E3] {
            println!(
                "  axis e{} consistent: {}",
                axis.number(),
                verify_axis_branch(axis, s)?
            );
        }
    }

    // fixing e3 = s respects products once both factors sit in the corner
    // psi_s A psi_s
    let s = Outcome::Plus;
    let psi = s.projector(Axis::E3);
    let corner = |text: &str| -> Result<_, Box<dyn std::error::Error>> {
        let x = potentia::expr::eval_str(text)?;
        Ok(psi.mul(&x)?.mul(&psi)?)
    };
    let x = corner("2 + e1 - 3*e12 + e123")?;
    let y = corner("e2 + e31 - 4*e3")?;
    let lhs = substitute(&x.mul(&y)?, s);
    let rhs = b_mul(&substitute(&x, s), &substitute(&y, s))?;
    println!("\nx = {x}\ny = {y}");
    println!("sigma(x y) = {lhs}");
    println!("sigma(x) sigma(y) = {rhs}");

    let other = CollapsedElement::blade(BBlade::E1, Outcome::Minus, Axis::E3);
    match b_mul(&substitute(&x, s), &other) {
        Ok(_) => println!("unexpected: mixed orientations multiplied"),
        Err(e) => println!("mixing orientations: {e}"),
    }
    Ok(())
}
