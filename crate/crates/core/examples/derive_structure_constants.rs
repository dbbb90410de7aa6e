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

//! Solve the structure-constant system for a signature given on the command
//! line (default `1,1,1`) and print both solution branches.
//!
//! ```text
//! cargo run --example derive_structure_constants -- 1,1,-1
//! ```

use potentia::derivation::{
    build_system, determinant, generate_table, generator_element, solve_structure_constants,
    verify_alternation, GeneratedTable, GENERATOR_NAMES,
};
use potentia::Signature;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,1,1".into());
    let k: Vec<f64> = arg
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let [k1, k2, k3] = k[..] else {
        return Err("expected three comma-separated numbers".into());
    };
    let sig = Signature::new(k1, k2, k3)?;

    let m = build_system(&sig);
    println!("system (unknowns lambda1, gamma2, omega3):");
    for row in m {
        println!("  {row:?}");
    }
    println!("determinant = {}", determinant(&m));

    for (n, sol) in solve_structure_constants(&sig).iter().enumerate() {
        println!(
            "\nbranch {n}: omega3 = {}, lambda1 = {}, gamma2 = {}  (residual {:e})",
            sol.omega3,
            sol.lambda1,
            sol.gamma2,
            sol.residual()
        );
        let table = generate_table(sol)?;
        for (a, na) in GENERATOR_NAMES.iter().enumerate().skip(1) {
            for (b, nb) in GENERATOR_NAMES.iter().enumerate().skip(1) {
                if a != b {
                    let x = table.mul(&generator_element(a), &generator_element(b));
                    println!("  {na} {nb} = {}", GeneratedTable::format_element(&x));
                }
            }
        }
        println!(
            "  alternative and associative: {}",
            verify_alternation(&table)
        );
    }
    Ok(())
}
