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

//! Checks that the Pauli-matrix representation respects the product on
//! seeded random multivectors.

use potentia::cli::repcheck;
use potentia::multivector::basis_matrices;
use potentia::Blade;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (b, m) in Blade::ALL.iter().zip(basis_matrices()) {
        let cell = |r: usize, c: usize| m.get(r, c).to_string();
        println!(
            "{:>4} -> [[{:>3}, {:>3}], [{:>3}, {:>3}]]",
            b.name(),
            cell(0, 0),
            cell(0, 1),
            cell(1, 0),
            cell(1, 1)
        );
    }
    let report = repcheck(10_000, 1)?;
    println!(
        "\n{} pairs, max error {:e}, failures {}, passed {}",
        report.trials, report.max_error, report.failures, report.passed
    );
    Ok(())
}
