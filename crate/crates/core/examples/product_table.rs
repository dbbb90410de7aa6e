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

//! Prints the 8x8 multiplication table of the algebra over its canonical
//! basis, then checks every triple for associativity.

use potentia::cli::table;
use potentia::{Blade, Multivector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = table([1.0, 1.0, 1.0])?;
    print!("{}", report.to_text());

    let mut worst: f64 = 0.0;
    for x in Blade::ALL {
        for y in Blade::ALL {
            for z in Blade::ALL {
                let (x, y, z) = (
                    Multivector::blade(x),
                    Multivector::blade(y),
                    Multivector::blade(z),
                );
                let l = x.mul(&y)?.mul(&z)?;
                let r = x.mul(&y.mul(&z)?)?;
                worst = worst.max(l.max_abs_diff(&r));
            }
        }
    }
    println!("\n512 triples, largest associator entry: {worst}");
    Ok(())
}
