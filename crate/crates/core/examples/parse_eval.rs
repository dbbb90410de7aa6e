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

//! Evaluates algebra expressions given as arguments, or a few samples.
//!
//! ```text
//! cargo run --example parse_eval -- "e1*e2 - i*e3" "(1 + e3)/2"
//! ```

use potentia::expr::{eval_str, print_canonical};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "e1*e2 - i*e3",
            "(1 + e3)/2",
            "e1*e1",
            "(e1 + e2)^2",
            "i^2",
            "3*e12 - e31/4 + 2",
            "e1*(e2",
            "e4",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in &inputs {
        match eval_str(text) {
            Ok(x) => println!("{text:<20} = {}", print_canonical(&x)),
            Err(e) => println!("{text:<20} ! {e}"),
        }
    }
}
