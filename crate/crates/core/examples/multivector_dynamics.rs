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

//! Squaring dynamics on `psi + phi e3`, compared with the scalar map and its
//! closed form, and actualized halfway.

use potentia::dynamics::{
    actualize, closed_form, iterate, mv_evolve, mv_step, ActualPotentialState,
};
use potentia::{Multivector, Outcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s0 = ActualPotentialState::new(0.7, 0.25)?;
    let mut z = Multivector::scalar(s0.psi_a)?.add(&Multivector::e3().scale(s0.phi_p)?)?;
    println!(
        "{:>3} {:>22} {:>22} {:>22}",
        "n", "iterate", "closed form", "multivector"
    );
    for n in 0..=10 {
        let it = iterate(&s0, n)?;
        let cf = closed_form(&s0, n)?;
        println!(
            "{n:>3} {:>22} {:>22} {:>22}",
            format!("({:.6}, {:.6})", it.psi_a, it.phi_p),
            format!("({:.6}, {:.6})", cf.psi_a, cf.phi_p),
            format!("({:.6}, {:.6})", z.coeffs()[0], z.coeffs()[3]),
        );
        z = mv_step(&z)?;
    }

    let z0 = Multivector::scalar(s0.psi_a)?.add(&Multivector::e3().scale(s0.phi_p)?)?;
    for s in [Outcome::Plus, Outcome::Minus] {
        let collapsed = mv_evolve(&z0, 4, s, 10)?;
        let expected = actualize(&s0, s).powi(1 << 10);
        println!("actualize {s} at step 4, run to 10: {collapsed}  (expected {expected:.6e})");
    }
    Ok(())
}
