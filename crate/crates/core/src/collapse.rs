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

//! The four-dimensional algebra `B` on `{1, e1, e2, i}` that remains once a
//! generator has been given a definite value `s = ±1`, the substitution map
//! from the full algebra into `B`, and density-matrix collapse.
//!
//! In `B` the unit `i` squares to `-1` and anticommutes with `e1`, `e2`:
//!
//! ```text
//! e1 e2 = s i    e2 i = -s e1    i e2 = s e1    e1 i = s e2    i e1 = -s e2
//! ```
//!
//! When `e1` or `e2` is the measured generator, the remaining two generators
//! take the roles of `e1`, `e2` in cyclic order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::derivation::{generate_table, Signature, StructureSolution};
use crate::error::{Error, Result};
use crate::multivector::{idempotents_for, Axis, Blade, ComplexScalar, Multivector};

/// Tolerance on amplitude normalization.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Value attributed to the measured generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    fn sign_i8(self) -> i8 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Outcome> {
        match sign {
            1 => Some(Outcome::Plus),
            -1 => Some(Outcome::Minus),
            _ => None,
        }
    }

    /// The idempotent `(1 ± e_axis) / 2` selecting this outcome.
    pub fn projector(self, axis: Axis) -> Multivector {
        let (plus, minus) = idempotents_for(axis);
        match self {
            Outcome::Plus => plus,
            Outcome::Minus => minus,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Plus => "+1",
            Outcome::Minus => "-1",
        })
    }
}

/// Basis of `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BBlade {
    One,
    E1,
    E2,
    I,
}

impl BBlade {
    pub const ALL: [BBlade; 4] = [BBlade::One, BBlade::E1, BBlade::E2, BBlade::I];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BBlade::One => "1",
            BBlade::E1 => "e1",
            BBlade::E2 => "e2",
            BBlade::I => "i",
        }
    }
}

/// Product of two basis elements of `B` for orientation `s`.
pub fn b_product(s: Outcome, x: BBlade, y: BBlade) -> (i8, BBlade) {
    use BBlade::*;
    let s = s.sign_i8();
    match (x, y) {
        (One, y) => (1, y),
        (x, One) => (1, x),
        (E1, E1) | (E2, E2) => (1, One),
        (I, I) => (-1, One),
        (E1, E2) => (s, I),
        (E2, E1) => (-s, I),
        (E2, I) => (-s, E1),
        (I, E2) => (s, E1),
        (E1, I) => (s, E2),
        (I, E1) => (-s, E2),
    }
}

/// Element of `B`, tagged with the measured axis and its value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapsedElement {
    coeffs: [f64; 4],
    orientation: Outcome,
    axis: Axis,
}

impl CollapsedElement {
    pub fn new(coeffs: [f64; 4], orientation: Outcome, axis: Axis) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(CollapsedElement {
                coeffs,
                orientation,
                axis,
            })
        } else {
            Err(Error::NonFinite {
                context: "subalgebra coefficients",
            })
        }
    }

    pub fn blade(b: BBlade, orientation: Outcome, axis: Axis) -> Self {
        let mut coeffs = [0.0; 4];
        coeffs[b.index()] = 1.0;
        CollapsedElement {
            coeffs,
            orientation,
            axis,
        }
    }

    pub fn coeffs(&self) -> &[f64; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, b: BBlade) -> f64 {
        self.coeffs[b.index()]
    }

    pub fn scalar(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn orientation(&self) -> Outcome {
        self.orientation
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// True when only the scalar part is nonzero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0.0)
    }

    fn check_compatible(&self, other: &CollapsedElement) -> Result<()> {
        if self.orientation != other.orientation || self.axis != other.axis {
            return Err(Error::IncompatibleSubalgebra(format!(
                "(axis e{}, s = {}) vs (axis e{}, s = {})",
                self.axis.number(),
                self.orientation,
                other.axis.number(),
                other.orientation
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &CollapsedElement) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.coeffs;
        for (o, c) in out.iter_mut().zip(other.coeffs) {
            *o += c;
        }
        CollapsedElement::new(out, self.orientation, self.axis)
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        CollapsedElement::new(self.coeffs.map(|c| c * factor), self.orientation, self.axis)
    }

    pub fn max_abs_diff(&self, other: &CollapsedElement) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn square(&self) -> Result<Self> {
        b_mul(self, self)
    }

    /// Trace of the matrix `scalar * I`, i.e. twice the scalar part.
    pub fn trace(&self) -> f64 {
        2.0 * self.scalar()
    }

    /// Rescales so that [`trace`](Self::trace) is one: a collapsed state
    /// `p * 1` becomes `1/2`, the scalar part of every normalized state.
    pub fn renormalized(&self) -> Result<Self> {
        let p = self.scalar();
        if p == 0.0 {
            return Err(Error::Normalization(
                "outcome has zero probability".to_string(),
            ));
        }
        self.scale(0.5 / p)
    }
}

impl fmt::Display for CollapsedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(f64, String)> = BBlade::ALL
            .iter()
            .map(|b| {
                let name = if *b == BBlade::One { "" } else { b.name() };
                (self.coeff(*b), name.to_string())
            })
            .filter(|(c, _)| *c != 0.0)
            .collect();
        f.write_str(&crate::expr::join_terms(&terms))
    }
}

/// Product in `B` under the orientation shared by both operands.
pub fn b_mul(x: &CollapsedElement, y: &CollapsedElement) -> Result<CollapsedElement> {
    x.check_compatible(y)?;
    let mut out = [0.0; 4];
    for a in BBlade::ALL {
        let xa = x.coeff(a);
        if xa == 0.0 {
            continue;
        }
        for b in BBlade::ALL {
            let yb = y.coeff(b);
            if yb == 0.0 {
                continue;
            }
            let (sign, c) = b_product(x.orientation, a, b);
            out[c.index()] += f64::from(sign) * xa * yb;
        }
    }
    CollapsedElement::new(out, x.orientation, x.axis)
}

/// Image of each full-algebra basis blade when generator `axis` takes the
/// value `s`, as `(sign, target)` pairs.
pub fn substitution_images(axis: Axis, s: Outcome) -> [(f64, BBlade); 8] {
    let a = axis.next();
    let b = a.next();
    let s = s.sign();
    let mut images = [(0.0, BBlade::One); 8];
    let mut set = |word: Multivector, image: (f64, BBlade)| {
        // every word below is ±1 times exactly one canonical blade
        let (slot, coeff) = word
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| **c != 0.0)
            .map(|(i, c)| (i, *c))
            .expect("nonzero basis word");
        images[slot] = (coeff * image.0, image.1);
    };
    let (ek, ea, eb) = (
        Multivector::generator(axis),
        Multivector::generator(a),
        Multivector::generator(b),
    );
    let word = |x: &Multivector, y: &Multivector| x.mul(y).expect("basis product");
    set(Multivector::ONE, (1.0, BBlade::One));
    set(ek, (s, BBlade::One));
    set(ea, (1.0, BBlade::E1));
    set(eb, (1.0, BBlade::E2));
    set(word(&ea, &eb), (s, BBlade::I));
    set(word(&eb, &ek), (s, BBlade::E2));
    set(word(&ek, &ea), (s, BBlade::E1));
    set(Multivector::pseudoscalar(), (1.0, BBlade::I));
    images
}

/// Linear substitution `e3 -> s` into `B`.
pub fn substitute(x: &Multivector, s: Outcome) -> CollapsedElement {
    substitute_axis(x, Axis::E3, s)
}

/// Linear substitution `e_axis -> s` into `B`.
pub fn substitute_axis(x: &Multivector, axis: Axis, s: Outcome) -> CollapsedElement {
    let images = substitution_images(axis, s);
    let mut out = [0.0; 4];
    for (blade, (sign, target)) in Blade::ALL.iter().zip(images) {
        out[target.index()] += sign * x.coeff(*blade);
    }
    CollapsedElement {
        coeffs: out,
        orientation: s,
        axis,
    }
}

/// Density coefficients of `ρ = a + b e1 + c e2 + d e3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl DensityCoefficients {
    pub fn as_array(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn to_multivector(&self) -> Result<Multivector> {
        Multivector::new([self.a, self.b, self.c, self.d, 0.0, 0.0, 0.0, 0.0])
    }
}

/// Density element of the pure state `c1 φ1 + c2 φ2`.
pub fn density_from_amplitudes(
    c1: ComplexScalar,
    c2: ComplexScalar,
) -> Result<(DensityCoefficients, Multivector)> {
    if !c1.is_finite() || !c2.is_finite() {
        return Err(Error::NonFinite {
            context: "amplitudes",
        });
    }
    let (p1, p2) = (c1.norm_sqr(), c2.norm_sqr());
    if (p1 + p2 - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::Normalization(format!(
            "|c1|^2 + |c2|^2 = {} differs from 1",
            p1 + p2
        )));
    }
    let cross = c1.conj() * c2;
    let coeffs = DensityCoefficients {
        a: (p1 + p2) / 2.0,
        // (c1* c2 + c1 c2*) / 2
        b: cross.re,
        // i (c1 c2* - c1* c2) / 2
        c: cross.im,
        d: (p1 - p2) / 2.0,
    };
    let rho = coeffs.to_multivector()?;
    Ok((coeffs, rho))
}

/// `ψ_s ρ ψ_s` in the full algebra.
pub fn projected(rho: &Multivector, axis: Axis, s: Outcome) -> Result<Multivector> {
    let p = s.projector(axis);
    p.mul(rho)?.mul(&p)
}

/// Collapse of `ρ` on measuring `e3` with value `s`.
pub fn measure_collapse(rho: &Multivector, s: Outcome) -> Result<CollapsedElement> {
    measure_collapse_axis(rho, Axis::E3, s)
}

pub fn measure_collapse_axis(
    rho: &Multivector,
    axis: Axis,
    s: Outcome,
) -> Result<CollapsedElement> {
    Ok(substitute_axis(&projected(rho, axis, s)?, axis, s))
}

/// Product table of `B` as recovered from a structure-constant solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubalgebraTable {
    pub orientation: Outcome,
    pub entries: [[(i8, BBlade); 4]; 4],
}

impl SubalgebraTable {
    pub fn product(&self, x: BBlade, y: BBlade) -> (i8, BBlade) {
        self.entries[x.index()][y.index()]
    }

    /// True iff every entry agrees with [`b_product`].
    pub fn matches_b_mul(&self) -> bool {
        BBlade::ALL.iter().all(|&x| {
            BBlade::ALL
                .iter()
                .all(|&y| self.product(x, y) == b_product(self.orientation, x, y))
        })
    }
}

/// Reads a `(1, 1, -1)` solution as the table of `B`, generator `e3` of the
/// solution standing for `i`.
pub fn subalgebra_from_solution(sol: &StructureSolution) -> Result<SubalgebraTable> {
    if sol.signature != Signature::collapsed() {
        return Err(Error::DomainRestriction(format!(
            "signature ({}, {}, {}) is not (1, 1, -1)",
            sol.signature.k1, sol.signature.k2, sol.signature.k3
        )));
    }
    let orientation = match (sol.omega3.re, sol.omega3.im) {
        (re, im) if re == 1.0 && im == 0.0 => Outcome::Plus,
        (re, im) if re == -1.0 && im == 0.0 => Outcome::Minus,
        _ => {
            return Err(Error::DomainRestriction(format!(
                "omega3 = {} is not ±1",
                sol.omega3
            )))
        }
    };
    let table = generate_table(sol)?;
    let mut entries = [[(0i8, BBlade::One); 4]; 4];
    for x in BBlade::ALL {
        for y in BBlade::ALL {
            let (coeff, g) = table.product(x.index(), y.index());
            let sign = match (coeff.re, coeff.im) {
                (re, im) if re == 1.0 && im == 0.0 => 1,
                (re, im) if re == -1.0 && im == 0.0 => -1,
                _ => {
                    return Err(Error::DomainRestriction(format!(
                        "product coefficient {coeff} is not ±1"
                    )))
                }
            };
            entries[x.index()][y.index()] = (sign, BBlade::ALL[g]);
        }
    }
    let out = SubalgebraTable {
        orientation,
        entries,
    };
    if !out.matches_b_mul() {
        return Err(Error::DomainRestriction(
            "solution table disagrees with the subalgebra product".to_string(),
        ));
    }
    Ok(out)
}

/// Checks, for one measured axis and outcome, that substitution is
/// multiplicative on every pair of projected basis blades `ψ x ψ`, with
/// the product in `B` taken from the solver-derived table.
pub fn verify_axis_branch(axis: Axis, s: Outcome) -> Result<bool> {
    let branch = match s {
        Outcome::Plus => 0,
        Outcome::Minus => 1,
    };
    let sol = crate::derivation::solve_structure_constants(&Signature::collapsed())[branch];
    let table = subalgebra_from_solution(&sol)?;
    let table_mul = |x: &CollapsedElement, y: &CollapsedElement| {
        let mut out = [0.0; 4];
        for a in BBlade::ALL {
            for b in BBlade::ALL {
                let (sign, c) = table.product(a, b);
                out[c.index()] += f64::from(sign) * x.coeff(a) * y.coeff(b);
            }
        }
        out
    };
    for x in Blade::ALL {
        let px = projected(&Multivector::blade(x), axis, s)?;
        for y in Blade::ALL {
            let py = projected(&Multivector::blade(y), axis, s)?;
            let lhs = substitute_axis(&px.mul(&py)?, axis, s);
            let rhs = table_mul(
                &substitute_axis(&px, axis, s),
                &substitute_axis(&py, axis, s),
            );
            if lhs.coeffs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(substitute_axis(&s.projector(axis), axis, s).coeffs == [1.0, 0.0, 0.0, 0.0])
}
