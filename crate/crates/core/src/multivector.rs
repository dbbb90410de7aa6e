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

//! The eight-dimensional real algebra generated by three anticommuting
//! elements `e1`, `e2`, `e3` that each square to one.
//!
//! Elements are stored over the fixed basis
//! `1, e1, e2, e3, e12, e23, e31, e123`. The pseudoscalar `e123` squares to
//! `-1` and commutes with everything, so it doubles as the imaginary unit
//! `i`: `e12 = i e3`, `e23 = i e1`, `e31 = i e2`.
//!
//! All structure constants are `0` or `±1`, so products of basis elements
//! are exact in floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical basis slots, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Blade {
    One,
    E1,
    E2,
    E3,
    E12,
    E23,
    E31,
    E123,
}

impl Blade {
    pub const ALL: [Blade; 8] = [
        Blade::One,
        Blade::E1,
        Blade::E2,
        Blade::E3,
        Blade::E12,
        Blade::E23,
        Blade::E31,
        Blade::E123,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Blade> {
        Self::ALL.get(index).copied()
    }

    /// Canonical name. The pseudoscalar is rendered as `i`.
    pub fn name(self) -> &'static str {
        match self {
            Blade::One => "1",
            Blade::E1 => "e1",
            Blade::E2 => "e2",
            Blade::E3 => "e3",
            Blade::E12 => "e12",
            Blade::E23 => "e23",
            Blade::E31 => "e31",
            Blade::E123 => "i",
        }
    }

    pub fn grade(self) -> u32 {
        MASK[self.index()].count_ones()
    }
}

/// One of the three generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    E1,
    E2,
    E3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::E1, Axis::E2, Axis::E3];

    pub fn from_number(n: u8) -> Option<Axis> {
        match n {
            1 => Some(Axis::E1),
            2 => Some(Axis::E2),
            3 => Some(Axis::E3),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Axis::E1 => 1,
            Axis::E2 => 2,
            Axis::E3 => 3,
        }
    }

    pub fn blade(self) -> Blade {
        match self {
            Axis::E1 => Blade::E1,
            Axis::E2 => Blade::E2,
            Axis::E3 => Blade::E3,
        }
    }

    /// The next axis in the cyclic order `1 -> 2 -> 3 -> 1`.
    pub fn next(self) -> Axis {
        match self {
            Axis::E1 => Axis::E2,
            Axis::E2 => Axis::E3,
            Axis::E3 => Axis::E1,
        }
    }
}

// Bitmask of generators in each slot (bit 0 = e1, bit 1 = e2, bit 2 = e3).
const MASK: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111];

// Sign relating each slot to the ascending product of its generators.
// e31 = e3 e1 = -e1 e3.
const ORIENT: [i8; 8] = [1, 1, 1, 1, 1, 1, -1, 1];

const fn slot_of_mask(mask: u8) -> usize {
    let mut i = 0;
    while i < 8 {
        if MASK[i] == mask {
            return i;
        }
        i += 1;
    }
    panic!("mask out of range")
}

// Sign of reordering the ascending word `a` followed by the ascending word
// `b` into ascending order, with every generator squaring to +1.
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut swaps = 0;
    let mut bit = 0;
    while bit < 3 {
        if b & (1 << bit) != 0 {
            // generators of `a` with a higher index must hop over this one
            swaps += (a >> (bit + 1)).count_ones();
        }
        bit += 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

const fn build_table() -> [[(i8, u8); 8]; 8] {
    let mut table = [[(0i8, 0u8); 8]; 8];
    let mut x = 0;
    while x < 8 {
        let mut y = 0;
        while y < 8 {
            let mask = MASK[x] ^ MASK[y];
            let z = slot_of_mask(mask);
            let sign = ORIENT[x] * ORIENT[y] * reorder_sign(MASK[x], MASK[y]) * ORIENT[z];
            table[x][y] = (sign, z as u8);
            y += 1;
        }
        x += 1;
    }
    table
}

/// `PRODUCT[x][y] = (sign, z)` means `blade_x * blade_y = sign * blade_z`.
pub const PRODUCT: [[(i8, u8); 8]; 8] = build_table();

/// Product of two basis blades.
pub fn blade_product(x: Blade, y: Blade) -> (i8, Blade) {
    let (sign, z) = PRODUCT[x.index()][y.index()];
    (sign, Blade::ALL[z as usize])
}

/// An element of the algebra: eight finite real coefficients.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    coeffs: [f64; 8],
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({})", crate::expr::print_canonical(self))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print_canonical(self))
    }
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; 8] };
    pub const ONE: Multivector = Multivector::blade(Blade::One);

    pub fn new(coeffs: [f64; 8]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Multivector { coeffs })
        } else {
            Err(Error::NonFinite {
                context: "multivector coefficients",
            })
        }
    }

    pub const fn blade(b: Blade) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[b as usize] = 1.0;
        Multivector { coeffs }
    }

    pub fn scalar(value: f64) -> Result<Self> {
        let mut coeffs = [0.0; 8];
        coeffs[0] = value;
        Multivector::new(coeffs)
    }

    pub fn e1() -> Self {
        Self::blade(Blade::E1)
    }

    pub fn e2() -> Self {
        Self::blade(Blade::E2)
    }

    pub fn e3() -> Self {
        Self::blade(Blade::E3)
    }

    /// The pseudoscalar `e1 e2 e3`.
    pub fn pseudoscalar() -> Self {
        Self::blade(Blade::E123)
    }

    pub fn generator(axis: Axis) -> Self {
        Self::blade(axis.blade())
    }

    /// Embeds a complex number as `re + im * e123`.
    pub fn from_complex(z: ComplexScalar) -> Result<Self> {
        let mut coeffs = [0.0; 8];
        coeffs[0] = z.re;
        coeffs[7] = z.im;
        Multivector::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.coeffs
    }

    pub fn coeff(&self, b: Blade) -> f64 {
        self.coeffs[b.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    fn checked(coeffs: [f64; 8]) -> Result<Self> {
        Multivector::new(coeffs).map_err(|_| Error::ArithmeticOverflow)
    }

    pub fn add(&self, other: &Multivector) -> Result<Self> {
        let mut out = self.coeffs;
        for (o, c) in out.iter_mut().zip(other.coeffs) {
            *o += c;
        }
        Self::checked(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Multivector {
            coeffs: self.coeffs.map(|c| -c),
        }
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        if !factor.is_finite() {
            return Err(Error::NonFinite {
                context: "scale factor",
            });
        }
        Self::checked(self.coeffs.map(|c| c * factor))
    }

    /// The algebra product.
    pub fn mul(&self, other: &Multivector) -> Result<Self> {
        let mut out = [0.0; 8];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (y, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let (sign, z) = PRODUCT[x][y];
                out[z as usize] += f64::from(sign) * a * b;
            }
        }
        Self::checked(out)
    }

    /// Integer power by repeated squaring; `x^0 = 1`.
    pub fn pow(&self, mut exponent: u64) -> Result<Self> {
        let mut base = *self;
        let mut acc = Multivector::ONE;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Max-norm comparison. With `tol = 0` this is exact equality.
    pub fn eq_tol(&self, other: &Multivector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// 2x2 complex matrix image under the Pauli representation.
    pub fn rep(&self) -> Matrix2 {
        let basis = basis_matrices();
        let mut out = Matrix2::ZERO;
        for (c, m) in self.coeffs.iter().zip(basis.iter()) {
            if *c != 0.0 {
                out = out.add(&m.scale(*c));
            }
        }
        out
    }
}

/// Compares two multivectors in max-norm.
pub fn eq_tol(x: &Multivector, y: &Multivector, tol: f64) -> bool {
    x.eq_tol(y, tol)
}

/// `(1 + e3) / 2`.
pub fn psi1() -> Multivector {
    idempotents_for(Axis::E3).0
}

/// `(1 - e3) / 2`.
pub fn psi2() -> Multivector {
    idempotents_for(Axis::E3).1
}

/// The pair `((1 + e_k) / 2, (1 - e_k) / 2)`.
pub fn idempotents_for(axis: Axis) -> (Multivector, Multivector) {
    let mut plus = [0.0; 8];
    let mut minus = [0.0; 8];
    plus[0] = 0.5;
    minus[0] = 0.5;
    plus[axis.blade().index()] = 0.5;
    minus[axis.blade().index()] = -0.5;
    (Multivector { coeffs: plus }, Multivector { coeffs: minus })
}

/// A complex number. Inside the algebra the imaginary part multiplies the
/// central pseudoscalar.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const ZERO: ComplexScalar = ComplexScalar { re: 0.0, im: 0.0 };
    pub const ONE: ComplexScalar = ComplexScalar { re: 1.0, im: 0.0 };
    pub const I: ComplexScalar = ComplexScalar { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        ComplexScalar { re, im }
    }

    pub const fn real(re: f64) -> Self {
        ComplexScalar { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        ComplexScalar::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(self, factor: f64) -> Self {
        ComplexScalar::new(self.re * factor, self.im * factor)
    }

    /// Principal square root: nonnegative real part, and nonnegative
    /// imaginary part when the real part is zero.
    pub fn sqrt(self) -> Self {
        if self.im == 0.0 {
            return if self.re >= 0.0 {
                ComplexScalar::real(self.re.sqrt())
            } else {
                ComplexScalar::new(0.0, (-self.re).sqrt())
            };
        }
        let r = self.abs();
        let re = ((r + self.re) / 2.0).sqrt();
        let im = ((r - self.re) / 2.0).sqrt().copysign(self.im);
        ComplexScalar::new(re, im)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0.0) => write!(f, "{re}"),
            (0.0, im) => write!(f, "{im}i"),
            (re, im) if im < 0.0 => write!(f, "{re} - {}i", -im),
            (re, im) => write!(f, "{re} + {im}i"),
        }
    }
}

impl Add for ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: ComplexScalar) -> ComplexScalar {
        ComplexScalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: ComplexScalar) -> ComplexScalar {
        ComplexScalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar::new(-self.re, -self.im)
    }
}

impl Mul for ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: ComplexScalar) -> ComplexScalar {
        ComplexScalar::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexScalar {
    type Output = ComplexScalar;
    fn div(self, rhs: ComplexScalar) -> ComplexScalar {
        // exact for the unit-modulus and real divisors used by the solver
        let d = rhs.norm_sqr();
        let n = self * rhs.conj();
        ComplexScalar::new(n.re / d, n.im / d)
    }
}

/// Row-major 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Matrix2 {
    pub entries: [[ComplexScalar; 2]; 2],
}

impl Matrix2 {
    pub const ZERO: Matrix2 = Matrix2 {
        entries: [[ComplexScalar::ZERO; 2]; 2],
    };
    pub const IDENTITY: Matrix2 = Matrix2 {
        entries: [
            [ComplexScalar::ONE, ComplexScalar::ZERO],
            [ComplexScalar::ZERO, ComplexScalar::ONE],
        ],
    };

    pub const fn new(entries: [[ComplexScalar; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    pub const fn pauli_x() -> Self {
        Matrix2::new([
            [ComplexScalar::ZERO, ComplexScalar::ONE],
            [ComplexScalar::ONE, ComplexScalar::ZERO],
        ])
    }

    pub const fn pauli_y() -> Self {
        Matrix2::new([
            [ComplexScalar::ZERO, ComplexScalar::new(0.0, -1.0)],
            [ComplexScalar::I, ComplexScalar::ZERO],
        ])
    }

    pub const fn pauli_z() -> Self {
        Matrix2::new([
            [ComplexScalar::ONE, ComplexScalar::ZERO],
            [ComplexScalar::ZERO, ComplexScalar::real(-1.0)],
        ])
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        self.entries[row][col]
    }

    pub fn add(&self, other: &Matrix2) -> Matrix2 {
        let mut out = self.entries;
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = *v + other.entries[r][c];
            }
        }
        Matrix2 { entries: out }
    }

    pub fn scale(&self, factor: f64) -> Matrix2 {
        Matrix2 {
            entries: self.entries.map(|row| row.map(|v| v.scale(factor))),
        }
    }

    pub fn matmul(&self, other: &Matrix2) -> Matrix2 {
        let a = &self.entries;
        let b = &other.entries;
        let mut out = [[ComplexScalar::ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Matrix2 { entries: out }
    }

    pub fn trace(&self) -> ComplexScalar {
        self.entries[0][0] + self.entries[1][1]
    }

    /// Largest modulus of an entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).abs());
            }
        }
        worst
    }
}

/// Images of the eight basis blades, built from the three Pauli matrices.
pub fn basis_matrices() -> [Matrix2; 8] {
    let x = Matrix2::pauli_x();
    let y = Matrix2::pauli_y();
    let z = Matrix2::pauli_z();
    [
        Matrix2::IDENTITY,
        x,
        y,
        z,
        x.matmul(&y),
        y.matmul(&z),
        z.matmul(&x),
        x.matmul(&y).matmul(&z),
    ]
}

/// Free-function form of [`Multivector::rep`].
pub fn rep(x: &Multivector) -> Matrix2 {
    x.rep()
}
