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

//! Algebraic laws checked on generated inputs.

use proptest::prelude::*;

use potentia::collapse::{
    b_mul, density_from_amplitudes, measure_collapse, projected, substitute, substitute_axis,
    BBlade, CollapsedElement,
};
use potentia::dynamics::{actualize, closed_form, iterate, mv_step, step, ActualPotentialState};
use potentia::expr::{eval_str, parse, print_canonical};
use potentia::multivector::{Axis, Blade, ComplexScalar, Multivector};
use potentia::potentiality::{
    is_feasible, means, means_from_density, MeanVector, PotentialityAssignment,
};
use potentia::Outcome;

fn unit() -> impl Strategy<Value = f64> {
    -1.0f64..=1.0
}

fn multivector() -> impl Strategy<Value = Multivector> {
    proptest::array::uniform8(unit()).prop_map(|c| Multivector::new(c).unwrap())
}

fn outcome() -> impl Strategy<Value = Outcome> {
    prop_oneof![Just(Outcome::Plus), Just(Outcome::Minus)]
}

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::E1), Just(Axis::E2), Just(Axis::E3)]
}

/// Normalized amplitude pair.
fn amplitudes() -> impl Strategy<Value = (ComplexScalar, ComplexScalar)> {
    proptest::array::uniform4(unit())
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-6)
        .prop_map(|v| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            (
                ComplexScalar::new(v[0] / n, v[1] / n),
                ComplexScalar::new(v[2] / n, v[3] / n),
            )
        })
}

fn stable_state() -> impl Strategy<Value = ActualPotentialState> {
    (unit(), unit())
        .prop_map(|(a, b)| ActualPotentialState::new((a + b) / 2.0, (a - b) / 2.0).unwrap())
}

proptest! {
    #[test]
    fn product_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(left.eq_tol(&right, 1e-12));
    }

    #[test]
    fn product_is_bilinear(a in multivector(), b in multivector(), c in multivector(), t in unit()) {
        let lhs = a.scale(t).unwrap().add(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&c).unwrap().scale(t).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.eq_tol(&rhs, 1e-12));
    }

    #[test]
    fn rep_is_a_homomorphism(a in multivector(), b in multivector()) {
        let lhs = a.mul(&b).unwrap().rep();
        let rhs = a.rep().matmul(&b.rep());
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn pseudoscalar_commutes(a in multivector()) {
        let i = Multivector::pseudoscalar();
        prop_assert_eq!(i.mul(&a).unwrap(), a.mul(&i).unwrap());
    }

    #[test]
    fn substitution_is_linear(a in multivector(), b in multivector(), t in unit(), s in outcome(), k in axis()) {
        let lhs = substitute_axis(&a.scale(t).unwrap().add(&b).unwrap(), k, s);
        let rhs = substitute_axis(&a, k, s).scale(t).unwrap().add(&substitute_axis(&b, k, s)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn substitution_is_multiplicative_on_the_corner(x in multivector(), y in multivector(), s in outcome()) {
        let px = projected(&x, Axis::E3, s).unwrap();
        let py = projected(&y, Axis::E3, s).unwrap();
        let lhs = substitute(&px.mul(&py).unwrap(), s);
        let rhs = b_mul(&substitute(&px, s), &substitute(&py, s)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn b_is_associative_on_elements(
        x in proptest::array::uniform4(unit()),
        y in proptest::array::uniform4(unit()),
        z in proptest::array::uniform4(unit()),
        s in outcome(),
    ) {
        let el = |c| CollapsedElement::new(c, s, Axis::E3).unwrap();
        let (x, y, z) = (el(x), el(y), el(z));
        let left = b_mul(&b_mul(&x, &y).unwrap(), &z).unwrap();
        let right = b_mul(&x, &b_mul(&y, &z).unwrap()).unwrap();
        prop_assert!(left.max_abs_diff(&right) <= 1e-12);
    }

    #[test]
    fn collapse_keeps_only_the_outcome_probability((c1, c2) in amplitudes()) {
        let (_, rho) = density_from_amplitudes(c1, c2).unwrap();
        let up = measure_collapse(&rho, Outcome::Plus).unwrap();
        let down = measure_collapse(&rho, Outcome::Minus).unwrap();
        prop_assert!((up.scalar() - c1.norm_sqr()).abs() <= 1e-12);
        prop_assert!((down.scalar() - c2.norm_sqr()).abs() <= 1e-12);
        for b in [BBlade::E1, BBlade::E2, BBlade::I] {
            prop_assert!(up.coeff(b).abs() <= 1e-12 && down.coeff(b).abs() <= 1e-12);
        }
    }

    #[test]
    fn pure_states_sit_on_the_unit_sphere((c1, c2) in amplitudes()) {
        let (d, _) = density_from_amplitudes(c1, c2).unwrap();
        let m = means_from_density(d.as_array()).unwrap();
        prop_assert!((m.norm_sq() - 1.0).abs() <= 1e-12);
        prop_assert!(is_feasible(&m));
    }

    #[test]
    fn means_are_affine(p in proptest::array::uniform3(0.0f64..=1.0)) {
        let m = means(&PotentialityAssignment::from_p_plus(p).unwrap()).unwrap();
        for (mk, pk) in m.m.iter().zip(p) {
            prop_assert!((mk - (2.0 * pk - 1.0)).abs() <= 1e-15);
        }
    }

    #[test]
    fn a_definite_mean_excludes_the_others(
        rest in proptest::array::uniform2(unit()),
        decades in 0i32..16,
        k in 0usize..3,
        sign in prop_oneof![Just(1.0), Just(-1.0)],
    ) {
        let small = 10f64.powi(-decades);
        let mut v = [rest[0] * small, rest[1] * small, 0.0];
        v.swap(k, 2);
        v[k] = sign;
        let m = MeanVector::new(v).unwrap();
        if is_feasible(&m) {
            prop_assert!((0..3).filter(|&j| j != k).all(|j| m.m[j].abs() <= 1e-6));
        } else {
            prop_assert!(m.m[(k + 1) % 3] != 0.0 || m.m[(k + 2) % 3] != 0.0);
        }
    }

    #[test]
    fn branch_values_square(s in stable_state()) {
        let next = step(&s).unwrap();
        let (a, b) = s.branches();
        prop_assert!((next.psi_a + next.phi_p - a * a).abs() <= 1e-12);
        prop_assert!((next.psi_a - next.phi_p - b * b).abs() <= 1e-12);
    }

    #[test]
    fn actualization_commutes_with_evolution(s in stable_state(), sign in outcome()) {
        let lhs = actualize(&step(&s).unwrap(), sign);
        let v = actualize(&s, sign);
        prop_assert!((lhs - v * v).abs() <= 1e-12);
    }

    #[test]
    fn closed_form_tracks_iteration(s in stable_state(), n in 0u64..=20) {
        let it = iterate(&s, n).unwrap();
        let cf = closed_form(&s, n).unwrap();
        let scale = it.psi_a.abs().max(it.phi_p.abs()).max(cf.psi_a.abs()).max(f64::MIN_POSITIVE);
        let err = (it.psi_a - cf.psi_a).abs().max((it.phi_p - cf.phi_p).abs()) / scale;
        prop_assert!(err <= 1e-10, "relative error {err:e}");
    }

    #[test]
    fn multivector_squaring_matches_the_scalar_map(s in stable_state(), k in axis()) {
        let z = Multivector::scalar(s.psi_a).unwrap()
            .add(&Multivector::generator(k).scale(s.phi_p).unwrap()).unwrap();
        let sq = mv_step(&z).unwrap();
        let next = step(&s).unwrap();
        prop_assert!((sq.coeff(Blade::One) - next.psi_a).abs() <= 1e-15);
        prop_assert!((sq.coeff(k.blade()) - next.phi_p).abs() <= 1e-15);
        let mut rest = *sq.coeffs();
        rest[0] = 0.0;
        rest[k.blade().index()] = 0.0;
        prop_assert!(rest.iter().all(|&c| c == 0.0));
    }

    #[test]
    fn canonical_text_round_trips(num in proptest::array::uniform8(-4096i32..=4096), shift in proptest::array::uniform8(0i32..12)) {
        let coeffs = std::array::from_fn(|k| f64::from(num[k]) / f64::from(1 << shift[k]));
        let x = Multivector::new(coeffs).unwrap();
        prop_assert_eq!(eval_str(&print_canonical(&x)).unwrap(), x);
    }

    #[test]
    fn parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..512)) {
        let text = String::from_utf8_lossy(&bytes);
        if let Ok(e) = parse(&text) {
            let _ = potentia::expr::eval(&e);
        }
    }

    #[test]
    fn parser_never_panics_on_token_soup(tokens in proptest::collection::vec(
        prop_oneof![
            Just("e1"), Just("e2"), Just("e3"), Just("i"), Just("e0"), Just("e123"),
            Just("+"), Just("-"), Just("*"), Just("/"), Just("^"), Just("("), Just(")"),
            Just("0"), Just("2"), Just("0.5"), Just("1e308"), Just("7"), Just(" "),
        ], 0..64)) {
        let text = tokens.concat();
        if let Ok(e) = parse(&text) {
            let _ = potentia::expr::eval(&e);
        }
    }
}
