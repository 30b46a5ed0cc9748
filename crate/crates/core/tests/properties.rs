//! Randomized invariants of the exact pipeline and the residue harness.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use qhsing::exactpoly::{rat, Rat};
use qhsing::linktopo::{classify_link, recognize_type};
use qhsing::milnor::{characteristic_polynomial, milnor_number, poincare_polynomial, spectrum};
use qhsing::numcheck::{residue_value, sample_smooth_point, tangent_frame};
use qhsing::weights::{find_weights, WeightSystem};
use qhsing::{parse_polynomial, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Brieskorn-Pham sum `x1^e1 + ... + xk^ek`.
fn brieskorn(exponents: &[u32]) -> (Poly, Vec<String>) {
    let vars: Vec<String> = (1..=exponents.len()).map(|i| format!("x{i}")).collect();
    let text = exponents
        .iter()
        .enumerate()
        .map(|(i, e)| format!("x{}^{e}", i + 1))
        .collect::<Vec<_>>()
        .join(" + ");
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    (parse_polynomial(&text, &refs).unwrap(), vars)
}

fn weights_of(exponents: &[u32]) -> WeightSystem {
    find_weights(&brieskorn(exponents).0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brieskorn_invariants(exponents in prop::collection::vec(2u32..7, 2..5)) {
        let w = weights_of(&exponents);
        let mu = milnor_number(&w).unwrap();
        let expected: u64 = exponents.iter().map(|&e| u64::from(e - 1)).product();
        prop_assert_eq!(mu, expected);
        let poincare = poincare_polynomial(&w).unwrap();
        prop_assert!(poincare.is_palindromic());
        let spec = spectrum(&w).unwrap();
        let n = exponents.len() as i64 - 1;
        prop_assert!(spec.is_symmetric_about(&rat(n - 1, 2)));
        prop_assert_eq!(spec.min().cloned(), Some(w.kappa() - Rat::one()));
        let delta = characteristic_polynomial(&w).unwrap();
        prop_assert_eq!(delta.mu(), mu);
        // Phi_1 is the only anti-palindromic cyclotomic factor
        let c = delta.expand().coeffs().to_vec();
        let sign = if delta.multiplicity(1) % 2 == 0 { 1 } else { -1 };
        for i in 0..c.len() {
            prop_assert_eq!(&c[i] * sign, c[c.len() - 1 - i].clone());
        }
    }

    #[test]
    fn invariants_ignore_variable_order(exponents in prop::collection::vec(2u32..7, 2..5)) {
        let w = weights_of(&exponents);
        let mut reversed = exponents.clone();
        reversed.reverse();
        let wr = weights_of(&reversed);
        prop_assert_eq!(milnor_number(&w).unwrap(), milnor_number(&wr).unwrap());
        prop_assert_eq!(spectrum(&w).unwrap(), spectrum(&wr).unwrap());
        prop_assert_eq!(characteristic_polynomial(&w).unwrap(), characteristic_polynomial(&wr).unwrap());
        let mu = milnor_number(&w).unwrap();
        prop_assert_eq!(recognize_type(&w, mu), recognize_type(&wr, mu));
        let n = exponents.len() - 1;
        let delta = characteristic_polynomial(&w).unwrap();
        prop_assert_eq!(classify_link(&delta, n), classify_link(&characteristic_polynomial(&wr).unwrap(), n));
    }

    #[test]
    fn adding_squares_shifts_spectrum_by_half(exponents in prop::collection::vec(2u32..7, 1..4)) {
        let w = weights_of(&exponents);
        let mut longer = exponents.clone();
        longer.push(2);
        let w2 = weights_of(&longer);
        let shifted: Vec<(Rat, u64)> = spectrum(&w)
            .unwrap()
            .entries()
            .iter()
            .map(|(a, m)| (a + rat(1, 2), *m))
            .collect();
        let spec2 = spectrum(&w2).unwrap();
        prop_assert_eq!(spec2.entries(), shifted.as_slice());
    }

    #[test]
    fn residue_is_linear_in_the_numerator(seed in 0u64..1000) {
        let vars = ["z1", "z2", "z3"];
        let s = parse_polynomial("z1^3 + z2^4 + z3^2", &vars).unwrap();
        let g1 = parse_polynomial("z1 + 1", &vars).unwrap();
        let g2 = parse_polynomial("z2^2 - 3*z3", &vars).unwrap();
        let sum = g1.add(&g2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = sample_smooth_point(&s, &mut rng, 2.0, 10.0);
        let grad: Vec<Complex64> = (0..3)
            .map(|i| s.differentiate(i).unwrap().evaluate_complex(&z).unwrap())
            .collect();
        let frame = tangent_frame(&grad).unwrap();
        let r1 = residue_value(&s, &g1, &z, &frame).unwrap();
        let r2 = residue_value(&s, &g2, &z, &frame).unwrap();
        let r12 = residue_value(&s, &sum, &z, &frame).unwrap();
        prop_assert!((r12 - r1 - r2).norm() <= 1e-9 * (1.0 + r12.norm()));
    }
}

#[test]
fn weights_in_open_unit_interval() {
    for exps in [[2u32, 3, 5], [3, 3, 3], [2, 2, 2]] {
        let w = weights_of(&exps);
        for a in w.weights() {
            let f = a.to_f64().unwrap();
            assert!(f > 0.0 && f < 1.0);
        }
    }
}
