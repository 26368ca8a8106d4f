mod common;

use common::{function, unit_of, zero_mean};
use lseries_core::cyclotomic::{
    coefficient_matrix, cyclotomic_polynomial, fourier_inverse, fourier_transform, theorem1_decide,
    CyclotomicElement,
};
use lseries_core::okada::decide_vanishing;
use lseries_core::{PeriodicFunction, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn element(q: u64) -> impl Strategy<Value = CyclotomicElement> {
    let phi = lseries_core::arith::euler_phi(q).unwrap() as usize;
    proptest::collection::vec(common::rational(), phi)
        .prop_map(move |c| CyclotomicElement::from_coeffs(q, &c).unwrap())
}

#[test]
fn phi_12() {
    let p: Vec<BigInt> = [1, 0, -1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(cyclotomic_polynomial(12).unwrap(), p);
}

#[test]
fn norm_product_equals_q() {
    for q in 2..=30u64 {
        let one = CyclotomicElement::one(q).unwrap();
        let mut acc = one.clone();
        for b in 1..q as i64 {
            acc = acc.mul(&one.sub(&CyclotomicElement::zeta_pow(q, b).unwrap()).unwrap()).unwrap();
        }
        assert_eq!(acc.as_rational(), Some(Rational::from_integer(q.into())));
    }
}

#[test]
fn matrix_rows_reconstruct_fourier_coefficients() {
    let f = PeriodicFunction::from_integers(12, &[3, -1, 0, 2, -5, 1, 0, 0, 4, -2, -1, -1]).unwrap();
    let m = coefficient_matrix(&f).unwrap();
    let hat = fourier_transform(&f).unwrap();
    for (b, row) in m.iter().enumerate() {
        assert_eq!(&CyclotomicElement::from_coeffs(12, row).unwrap(), hat.at(b as i64 + 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fourier_round_trip(f in function(1..=30)) {
        prop_assert_eq!(fourier_inverse(&fourier_transform(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn zero_mean_has_vanishing_last_coefficient(f in zero_mean(1..=30)) {
        let hat = fourier_transform(&f).unwrap();
        prop_assert!(hat.at(f.modulus() as i64).is_zero());
    }

    #[test]
    fn galois_action_composes(e in element(20), i in 0usize..50, j in 0usize..50) {
        let (a, b) = (unit_of(20, i) as i64, unit_of(20, j) as i64);
        prop_assert_eq!(
            e.galois_apply(b).unwrap().galois_apply(a).unwrap(),
            e.galois_apply(a * b % 20).unwrap()
        );
    }

    #[test]
    fn field_inverse(e in element(15)) {
        prop_assume!(!e.is_zero());
        prop_assert!(e.mul(&e.invert().unwrap()).unwrap().is_one());
    }

    #[test]
    fn cyclotomic_route_is_dilation_invariant_and_agrees(f in zero_mean(2..=18), i in 0usize..50) {
        let d = theorem1_decide(&f, 128).unwrap().vanishing;
        prop_assert_eq!(d, decide_vanishing(&f).unwrap().decision);
        let a = unit_of(f.modulus(), i) as i64;
        prop_assert_eq!(theorem1_decide(&f.dilate(a).unwrap(), 128).unwrap().vanishing, d);
    }
}
