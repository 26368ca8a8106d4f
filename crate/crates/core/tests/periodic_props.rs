mod common;

use common::{function, unit_of};
use lseries_core::characters::{enumerate_characters, inner_product_character};
use lseries_core::periodic::inner_product;
use lseries_core::PeriodicFunction;
use proptest::prelude::*;

#[test]
fn dilation_examples() {
    let f = PeriodicFunction::from_integers(4, &[2, -6, 2, 2]).unwrap();
    assert_eq!(f.dilate(3).unwrap(), f);
    assert_eq!(f.dilate(1).unwrap(), f);
    assert!(f.dilate(2).is_err());
    let g = PeriodicFunction::from_integers(4, &[1, -2, 1, 0]).unwrap();
    assert_eq!(g.dilate(3).unwrap(), g);
}

#[test]
fn split_examples() {
    let f = PeriodicFunction::from_integers(4, &[1, -2, 1, 0]).unwrap();
    let (e, o) = f.even_odd_split();
    assert_eq!(e, f);
    assert!(o.is_zero());
    let chi = PeriodicFunction::from_integers(4, &[1, 0, -1, 0]).unwrap();
    let (e, o) = chi.even_odd_split();
    assert!(e.is_zero());
    assert_eq!(o, chi);
}

#[test]
fn inner_product_examples() {
    let d = PeriodicFunction::from_integers(4, &[1, 0, 0, 0]).unwrap();
    assert_eq!(inner_product(&d, &d).unwrap().to_string(), "1/2");
    let f = PeriodicFunction::from_integers(4, &[2, -6, 2, 2]).unwrap();
    let chi0 = PeriodicFunction::from_integers(4, &[1, 0, 1, 0]).unwrap();
    assert_eq!(inner_product(&f, &chi0).unwrap().to_string(), "2");
    assert!(inner_product(&f, &PeriodicFunction::zero(3)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dilations_compose(f in function(1..=30), i in 0usize..100, j in 0usize..100) {
        let q = f.modulus();
        let (a, b) = (unit_of(q, i), unit_of(q, j));
        let lhs = f.dilate(b as i64).unwrap().dilate(a as i64).unwrap();
        let rhs = f.dilate((a * b % q) as i64).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_reassembles(f in function(1..=30)) {
        let (e, o) = f.even_odd_split();
        prop_assert_eq!(&(&e + &o), &f);
        prop_assert!(e.is_even() && o.is_odd());
        prop_assert!(o.is_zero_mean());
        prop_assert_eq!(e.sum(), f.sum());
    }

    #[test]
    fn dilation_preserves_mean(f in function(1..=30), i in 0usize..100) {
        let a = unit_of(f.modulus(), i);
        prop_assert_eq!(f.dilate(a as i64).unwrap().sum(), f.sum());
    }

    #[test]
    fn norm_is_nonnegative(f in function(1..=30)) {
        prop_assert!(inner_product(&f, &f).unwrap() >= lseries_core::Rational::from_integer(0.into()));
    }

    #[test]
    fn character_coefficients_twist_under_dilation(f in function(2..=24), i in 0usize..100) {
        let q = f.modulus();
        let c = unit_of(q, i) as i64;
        for chi in enumerate_characters(q).unwrap() {
            let lhs = inner_product_character(&f.dilate(c).unwrap(), &chi).unwrap();
            let rhs = chi.value(c).mul(&inner_product_character(&f, &chi).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
