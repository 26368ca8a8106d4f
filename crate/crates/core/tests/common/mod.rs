#![allow(dead_code)]

use lseries_core::{PeriodicFunction, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, prop_oneof![4 => Just(1i64), 1 => 2i64..=6])
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn function(qs: std::ops::RangeInclusive<u64>) -> impl Strategy<Value = PeriodicFunction> {
    qs.prop_flat_map(|q| {
        proptest::collection::vec(rational(), q as usize)
            .prop_map(move |v| PeriodicFunction::new(q, v).unwrap())
    })
}

/// Zero-mean by subtracting the mean from the last slot.
pub fn zero_mean(qs: std::ops::RangeInclusive<u64>) -> impl Strategy<Value = PeriodicFunction> {
    function(qs).prop_map(|f| {
        let q = f.modulus();
        let mut v = f.values().to_vec();
        let s: Rational = v.iter().sum();
        v[q as usize - 1] -= s;
        PeriodicFunction::new(q, v).unwrap()
    })
}

pub fn unit_of(q: u64, seed: usize) -> u64 {
    let us = lseries_core::arith::units(q);
    us[seed % us.len()]
}
