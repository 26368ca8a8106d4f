mod common;

use lseries_core::arith::{euler_phi, units};
use lseries_core::characters::{
    character_decompose, character_reconstruct, dedekind_determinant, enumerate_characters,
};
use lseries_core::cyclotomic::CyclotomicElement;
use lseries_core::numeric::{digamma, ComplexBall};
use lseries_core::{PeriodicFunction, Rational};
use proptest::prelude::*;

#[test]
fn character_sums_over_units() {
    for q in 1..=36u64 {
        for chi in enumerate_characters(q).unwrap() {
            let mut s = CyclotomicElement::zero(chi.value_modulus()).unwrap();
            for a in units(q) {
                s = s.add(&chi.value(a as i64)).unwrap();
            }
            let want = if chi.is_principal() { euler_phi(q).unwrap() } else { 0 };
            assert_eq!(s.as_rational(), Some(Rational::from_integer(want.into())));
        }
    }
}

#[test]
fn dedekind_on_digamma_maps() {
    for q in [3u64, 4, 5, 8, 12] {
        let rep = dedekind_determinant(q, 128, |a| {
            ComplexBall::from_real(digamma(&Rational::new(a.into(), q.into()), 128).unwrap())
        })
        .unwrap();
        assert!(rep.agree(), "q={q}");
    }
}

fn unit_supported(q: u64) -> impl Strategy<Value = PeriodicFunction> {
    proptest::collection::vec(common::rational(), q as usize).prop_map(move |v| {
        PeriodicFunction::from_fn(q, |a| {
            if lseries_core::arith::gcd(a, q) == 1 { v[a as usize - 1].clone() } else { Rational::from_integer(0.into()) }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_reconstructs(g in (1u64..=24).prop_flat_map(unit_supported)) {
        let parts = character_decompose(&g).unwrap();
        prop_assert_eq!(character_reconstruct(g.modulus(), &parts).unwrap(), g);
    }

    #[test]
    fn dedekind_random_rational_maps(
        qi in 0usize..5,
        vals in proptest::collection::vec(-20i64..=20, 12),
    ) {
        let q = [3u64, 4, 5, 8, 12][qi];
        let rep = dedekind_determinant(q, 128, |a| {
            ComplexBall::from_rational(&Rational::new(vals[a as usize % 12].into(), 7.into()), 128)
        })
        .unwrap();
        prop_assert!(rep.agree());
    }
}
