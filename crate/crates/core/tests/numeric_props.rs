mod common;

use common::zero_mean;
use lseries_core::numeric::{digamma, euler_gamma, l_one, Ball, Method};
use lseries_core::Rational;
use proptest::prelude::*;

#[test]
fn euler_gamma_refines() {
    let g64 = euler_gamma(64);
    assert!(g64.rad_below_pow2(-64));
    assert!(g64.mid_decimal(25).starts_with("0.577215664901532860"));
    assert!(euler_gamma(256).mid_decimal(50).starts_with("0.5772156649015328606065120900824024310421"));
    let mut prev = g64;
    for p in [128, 256, 512] {
        let g = euler_gamma(p);
        assert!(prev.contains(&g));
        assert!(g.rad_rational() <= prev.rad_rational());
        prev = g;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn three_routes_overlap(f in zero_mean(1..=36)) {
        let a = l_one(&f, 128, Method::Digamma).unwrap().value;
        let b = l_one(&f, 128, Method::FourierLog).unwrap().value;
        let c = l_one(&f, 128, Method::Hurwitz).unwrap().value;
        prop_assert!(a.overlaps(&b) && b.overlaps(&c) && a.overlaps(&c));
    }

    #[test]
    fn refinement_stays_inside(f in zero_mean(1..=24)) {
        let lo = l_one(&f, 96, Method::Digamma).unwrap().value;
        let hi = l_one(&f, 192, Method::Digamma).unwrap().value;
        prop_assert!(lo.contains(&hi));
    }

    #[test]
    fn digamma_recurrence(n in 1i64..1000, d in 2i64..1000) {
        prop_assume!(n < d);
        let x = Rational::new(n.into(), d.into());
        let lhs = digamma(&(&x + Rational::from_integer(1.into())), 128).unwrap();
        let rhs = &digamma(&x, 128).unwrap() + &Ball::from_rational(&x.recip(), 200);
        prop_assert!(lhs.overlaps(&rhs));
    }

    #[test]
    fn l1_is_linear(f in zero_mean(2..=20), g_seed in zero_mean(2..=20), a in -5i64..=5, b in 1i64..=5) {
        prop_assume!(f.modulus() == g_seed.modulus());
        let g = g_seed;
        let (ar, br) = (Rational::from_integer(a.into()), Rational::new(1.into(), b.into()));
        let combo = &f.scale(&ar) + &g.scale(&br);
        let lhs = l_one(&combo, 128, Method::Digamma).unwrap().value;
        let lf = l_one(&f, 128, Method::Digamma).unwrap().value;
        let lg = l_one(&g, 128, Method::Digamma).unwrap().value;
        let rhs = &lf.mul_rational(&ar) + &lg.mul_rational(&br);
        prop_assert!(lhs.overlaps(&rhs));
    }
}
