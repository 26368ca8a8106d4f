//! Deterministic random test functions.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::gcd;
use crate::error::Result;
use crate::okada::kernel_basis;
use crate::{PeriodicFunction, Rational};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, occasionally `n/d` with `d ≤ max_den`.
pub fn random_rational(rng: &mut impl Rng, max_abs: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(-max_abs..=max_abs);
    let d = if max_den > 1 && rng.gen_bool(0.25) { rng.gen_range(2..=max_den) } else { 1 };
    Rational::new(n.into(), d.into())
}

/// Random `f` with `Σ f(a) = 0`: all values random except one, which balances the sum.
pub fn random_zero_mean(rng: &mut impl Rng, q: u64, max_abs: i64, max_den: i64) -> PeriodicFunction {
    let mut values: Vec<Rational> = (0..q).map(|_| random_rational(rng, max_abs, max_den)).collect();
    let k = rng.gen_range(0..q as usize);
    values[k] = Rational::zero();
    let s: Rational = values.iter().sum();
    values[k] = -s;
    PeriodicFunction::new(q, values).expect("length q")
}

/// Random combination of the given functions with small integer weights, never
/// all zero when the basis is nonempty.
pub fn random_combination(rng: &mut impl Rng, q: u64, basis: &[PeriodicFunction], max_coeff: i64) -> PeriodicFunction {
    loop {
        let mut acc = PeriodicFunction::zero(q);
        for b in basis {
            let c = rng.gen_range(-max_coeff..=max_coeff);
            if c != 0 {
                acc = &acc + &b.scale(&Rational::from_integer(BigInt::from(c)));
            }
        }
        if !acc.is_zero() || basis.is_empty() {
            return acc;
        }
    }
}

/// Nonzero zero-mean `f` supported on the units and on `q`.
pub fn random_unit_supported(rng: &mut impl Rng, q: u64, max_abs: i64, max_den: i64) -> PeriodicFunction {
    let support: Vec<u64> = (1..=q).filter(|&a| gcd(a, q) == 1 || a == q).collect();
    loop {
        let mut values = vec![Rational::zero(); q as usize];
        for &a in &support {
            values[a as usize - 1] = random_rational(rng, max_abs, max_den);
        }
        let &fix = support.choose(rng).expect("q is in the support");
        values[fix as usize - 1] = Rational::zero();
        let s: Rational = values.iter().sum();
        values[fix as usize - 1] = -s;
        let f = PeriodicFunction::new(q, values).expect("length q");
        if !f.is_zero() {
            return f;
        }
    }
}

/// `count` functions modulo `q`: every fourth one lies in the vanishing space
/// (when it is nonzero), every fourth is such an element plus a small
/// perturbation, and the rest are generic zero-mean functions.
pub fn mixed_corpus(q: u64, count: usize, seed: u64) -> Result<Vec<PeriodicFunction>> {
    let mut rng = rng(seed ^ q.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let basis = kernel_basis(q)?;
    Ok((0..count)
        .map(|i| match i % 4 {
            0 if !basis.is_empty() => random_combination(&mut rng, q, &basis, 3),
            1 if !basis.is_empty() => {
                let k = random_combination(&mut rng, q, &basis, 3);
                let mut v = k.values().to_vec();
                let (x, y) = (rng.gen_range(0..q as usize), rng.gen_range(0..q as usize));
                v[x] += Rational::from_integer(1.into());
                v[y] -= Rational::from_integer(1.into());
                PeriodicFunction::new(q, v).expect("length q")
            }
            _ => random_zero_mean(&mut rng, q, 9, 4),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_zero_mean() {
        let a = mixed_corpus(12, 20, 7).unwrap();
        let b = mixed_corpus(12, 20, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(PeriodicFunction::is_zero_mean));
        let mut r = rng(1);
        for _ in 0..50 {
            let f = random_unit_supported(&mut r, 8, 5, 3);
            assert!(f.is_zero_mean() && !f.is_zero());
            assert!(f.values()[1].is_zero() && f.values()[3].is_zero());
        }
    }
}
