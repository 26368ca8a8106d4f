//! Hurwitz zeta `ζ(s, x) = Σ_{n≥0} (n + x)^{−s}` by Euler–Maclaurin summation.
//!
//! With `a = N + x`,
//!
//! `ζ(s,x) = Σ_{n<N} (n+x)^{−s} + a^{1−s}/(s−1) + a^{−s}/2
//!          + Σ_{k=1}^{M} B_{2k}/(2k)! · (s)_{2k−1} · a^{1−s−2k} + R`,
//!
//! `|R| ≤ |B_{2M}|/(2M)! · |(s)_{2M}| · a^{1−s−2M} / (s + 2M − 1)`, valid for
//! real `s` with `s + 2M − 1 > 0`. Here `(s)_j` is the rising factorial.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::Ball;
use super::bernoulli::bernoulli_even;
use super::digamma::{log2_bernoulli_abs, GUARD_BITS};
use super::elementary::{ln_rational, pow_neg};
use crate::error::{Error, Result};
use crate::Rational;

fn rising(s: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| {
        acc * (s + Rational::from_integer(i.into()))
    })
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(num_bigint::BigInt::one(), |acc, i| acc * i))
}

/// Chooses `(N, M)` so that the remainder bound falls below `2^−wp`.
fn em_params(s: f64, wp: u32) -> (u64, usize) {
    let mut n = (0.25 * wp as f64).ceil() as u64 + 8;
    loop {
        let ln = (n as f64).log2();
        for m in 1..(4 * wp as usize + 8) {
            let two_m = 2 * m;
            if s + two_m as f64 - 1.0 <= 0.0 {
                continue;
            }
            let log_fact: f64 = (1..=two_m).map(|i| (i as f64).log2()).sum();
            let log_rising: f64 = (0..two_m).map(|i| (s + i as f64).abs().max(1e-300).log2()).sum();
            let bound = log2_bernoulli_abs(m) - log_fact + log_rising
                + (1.0 - s.floor() - two_m as f64) * ln
                - (s + two_m as f64 - 1.0).log2();
            if bound < -(wp as f64) - 2.0 {
                return (n, m);
            }
        }
        n *= 2;
    }
}

/// `ζ(s, x)` for rational `s ≠ 1` and rational `x > 0`.
pub fn hurwitz_zeta(s: &Rational, x: &Rational, prec: u32) -> Result<Ball> {
    if s.is_one() {
        return Err(Error::InvalidArgument("ζ(s,x) has a pole at s = 1".into()));
    }
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("ζ(s,x) needs x > 0, got {x}")));
    }
    let wp = prec + GUARD_BITS;
    let s_f = s.to_f64().unwrap_or(f64::NAN);
    let (n, m) = em_params(s_f, wp);
    let mut sum = Ball::zero(wp);
    for k in 0..n {
        sum = &sum + &pow_neg(&(x + Rational::from_integer(k.into())), s, wp)?;
    }
    let a = x + Rational::from_integer(n.into());
    let a_neg_s = pow_neg(&a, s, wp)?;
    let s_minus_one = s - Rational::one();

    // a^{1−s}/(s−1) + a^{−s}/2 + Σ_k c_k a^{−s}, every factor but a^{−s} exact
    let mut coeff = &a / &s_minus_one + Rational::new(1.into(), 2.into());
    let mut a_pow = a.recip(); // a^{1−2k}
    let a_inv2 = (&a * &a).recip();
    for k in 1..=m {
        let c = bernoulli_even(k) / factorial(2 * k) * rising(s, 2 * k - 1) * &a_pow;
        coeff += c;
        a_pow *= &a_inv2;
    }
    let mut out = &sum + &a_neg_s.mul_rational(&coeff);
    // a ≥ 1, so a^{1−s−2M} ≤ a^{1−⌊s⌋−2M}, an exact rational
    let floor_s = s.floor().to_integer();
    let exponent: num_bigint::BigInt = num_bigint::BigInt::from(2 * m) - 1 + floor_s;
    let exponent: u32 = exponent
        .try_into()
        .map_err(|_| Error::InvalidArgument("s out of range for the remainder bound".into()))?;
    let a_bound = num_traits::pow::Pow::pow(&a.recip(), exponent);
    let rem = bernoulli_even(m).abs() / factorial(2 * m) * rising(s, 2 * m).abs() * a_bound
        / (s + Rational::from_integer((2 * m).into()) - Rational::one());
    out.add_error(&rem);
    Ok(out)
}

/// `lim_{s→1} (ζ(s,x) − 1/(s−1))`, which equals `−ψ(x)`.
pub fn hurwitz_constant_term(x: &Rational, prec: u32) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("needs x > 0, got {x}")));
    }
    let wp = prec + GUARD_BITS;
    let (n, m) = em_params(1.0, wp);
    let (xn, xd) = (x.numer(), x.denom());
    let mut acc = num_bigint::BigInt::zero();
    for k in 0..n {
        acc += (xd << wp) / (xn + xd * num_bigint::BigInt::from(k));
    }
    let sum = Ball::from_parts(acc, n.into(), wp);
    let a = x + Rational::from_integer(n.into());
    let a_inv2 = (&a * &a).recip();
    let mut coeff = (&a * Rational::from_integer(2.into())).recip();
    let mut a_pow = a_inv2.clone();
    for k in 1..=m {
        coeff += bernoulli_even(k) / Rational::from_integer((2 * k).into()) * &a_pow;
        a_pow *= &a_inv2;
    }
    let mut out = &(&sum - &ln_rational(&a, wp)?) + &Ball::from_rational(&coeff, wp);
    let rem = bernoulli_even(m).abs() / Rational::from_integer((2 * m).into())
        * num_traits::pow::Pow::pow(&a_inv2, m as u32);
    out.add_error(&rem);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::digamma::digamma;
    use crate::numeric::elementary::pi;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// Σ_{n<K} (n+x)^{−s} plus the integral tail enclosure
    /// `[∫_K^∞, ∫_{K−1}^∞] (t+x)^{−s} dt` for integer `s ≥ 2`.
    fn direct_sum(s: u32, x: &Rational, terms: u64, prec: u32) -> Ball {
        let mut acc = Rational::zero();
        for n in 0..terms {
            let base = x + Rational::from_integer(n.into());
            acc += num_traits::pow::Pow::pow(&base.recip(), s);
        }
        let sm1 = Rational::from_integer((s - 1).into());
        let tail = |start: u64| {
            let a = x + Rational::from_integer(start.into());
            num_traits::pow::Pow::pow(&a.recip(), s - 1) / &sm1
        };
        let lo = &acc + tail(terms);
        let hi = &acc + tail(terms - 1);
        Ball::from_interval(&lo, &hi, prec)
    }

    #[test]
    fn zeta_two_values() {
        let prec = 140;
        let p = pi(prec + 40);
        let z = hurwitz_zeta(&r(2, 1), &r(1, 1), prec).unwrap();
        let expected = p.sqr().div_int(6);
        assert!((&z - &expected).abs_below_pow2(-133));
        let z = hurwitz_zeta(&r(2, 1), &r(1, 2), prec).unwrap();
        assert!((&z - &p.sqr().div_int(2)).abs_below_pow2(-133));
        assert!(direct_sum(2, &r(1, 2), 400, 80).contains(&z.with_prec(80)));
    }

    #[test]
    fn riemann_three_against_direct_sum() {
        let z = hurwitz_zeta(&r(3, 1), &r(1, 1), 96).unwrap();
        let oracle = direct_sum(3, &r(1, 1), 300, 96);
        assert!(oracle.contains(&z));
        assert!(z.rad_below_pow2(-96));
    }

    #[test]
    fn non_integer_exponents() {
        // ζ(s,1/2) = (2^s − 1) ζ(s,1)
        for s in [r(1, 2), r(3, 2), r(5, 3)] {
            let half = hurwitz_zeta(&s, &r(1, 2), 96).unwrap();
            let one = hurwitz_zeta(&s, &r(1, 1), 96).unwrap();
            let two_s = pow_neg(&r(2, 1), &(-&s), 140).unwrap();
            let rhs = &(&two_s - &Ball::from_int(1, 140)) * &one;
            assert!((&half - &rhs).abs_below_pow2(-80), "s = {s}");
        }
        // ζ(1/2) ≈ −1.4603545088095868
        let z = hurwitz_zeta(&r(1, 2), &r(1, 1), 64).unwrap();
        assert!((z.mid_f64() + 1.460_354_508_809_586_8).abs() < 1e-14);
    }

    #[test]
    fn constant_term_is_minus_digamma() {
        for x in [r(1, 3), r(3, 4), r(1, 1), r(5, 36)] {
            let c = hurwitz_constant_term(&x, 128).unwrap();
            let d = digamma(&x, 128).unwrap();
            assert!((&c + &d).contains_zero());
            assert!(c.rad_below_pow2(-128));
        }
    }

    #[test]
    fn pole_is_rejected() {
        assert!(hurwitz_zeta(&r(1, 1), &r(1, 2), 64).is_err());
    }
}
