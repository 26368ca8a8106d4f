//! The digamma function at positive rational arguments.
//!
//! `ψ(x) = ψ(x + N) − Σ_{k<N} 1/(x + k)`, and for `y = x + N` large
//!
//! `ψ(y) = ln y − 1/(2y) − Σ_{k=1}^{K} B_{2k} / (2k·y^{2k}) + R_K`,
//!
//! where for real `y > 0` the remainder is bounded by the first omitted term,
//! `|R_K| ≤ |B_{2K+2}| / ((2K+2)·y^{2K+2})`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::Ball;
use super::bernoulli::bernoulli_even;
use super::elementary::ln_rational;
use super::gamma::euler_gamma_brent_mcmillan;
use crate::error::{Error, Result};
use crate::Rational;

/// Extra bits carried internally so that results meet `radius < 2^−prec`.
pub const GUARD_BITS: u32 = 32;

/// `log2 |B_{2k}|` estimate from `|B_{2k}| ≈ 2(2k)!/(2π)^{2k}`.
pub(crate) fn log2_bernoulli_abs(k: usize) -> f64 {
    let two_k = 2 * k;
    let log2_fact: f64 = (1..=two_k).map(|i| (i as f64).log2()).sum();
    1.0 + log2_fact - two_k as f64 * (2.0 * std::f64::consts::PI).log2()
}

/// Shift threshold and number of asymptotic terms for working precision `wp`.
fn asymptotic_params(wp: u32) -> (u64, usize) {
    let y_min = (0.17 * wp as f64).ceil() as u64 + 4;
    let ly = (y_min as f64).log2();
    let mut k = 1usize;
    loop {
        let next = k + 1;
        let bound = log2_bernoulli_abs(next) - ((2 * next) as f64).log2() - (2 * next) as f64 * ly;
        if bound < -(wp as f64) - 2.0 {
            return (y_min, k);
        }
        k += 1;
    }
}

type CoeffTable = Arc<Vec<Ball>>;

static COEFFS: OnceLock<Mutex<HashMap<(u32, usize), CoeffTable>>> = OnceLock::new();

/// Balls for `B_{2k}/(2k)`, `k = 1..=count`, at precision `wp`.
fn asymptotic_coefficients(wp: u32, count: usize) -> CoeffTable {
    let cache = COEFFS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry((wp, count))
        .or_insert_with(|| {
            Arc::new(
                (1..=count)
                    .map(|k| {
                        let c = bernoulli_even(k) / Rational::from_integer((2 * k).into());
                        Ball::from_rational(&c, wp)
                    })
                    .collect(),
            )
        })
        .clone()
}

/// `ψ(y)` by the asymptotic series, valid when `y` is at least the shift threshold.
fn digamma_asymptotic(y: &Rational, wp: u32, terms: usize) -> Result<Ball> {
    let coeffs = asymptotic_coefficients(wp, terms);
    let z = Ball::from_rational(&(y * y).recip(), wp);
    let mut acc = coeffs[terms - 1].clone();
    for c in coeffs[..terms - 1].iter().rev() {
        acc = &(&acc * &z) + c;
    }
    let series = &acc * &z;
    let half_inv = Ball::from_rational(&(y * Rational::from_integer(2.into())).recip(), wp);
    let mut out = &(&ln_rational(y, wp)? - &half_inv) - &series;
    let next = terms + 1;
    let rem = bernoulli_even(next).abs()
        / (Rational::from_integer((2 * next).into())
            * num_traits::pow::Pow::pow(y, (2 * next) as u32));
    out.add_error(&rem);
    Ok(out)
}

/// `ψ(x)` for rational `x > 0`, with radius below `2^−prec`.
pub fn digamma(x: &Rational, prec: u32) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "digamma needs a positive argument, got {x}"
        )));
    }
    let wp = prec + GUARD_BITS;
    let (y_min, terms) = asymptotic_params(wp);
    let y_min = Rational::from_integer(y_min.into());
    let shift: u64 = if x >= &y_min {
        0
    } else {
        (&y_min - x).ceil().to_integer().try_into().unwrap_or(0)
    };
    let y = x + Rational::from_integer(shift.into());
    let mut out = digamma_asymptotic(&y, wp, terms)?;
    if shift > 0 {
        // Σ_{k<N} d/(n + k d) in fixed point, one ulp per term
        let (n, d) = (x.numer(), x.denom());
        let mut sum = BigInt::zero();
        for k in 0..shift {
            sum += (d << wp) / (n + d * BigInt::from(k));
        }
        out = &out - &Ball::from_parts(sum, BigInt::from(shift), wp);
    }
    Ok(out)
}

/// Slow oracle from `ψ(x) = −γ − 1/x + Σ_{n≥1} x/(n(n+x))`, truncated after
/// `terms` terms with the tail enclosed in `[0, x/terms]`. The Euler constant
/// comes from the Brent–McMillan series, so nothing here shares code with
/// [`digamma`].
pub fn digamma_by_series(x: &Rational, prec: u32, terms: u64) -> Result<Ball> {
    if !x.is_positive() || terms == 0 {
        return Err(Error::InvalidArgument("positive argument and term count required".into()));
    }
    let wp = prec + 16;
    let gamma = euler_gamma_brent_mcmillan(wp);
    let mut out = -&gamma - Ball::from_rational(&x.recip(), wp);
    let (xn, xd) = (x.numer(), x.denom());
    let mut sum = BigInt::zero();
    for n in 1..=terms {
        let nn = BigInt::from(n);
        // x/(n(n+x)) = xn / (n (n xd + xn))
        sum += (xn << wp) / (&nn * (&nn * xd + xn));
    }
    out = &out + &Ball::from_parts(sum, BigInt::from(terms), wp);
    let tail_hi = x / Rational::from_integer(terms.into());
    let half = &tail_hi / Rational::from_integer(2.into());
    out = &out + &Ball::from_rational(&half, wp);
    out.add_error(&half);
    Ok(out)
}

/// `ψ(a/q)` for `a = 1..=q`.
pub fn digamma_fractions(q: u64, prec: u32, exec: crate::par::Execution) -> Result<Vec<Ball>> {
    crate::par::map_range(exec, 1..q + 1, |a| {
        digamma(&Rational::new(a.into(), q.into()), prec)
    })
    .into_iter()
    .collect()
}

/// `ψ(1) = −γ`.
pub fn digamma_one(prec: u32) -> Ball {
    digamma(&Rational::one(), prec).expect("1 is a valid argument")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::elementary::{ln2, pi};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn radius_meets_requested_precision() {
        for prec in [32, 64, 128, 256] {
            let v = digamma(&r(1, 3), prec).unwrap();
            assert!(v.rad_below_pow2(-(prec as i64)), "prec {prec}: {}", v.rad_log2());
        }
    }

    #[test]
    fn classical_values() {
        let prec = 200;
        let g = euler_gamma_brent_mcmillan(prec + 20);
        let l2 = ln2(prec + 20);
        let half = digamma(&r(1, 2), prec).unwrap();
        let expected = -&g - l2.mul_int(2);
        assert!(half.overlaps(&expected));
        assert!((&half - &expected).abs_below_pow2(-170));

        let q1 = digamma(&r(1, 4), prec).unwrap();
        let q3 = digamma(&r(3, 4), prec).unwrap();
        let sum = &q1 + &q3;
        assert!((&sum - &(-g.mul_int(2) - l2.mul_int(6))).abs_below_pow2(-170));
        // reflection ψ(1−x) − ψ(x) = π cot(πx); cot(π/4) = 1
        assert!((&(&q3 - &q1) - &pi(prec + 20)).abs_below_pow2(-170));
    }

    #[test]
    fn recurrence_and_duplication() {
        let prec = 160;
        for (n, d) in [(1, 7), (2, 5), (5, 6), (1, 1)] {
            let x = r(n, d);
            let lhs = digamma(&(&x + Rational::one()), prec).unwrap();
            let rhs = &digamma(&x, prec).unwrap() + &Ball::from_rational(&x.recip(), prec + 32);
            assert!((&lhs - &rhs).contains_zero());
            // ψ(2x) = ½ψ(x) + ½ψ(x+½) + ln 2
            let dup = &(&digamma(&x, prec).unwrap() + &digamma(&(&x + r(1, 2)), prec).unwrap())
                .mul_rational(&r(1, 2))
                + &ln2(prec + 32);
            let two_x = digamma(&(&x * Rational::from_integer(2.into())), prec).unwrap();
            assert!((&two_x - &dup).abs_below_pow2(-150));
        }
    }

    #[test]
    fn series_oracle_agrees() {
        let x = r(1, 3);
        let slow = digamma_by_series(&x, 64, 20_000).unwrap();
        let fast = digamma(&x, 64).unwrap();
        assert!(slow.contains(&fast));
        assert!(slow.rad_f64() < 1e-4);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(digamma(&Rational::zero(), 64).is_err());
        assert!(digamma(&r(-1, 2), 64).is_err());
    }
}
