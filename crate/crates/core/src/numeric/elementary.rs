//! Certified elementary constants and functions on balls.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::Ball;
use super::complex::ComplexBall;
use crate::error::{Error, Result};
use crate::Rational;

/// `Σ (±1)^k t^(2k+1)/(2k+1)` for `t = u/v`, `|t| ≤ 1/2`, at fixed-point precision `prec`.
///
/// The running power carries at most 4/3 ulp of error and each quotient adds
/// one more, so two ulps per term plus two for the tail bound the result.
fn odd_power_series(u: &BigInt, v: &BigInt, alternating: bool, prec: u32) -> Ball {
    debug_assert!(u.abs() * 2u32 <= v.abs());
    let u2 = u * u;
    let v2 = v * v;
    let mut power = (u << prec) / v;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if alternating && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        terms += 1;
        power = (power * &u2) / &v2;
        k += 1;
    }
    Ball::from_parts(sum, BigInt::from(2 * terms + 2), prec)
}

fn atanh_frac(u: i64, v: i64, prec: u32) -> Ball {
    odd_power_series(&BigInt::from(u), &BigInt::from(v), false, prec)
}

fn atan_frac(u: i64, v: i64, prec: u32) -> Ball {
    odd_power_series(&BigInt::from(u), &BigInt::from(v), true, prec)
}

struct ConstCache {
    best: Mutex<Option<Ball>>,
}

impl ConstCache {
    const fn new() -> Self {
        Self {
            best: Mutex::new(None),
        }
    }

    fn get(&self, prec: u32, compute: impl Fn(u32) -> Ball) -> Ball {
        let mut guard = self.best.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = guard.as_ref() {
            if b.prec() >= prec {
                return b.with_prec(prec);
            }
        }
        let target = prec.max(guard.as_ref().map_or(0, |b| b.prec() * 2)).max(256);
        let value = compute(target);
        let out = value.with_prec(prec);
        *guard = Some(value);
        out
    }
}

static LN2: ConstCache = ConstCache::new();
static PI: ConstCache = ConstCache::new();

/// `ln 2 = 18 atanh(1/26) − 2 atanh(1/4801) + 8 atanh(1/8749)`.
pub fn ln2(prec: u32) -> Ball {
    LN2.get(prec, |p| {
        let wp = p + 16;
        let s = &(&atanh_frac(1, 26, wp).mul_int(18) - &atanh_frac(1, 4801, wp).mul_int(2))
            + &atanh_frac(1, 8749, wp).mul_int(8);
        s.with_prec(p)
    })
}

/// Machin: `π = 16 atan(1/5) − 4 atan(1/239)`.
pub fn pi(prec: u32) -> Ball {
    PI.get(prec, |p| {
        let wp = p + 16;
        (&atan_frac(1, 5, wp).mul_int(16) - &atan_frac(1, 239, wp).mul_int(4)).with_prec(p)
    })
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(x: &Rational, prec: u32) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("logarithm of nonpositive {x}")));
    }
    if x.is_one() {
        return Ok(Ball::zero(prec));
    }
    let mut k = x.numer().bits() as i64 - x.denom().bits() as i64;
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    if k > 0 {
        d <<= k as u32;
    } else {
        n <<= (-k) as u32;
    }
    // now n/d ∈ (1/2, 2); pull into [2/3, 4/3]
    if &n * 3u32 > &d * 4u32 {
        d <<= 1;
        k += 1;
    } else if &n * 3u32 < &d * 2u32 {
        n <<= 1;
        k -= 1;
    }
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    let wp = prec + 8 + kbits;
    let series = odd_power_series(&(&n - &d), &(&n + &d), false, wp).mul_int(2);
    let total = if k == 0 {
        series
    } else {
        &series + &ln2(wp).mul_int(k)
    };
    Ok(total.with_prec(prec))
}

pub fn ln_int(n: u64, prec: u32) -> Result<Ball> {
    ln_rational(&Rational::from_integer(n.into()), prec)
}

/// Natural logarithm of a ball lying strictly right of zero.
pub fn ln(x: &Ball) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(
            "logarithm of a ball not separated from zero on the right".into(),
        ));
    }
    let prec = x.prec();
    let mut out = ln_rational(&x.mid_rational(), prec + 4)?;
    // |ln' | ≤ 1/lower on the ball
    let lower = x.mid_raw() - x.rad_raw();
    let err = Rational::new(x.rad_raw().clone(), lower);
    out.add_error(&err);
    Ok(out.with_prec(prec))
}

/// `e^x`. Requires `|x| < 2^40`.
pub fn exp(x: &Ball) -> Result<Ball> {
    let prec = x.prec();
    let approx = x.mid_f64();
    if !approx.is_finite() || approx.abs() > 2f64.powi(40) {
        return Err(Error::InvalidArgument("exp argument out of range".into()));
    }
    let k = (approx / std::f64::consts::LN_2).round() as i64;
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    let wp = prec + 16 + kbits + k.max(0) as u32;
    let r = &x.with_prec(wp) - &ln2(wp).mul_int(k);
    let mut sum = Ball::from_int(1, wp);
    let mut term = Ball::from_int(1, wp);
    let mut n = 1i64;
    loop {
        term = (&term * &r).div_int(n);
        sum = &sum + &term;
        if term.abs_below_pow2(-(wp as i64) + 4) {
            break;
        }
        n += 1;
    }
    // remaining terms are dominated by a geometric series of ratio ≤ 1/2
    sum.add_error(&(term.abs_upper() * Rational::from_integer(2.into())));
    Ok(sum.mul_pow2(k).with_prec(prec))
}

/// `(sin x, cos x)`.
pub fn sin_cos(x: &Ball) -> (Ball, Ball) {
    let prec = x.prec();
    let two_pi_approx = 2.0 * std::f64::consts::PI;
    let k = (x.mid_f64() / two_pi_approx).round() as i64;
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    let wp = prec + 12 + kbits;
    let r = &x.with_prec(wp) - &pi(wp).mul_int(2 * k);
    let r2 = r.sqr();
    let two = Rational::from_integer(2.into());

    let mut sin = r.clone();
    let mut term = r.clone();
    let mut n = 1i64;
    loop {
        term = -(&term * &r2).div_int((2 * n) * (2 * n + 1));
        sin = &sin + &term;
        if term.abs_below_pow2(-(wp as i64) + 4) {
            break;
        }
        n += 1;
    }
    sin.add_error(&(term.abs_upper() * &two));

    let mut cos = Ball::from_int(1, wp);
    let mut term = Ball::from_int(1, wp);
    let mut n = 1i64;
    loop {
        term = -(&term * &r2).div_int((2 * n - 1) * (2 * n));
        cos = &cos + &term;
        if term.abs_below_pow2(-(wp as i64) + 4) {
            break;
        }
        n += 1;
    }
    cos.add_error(&(term.abs_upper() * &two));
    (sin.with_prec(prec), cos.with_prec(prec))
}

/// `(sin πt, cos πt)` for rational `t`.
pub fn sin_cos_pi(t: &Rational, prec: u32) -> (Ball, Ball) {
    let wp = prec + 8;
    let x = pi(wp).mul_rational(t);
    let (s, c) = sin_cos(&x);
    (s.with_prec(prec), c.with_prec(prec))
}

/// `e^{2πi·k/m}`.
pub fn root_of_unity(k: i64, m: u64, prec: u32) -> ComplexBall {
    let m = m as i64;
    let k = k.rem_euclid(m);
    if k == 0 {
        return ComplexBall::one(prec);
    }
    if 2 * k == m {
        return ComplexBall::from_real(Ball::from_int(-1, prec));
    }
    let (s, c) = sin_cos_pi(&Rational::new((2 * k).into(), m.into()), prec);
    ComplexBall::new(c, s)
}

/// `x^(−s)` for positive rational `x` and rational `s`.
pub fn pow_neg(x: &Rational, s: &Rational, prec: u32) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument("power of nonpositive base".into()));
    }
    if s.is_integer() {
        let e = s.numer().to_i64().ok_or_else(|| {
            Error::InvalidArgument("exponent too large".into())
        })?;
        let base = if e >= 0 { x.recip() } else { x.clone() };
        let p = num_traits::pow::Pow::pow(&base, e.unsigned_abs());
        return Ok(Ball::from_rational(&p, prec));
    }
    // magnitude estimate decides the extra working bits for exp's scaling
    let approx = -s.to_f64().unwrap_or(0.0) * x.to_f64().unwrap_or(1.0).ln();
    let extra = if approx > 0.0 { (approx / std::f64::consts::LN_2) as u32 + 8 } else { 8 };
    let wp = prec + extra;
    let l = ln_rational(x, wp)?;
    Ok(exp(&l.mul_rational(&(-s)))?.with_prec(prec))
}
