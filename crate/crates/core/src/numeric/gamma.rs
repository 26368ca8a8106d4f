//! Euler's constant.

use std::sync::Mutex;

use num_bigint::BigInt;

use super::ball::Ball;
use super::elementary::ln_int;
use crate::Rational;

static CACHE: Mutex<Option<Ball>> = Mutex::new(None);

/// `γ = −ψ(1)`, with radius below `2^−prec`.
pub fn euler_gamma(prec: u32) -> Ball {
    let mut guard = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(b) = guard.as_ref() {
        if b.prec() >= prec + 8 {
            return b.with_prec(prec + 8);
        }
    }
    let g = -super::digamma::digamma_one(prec + 8);
    *guard = Some(g.clone());
    g
}

/// Brent–McMillan: with `U = Σ_k (n^k/k!)² (H_k − ln n)` and
/// `V = Σ_k (n^k/k!)²`, `|γ − U/V| < π e^{−4n}`.
pub fn euler_gamma_brent_mcmillan(prec: u32) -> Ball {
    let target = prec + 4;
    let n = ((target as f64 + 4.0) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 1;
    // (n^k/k!)² peaks near e^{2n}; carry those bits plus slack
    let mag_bits = (2.0 * n as f64 * std::f64::consts::LOG2_E).ceil() as u32 + 8;
    let wp = target + mag_bits + 16;
    let ln_n = ln_int(n, wp).expect("n > 0");
    let nn = BigInt::from(n);

    let mut u = Ball::from_int(1, wp); // n^k/k!
    let mut harmonic = Ball::zero(wp);
    let mut big_u = -&ln_n;
    let mut big_v = Ball::from_int(1, wp);
    let kmax = (4.971 * n as f64).ceil() as u64 + 10;
    for k in 1..=kmax {
        u = u.mul_int(nn.clone()).div_int(k);
        harmonic = &harmonic + &Ball::from_rational(&Rational::new(1.into(), k.into()), wp);
        let w = u.sqr();
        big_u = &big_u + &(&w * &(&harmonic - &ln_n));
        big_v = &big_v + &w;
    }
    // omitted terms: ratio (n/(k+1))² ≤ 1/24, and |H_k − ln n| ≤ ln k + 1 < k
    let last = u.sqr().abs_upper();
    let tail_v = &last * Rational::new(1.into(), 23.into());
    let tail_u = &tail_v * Rational::from_integer((kmax * 2).into());
    big_u.add_error(&tail_u);
    big_v.add_error(&tail_v);
    let mut g = big_u.checked_div(&big_v).expect("V ≥ 1");
    // π e^{−4n} < 4·2^{−4n·log2 e}
    let e_bits = (4.0 * n as f64 * std::f64::consts::LOG2_E).floor() as i64 - 2;
    g.add_error(&Rational::new(1.into(), BigInt::from(1) << e_bits as u32));
    g.with_prec(prec + 2)
}
