//! Evaluators for `L(1,f)` and `L(s,f)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::Ball;
use super::complex::ComplexBall;
use super::digamma::{digamma_fractions, GUARD_BITS};
use super::elementary::{ln, pi, pow_neg, root_of_unity, sin_cos_pi};
use super::hurwitz::{hurwitz_constant_term, hurwitz_zeta};
use crate::cyclotomic::{fourier_transform, CyclotomicElement};
use crate::error::{Error, Result};
use crate::par::{map_range, Execution};
use crate::{PeriodicFunction, Rational};

/// Evaluation route for `L(1,f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Digamma,
    Hurwitz,
    FourierLog,
    PartialSum,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Digamma,
        Method::Hurwitz,
        Method::FourierLog,
        Method::PartialSum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Digamma => "digamma",
            Method::Hurwitz => "hurwitz",
            Method::FourierLog => "fourier_log",
            Method::PartialSum => "partial_sum",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub value: Ball,
    pub method: Method,
    pub precision_bits: u32,
    pub terms_used: u64,
}

type Table<T> = Mutex<HashMap<(u64, u32), Arc<Vec<T>>>>;

fn cached<T>(
    cache: &'static OnceLock<Table<T>>,
    q: u64,
    prec: u32,
    build: impl FnOnce() -> Result<Vec<T>>,
) -> Result<Arc<Vec<T>>> {
    let cache = cache.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(q, prec)) {
        return Ok(t.clone());
    }
    let t = Arc::new(build()?);
    Ok(cache.lock().unwrap().entry((q, prec)).or_insert(t).clone())
}

/// `ψ(a/q)` for `a = 1..=q`, shared across calls.
pub fn digamma_table(q: u64, prec: u32) -> Result<Arc<Vec<Ball>>> {
    static CACHE: OnceLock<Table<Ball>> = OnceLock::new();
    cached(&CACHE, q, prec, || digamma_fractions(q, prec, Execution::default()))
}

/// Regularized `ζ(s, a/q)` constant terms for `a = 1..=q`.
pub fn hurwitz_constant_table(q: u64, prec: u32) -> Result<Arc<Vec<Ball>>> {
    static CACHE: OnceLock<Table<Ball>> = OnceLock::new();
    cached(&CACHE, q, prec, || {
        map_range(Execution::default(), 1..q + 1, |a| {
            hurwitz_constant_term(&Rational::new(a.into(), q.into()), prec)
        })
        .into_iter()
        .collect()
    })
}

/// Principal `Log(1 − e^{2πib/q}) = ln(2 sin(πb/q)) + i(πb/q − π/2)`.
pub fn log_one_minus_zeta(b: i64, q: u64, prec: u32) -> Result<ComplexBall> {
    if q == 0 {
        return Err(Error::ZeroArgument);
    }
    let b = b.rem_euclid(q as i64);
    if b == 0 {
        return Err(Error::InvalidArgument("Log(1 − ζ^b) with ζ^b = 1".into()));
    }
    let wp = prec + 16;
    let t = Rational::new(b.into(), (q as i64).into());
    let (s, _) = sin_cos_pi(&t, wp);
    let re = ln(&s.mul_int(2))?;
    let im = pi(wp).mul_rational(&(t - Rational::new(1.into(), 2.into())));
    Ok(ComplexBall::new(re.with_prec(prec), im.with_prec(prec)))
}

/// `Log(1 − ζ^b)` for `b = 1..q−1`.
pub fn log_one_minus_zeta_table(q: u64, prec: u32) -> Result<Arc<Vec<ComplexBall>>> {
    static CACHE: OnceLock<Table<ComplexBall>> = OnceLock::new();
    cached(&CACHE, q, prec, || {
        map_range(Execution::default(), 1..q, |b| log_one_minus_zeta(b as i64, q, prec))
            .into_iter()
            .collect()
    })
}

fn roots_table(q: u64, prec: u32) -> Result<Arc<Vec<ComplexBall>>> {
    static CACHE: OnceLock<Table<ComplexBall>> = OnceLock::new();
    cached(&CACHE, q, prec, || {
        Ok((0..q as i64).map(|k| root_of_unity(k, q, prec)).collect())
    })
}

/// Numeric embedding of a cyclotomic element under `ζ_m ↦ e^{2πi/m}`.
pub fn embed(e: &CyclotomicElement, prec: u32) -> Result<ComplexBall> {
    let m = e.modulus();
    let roots = roots_table(m, prec)?;
    let mut acc = ComplexBall::zero(prec);
    for (j, c) in e.numerators().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &roots[j].mul_real(&Ball::from_int(c.clone(), prec));
        }
    }
    let den = Rational::from_integer(e.denominator().clone());
    Ok(acc.mul_rational(&den.recip()))
}

fn pole_check(f: &PeriodicFunction) -> Result<()> {
    if f.is_zero_mean() {
        Ok(())
    } else {
        Err(Error::Pole {
            residue: f.mean().to_string(),
        })
    }
}

/// `L(1,f)` by the chosen route.
pub fn l_one(f: &PeriodicFunction, prec: u32, method: Method) -> Result<EvalReport> {
    pole_check(f)?;
    let q = f.modulus();
    let wp = prec + GUARD_BITS;
    let qr = Rational::from_integer(q.into());
    let (value, terms) = match method {
        Method::Digamma => {
            let psi = digamma_table(q, prec)?;
            let s = weighted_sum(f, &psi, wp);
            (s.mul_rational(&(-qr.recip())), q)
        }
        Method::Hurwitz => {
            let c = hurwitz_constant_table(q, prec)?;
            let s = weighted_sum(f, &c, wp);
            (s.mul_rational(&qr.recip()), q)
        }
        Method::FourierLog => {
            let z = l_one_fourier(f, wp)?;
            (z.re, q - 1)
        }
        Method::PartialSum => partial_sum(f, wp, default_periods(q)),
    };
    Ok(EvalReport {
        value: value.with_prec(prec + GUARD_BITS / 2),
        method,
        precision_bits: prec,
        terms_used: terms,
    })
}

fn weighted_sum(f: &PeriodicFunction, table: &[Ball], wp: u32) -> Ball {
    let mut acc = Ball::zero(wp);
    for (v, t) in f.values().iter().zip(table) {
        if !v.is_zero() {
            acc = &acc + &t.mul_rational(v);
        }
    }
    acc
}

/// `−Σ_{b<q} f̂(b) Log(1 − ζ^b)`, kept complex so that the imaginary part can be
/// checked against zero.
pub fn l_one_fourier(f: &PeriodicFunction, prec: u32) -> Result<ComplexBall> {
    pole_check(f)?;
    let q = f.modulus();
    let hat = fourier_transform(f)?;
    let logs = log_one_minus_zeta_table(q, prec)?;
    let mut acc = ComplexBall::zero(prec);
    for b in 1..q as i64 {
        let c = hat.at(b);
        if !c.is_zero() {
            acc = &acc + &(&embed(c, prec)? * &logs[b as usize - 1]);
        }
    }
    Ok(-&acc)
}

/// `L(1,f)` for values given as cyclotomic elements (e.g. character values),
/// via the digamma formula.
pub fn l_one_cyclotomic(values: &[CyclotomicElement], prec: u32) -> Result<ComplexBall> {
    let q = values.len() as u64;
    if q == 0 {
        return Err(Error::ZeroArgument);
    }
    let m = values[0].modulus();
    let mut total = CyclotomicElement::zero(m)?;
    for v in values {
        total = total.add(v)?;
    }
    if !total.is_zero() {
        return Err(Error::Pole {
            residue: format!("({total})/{q}"),
        });
    }
    let wp = prec + GUARD_BITS;
    let psi = digamma_table(q, prec)?;
    let mut acc = ComplexBall::zero(wp);
    for (v, p) in values.iter().zip(psi.iter()) {
        if !v.is_zero() {
            acc = &acc + &embed(v, wp)?.mul_real(p);
        }
    }
    Ok(acc.mul_rational(&Rational::new((-1).into(), (q as i64).into())))
}

fn default_periods(q: u64) -> u64 {
    (1u64 << 16).div_ceil(q).max(2)
}

/// Block partial sums `Σ_{n ≤ Kq} f(n)/n`. For zero-mean `f` the `k`-th block
/// beyond is `−Σ_a f(a)·a/(kq(kq+a))`, so the tail is at most `A/(q²(K−1))`
/// with `A = Σ|f(a)|·a`.
pub fn partial_sum(f: &PeriodicFunction, prec: u32, periods: u64) -> (Ball, u64) {
    let q = f.modulus();
    let k_max = periods.max(2);
    let (d, ints) = f.cleared_integers();
    let mut acc = BigInt::zero();
    let mut ulps = 0u64;
    for k in 0..k_max {
        for (i, v) in ints.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let n = BigInt::from(k * q + i as u64 + 1);
            acc += (v << prec) / n;
            ulps += 1;
        }
    }
    let mut sum = Ball::from_parts(acc, BigInt::from(ulps), prec)
        .mul_rational(&Rational::from_integer(d).recip());
    let a: Rational = f
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| v.abs() * Rational::from_integer((i as u64 + 1).into()))
        .sum();
    let qq = Rational::from_integer((q * q).into());
    sum.add_error(&(a / (qq * Rational::from_integer((k_max - 1).into()))));
    (sum, k_max * q)
}

/// `L(s,f) = q^{−s} Σ_a f(a) ζ(s, a/q)` for rational `s > 0`, `s ≠ 1`.
pub fn l_s(f: &PeriodicFunction, s: &Rational, prec: u32) -> Result<EvalReport> {
    if s.is_one() {
        return Err(Error::InvalidArgument("use l_one at s = 1".into()));
    }
    if !s.is_positive() {
        return Err(Error::InvalidArgument(format!("s must be positive, got {s}")));
    }
    let q = f.modulus();
    let wp = prec + GUARD_BITS;
    let zetas: Vec<Ball> = map_range(Execution::default(), 1..q + 1, |a| {
        hurwitz_zeta(s, &Rational::new(a.into(), q.into()), wp)
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let sum = weighted_sum(f, &zetas, wp + GUARD_BITS);
    let qs = pow_neg(&Rational::from_integer(q.into()), s, wp + GUARD_BITS)?;
    Ok(EvalReport {
        value: (&sum * &qs).with_prec(prec + GUARD_BITS / 2),
        method: Method::Hurwitz,
        precision_bits: prec,
        terms_used: q,
    })
}
