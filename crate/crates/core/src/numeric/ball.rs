//! Fixed-point midpoint-radius arithmetic.
//!
//! A [`Ball`] at precision `p` stores integers `m` and `r ≥ 0` and denotes the
//! real interval `[(m − r)·2^−p, (m + r)·2^−p]`. Every operation rounds
//! outward, so the result interval contains every exact result obtainable
//! from points of the operand intervals. Operands of different precision are
//! aligned to the finer one before combining.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigInt,
    prec: u32,
}

fn ceil_shr(x: &BigInt, bits: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    if bits == 0 {
        return x.clone();
    }
    (x + ((BigInt::one() << bits) - 1u32)) >> bits
}

/// `ceil(r · 2^prec)` for a nonnegative rational bound `r`.
fn scaled_ceil(r: &Rational, prec: u32) -> BigInt {
    let num = r.numer().abs() << prec;
    num.div_ceil(r.denom())
}

impl Ball {
    pub fn zero(prec: u32) -> Self {
        Self {
            mid: BigInt::zero(),
            rad: BigInt::zero(),
            prec,
        }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        Self {
            mid: n.into() << prec,
            rad: BigInt::zero(),
            prec,
        }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let scaled = r.numer() << prec;
        let (mid, rem) = scaled.div_mod_floor(r.denom());
        let rad = if rem.is_zero() { BigInt::zero() } else { BigInt::one() };
        Self { mid, rad, prec }
    }

    /// Ball with raw fixed-point parts `mid·2^−prec ± rad·2^−prec`.
    pub fn from_parts(mid: BigInt, rad: BigInt, prec: u32) -> Self {
        assert!(!rad.is_negative(), "radius must be nonnegative");
        Self { mid, rad, prec }
    }

    /// Interval `[lo, hi]` given by rational endpoints.
    pub fn from_interval(lo: &Rational, hi: &Rational, prec: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        let two = Rational::from_integer(2.into());
        let center = (lo + hi) / &two;
        let half = (hi - lo) / two;
        let mut b = Self::from_rational(&center, prec);
        b.add_error(&half);
        b
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mid_raw(&self) -> &BigInt {
        &self.mid
    }

    pub fn rad_raw(&self) -> &BigInt {
        &self.rad
    }

    pub fn mid_rational(&self) -> Rational {
        Rational::new(self.mid.clone(), BigInt::one() << self.prec)
    }

    pub fn rad_rational(&self) -> Rational {
        Rational::new(self.rad.clone(), BigInt::one() << self.prec)
    }

    pub fn lower(&self) -> Rational {
        Rational::new(&self.mid - &self.rad, BigInt::one() << self.prec)
    }

    pub fn upper(&self) -> Rational {
        Rational::new(&self.mid + &self.rad, BigInt::one() << self.prec)
    }

    /// Upper bound on `|x|` over the ball.
    pub fn abs_upper(&self) -> Rational {
        Rational::new(self.mid.abs() + &self.rad, BigInt::one() << self.prec)
    }

    pub fn mid_f64(&self) -> f64 {
        ratio_to_f64(&self.mid, self.prec)
    }

    pub fn rad_f64(&self) -> f64 {
        ratio_to_f64(&self.rad, self.prec)
    }

    /// `log2` of the radius, or `-inf` for exact balls.
    pub fn rad_log2(&self) -> f64 {
        if self.rad.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.rad.bits() as f64;
        let top = self.rad.to_f64().unwrap_or(f64::MAX);
        if top.is_finite() {
            top.log2() - self.prec as f64
        } else {
            bits - self.prec as f64
        }
    }

    /// True when every point of the ball has absolute value below `2^e`.
    pub fn abs_below_pow2(&self, e: i64) -> bool {
        let bound = self.mid.abs() + &self.rad;
        let shift = self.prec as i64 + e;
        if shift < 0 {
            return bound.is_zero();
        }
        bound < (BigInt::one() << shift as u32)
    }

    /// True when the radius is below `2^e`.
    pub fn rad_below_pow2(&self, e: i64) -> bool {
        let shift = self.prec as i64 + e;
        if shift < 0 {
            return self.rad.is_zero();
        }
        self.rad < (BigInt::one() << shift as u32)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Widen by an absolute error bound given as a rational.
    pub fn add_error(&mut self, bound: &Rational) {
        self.rad += scaled_ceil(bound, self.prec);
    }

    /// Widen by `ulps` units in the last place.
    pub fn add_ulps(&mut self, ulps: impl Into<BigInt>) {
        self.rad += ulps.into().abs();
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let d = prec - self.prec;
                Self {
                    mid: &self.mid << d,
                    rad: &self.rad << d,
                    prec,
                }
            }
            Ordering::Less => {
                let d = self.prec - prec;
                let mid = &self.mid >> d;
                let rad = ceil_shr(&self.rad, d) + 1u32;
                Self { mid, rad, prec }
            }
        }
    }

    fn aligned(a: &Ball, b: &Ball) -> (Ball, Ball) {
        let p = a.prec.max(b.prec);
        (a.with_prec(p), b.with_prec(p))
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    pub fn is_positive(&self) -> bool {
        self.mid > self.rad
    }

    pub fn is_negative(&self) -> bool {
        -&self.mid > self.rad
    }

    /// Strictly separated from zero.
    pub fn is_nonzero(&self) -> bool {
        !self.contains_zero()
    }

    pub fn overlaps(&self, other: &Ball) -> bool {
        let (a, b) = Self::aligned(self, other);
        (&a.mid - &b.mid).abs() <= &a.rad + &b.rad
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ball) -> bool {
        let (a, b) = Self::aligned(self, other);
        (&a.mid - &b.mid).abs() + &b.rad <= a.rad
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        let lo = self.lower();
        let hi = self.upper();
        &lo <= r && r <= &hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &Ball) -> bool {
        let (a, b) = Self::aligned(self, other);
        &a.mid + &a.rad < &b.mid - &b.rad
    }

    pub fn abs(&self) -> Self {
        if self.mid.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self {
            mid: &self.mid * &k,
            rad: &self.rad * k.abs(),
            prec: self.prec,
        }
    }

    pub fn div_int(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        assert!(!k.is_zero(), "division by zero");
        let mid = self.mid.div_floor(&k);
        let rad = self.rad.div_ceil(&k.abs()) + 1u32;
        Self {
            mid,
            rad,
            prec: self.prec,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if r.denom().is_one() {
            return self.mul_int(r.numer().clone());
        }
        self.mul_int(r.numer().clone()).div_int(r.denom().clone())
    }

    /// Multiply by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if k >= 0 {
            Self {
                mid: &self.mid << k as u32,
                rad: &self.rad << k as u32,
                prec: self.prec,
            }
        } else {
            let d = (-k) as u32;
            Self {
                mid: &self.mid >> d,
                rad: ceil_shr(&self.rad, d) + 1u32,
                prec: self.prec,
            }
        }
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn checked_div(&self, other: &Ball) -> Result<Self> {
        let (a, b) = Self::aligned(self, other);
        let bm = b.mid.abs();
        if bm <= b.rad {
            return Err(Error::DivisionByZero);
        }
        let p = a.prec;
        let mid = (&a.mid << p).div_floor(&b.mid);
        // |a/b − ma/mb| ≤ (ra·|mb| + |ma|·rb) / (|mb|·(|mb| − rb)), scaled by 2^p.
        let num = (&a.rad * &bm + a.mid.abs() * &b.rad) << p;
        let den = &bm * (&bm - &b.rad);
        let rad = num.div_ceil(&den) + 1u32;
        Ok(Self { mid, rad, prec: p })
    }

    pub fn inv(&self) -> Result<Self> {
        Ball::from_int(1, self.prec).checked_div(self)
    }

    /// Decimal rendering of the midpoint with `digits` fractional digits.
    pub fn mid_decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.mid_rational(), digits)
    }

    /// Radius rendered as an upward-rounded scientific string.
    pub fn rad_scientific(&self) -> String {
        if self.rad.is_zero() {
            return "0".to_string();
        }
        let l2 = self.rad_log2();
        let l10 = l2 * std::f64::consts::LOG10_2;
        let exp = l10.floor();
        let mant = 10f64.powf(l10 - exp);
        // bump the mantissa so the printed radius never understates the true one
        let mant = (mant * 1000.0).ceil() / 1000.0 + 0.001;
        format!("{mant:.3}e{}", exp as i64)
    }
}

fn ratio_to_f64(n: &BigInt, prec: u32) -> f64 {
    let bits = n.bits() as i64;
    if bits <= 1000 {
        n.to_f64().unwrap_or(0.0) * 2f64.powi(-(prec as i32))
    } else {
        let shift = (bits - 60) as u32;
        (n >> shift).to_f64().unwrap_or(0.0) * 2f64.powf(shift as f64 - prec as f64)
    }
}

/// Round-to-nearest decimal expansion of a rational.
pub fn rational_to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.sign() == Sign::Minus;
    let abs = rounded.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        s.push('.');
        let frac = frac_part.to_string();
        for _ in frac.len()..digits {
            s.push('0');
        }
        s.push_str(&frac);
    }
    s
}

impl Neg for &Ball {
    type Output = Ball;

    fn neg(self) -> Ball {
        Ball {
            mid: -&self.mid,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }
}

impl Neg for Ball {
    type Output = Ball;

    fn neg(self) -> Ball {
        Ball {
            mid: -self.mid,
            rad: self.rad,
            prec: self.prec,
        }
    }
}

impl Add for &Ball {
    type Output = Ball;

    fn add(self, rhs: &Ball) -> Ball {
        if self.prec == rhs.prec {
            return Ball {
                mid: &self.mid + &rhs.mid,
                rad: &self.rad + &rhs.rad,
                prec: self.prec,
            };
        }
        let (a, b) = Ball::aligned(self, rhs);
        &a + &b
    }
}

impl Sub for &Ball {
    type Output = Ball;

    fn sub(self, rhs: &Ball) -> Ball {
        if self.prec == rhs.prec {
            return Ball {
                mid: &self.mid - &rhs.mid,
                rad: &self.rad + &rhs.rad,
                prec: self.prec,
            };
        }
        let (a, b) = Ball::aligned(self, rhs);
        &a - &b
    }
}

impl Mul for &Ball {
    type Output = Ball;

    fn mul(self, rhs: &Ball) -> Ball {
        if self.prec != rhs.prec {
            let (a, b) = Ball::aligned(self, rhs);
            return &a * &b;
        }
        let p = self.prec;
        let mid = (&self.mid * &rhs.mid) >> p;
        let err = self.mid.abs() * &rhs.rad + rhs.mid.abs() * &self.rad + &self.rad * &rhs.rad;
        let rad = ceil_shr(&err, p) + 1u32;
        Ball { mid, rad, prec: p }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Ball> for Ball {
            type Output = Ball;
            fn $m(self, rhs: Ball) -> Ball {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Ball> for Ball {
            type Output = Ball;
            fn $m(self, rhs: &Ball) -> Ball {
                (&self).$m(rhs)
            }
        }
        impl $tr<Ball> for &Ball {
            type Output = Ball;
            fn $m(self, rhs: Ball) -> Ball {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2).ceil() as usize;
        let digits = f.precision().unwrap_or(digits.min(40));
        write!(f, "{} ± {}", self.mid_decimal(digits), self.rad_scientific())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn exact_rationals_stay_exact_when_dyadic() {
        let b = Ball::from_rational(&rat(3, 8), 10);
        assert!(b.is_exact());
        assert!(Ball::from_rational(&rat(1, 3), 10).rad_raw() == &BigInt::one());
    }

    #[test]
    fn division_by_ball_containing_zero_fails() {
        let mut z = Ball::from_rational(&rat(1, 1000), 8);
        z.add_error(&rat(1, 10));
        assert_eq!(Ball::from_int(1, 8).checked_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(rational_to_decimal(&rat(2, 3), 2), "0.67");
        assert_eq!(rational_to_decimal(&rat(5, 1), 0), "5");
        assert_eq!(rational_to_decimal(&rat(1, 200), 3), "0.005");
    }

    #[test]
    fn precision_changes_enclose() {
        let b = Ball::from_rational(&rat(22, 7), 100);
        let low = b.with_prec(20);
        assert!(low.contains(&b));
        assert!(low.contains_rational(&rat(22, 7)));
    }

    fn enclosing(n: i64, d: i64, err: i64, prec: u32) -> (Ball, Rational) {
        let x = rat(n, d);
        let mut b = Ball::from_rational(&x, prec);
        b.add_error(&rat(err.abs(), 1_000_000));
        let shift = rat(err, 2_000_000);
        (b, x + shift)
    }

    proptest! {
        #[test]
        fn arithmetic_encloses_exact_results(
            n1 in -1000i64..1000, d1 in 1i64..100, e1 in -50i64..50,
            n2 in -1000i64..1000, d2 in 1i64..100, e2 in -50i64..50,
            prec in 8u32..80,
        ) {
            let (a, x) = enclosing(n1, d1, e1, prec);
            let (b, y) = enclosing(n2, d2, e2, prec);
            prop_assert!((&a + &b).contains_rational(&(&x + &y)));
            prop_assert!((&a - &b).contains_rational(&(&x - &y)));
            prop_assert!((&a * &b).contains_rational(&(&x * &y)));
            if let Ok(q) = a.checked_div(&b) {
                prop_assert!(!y.is_zero());
                prop_assert!(q.contains_rational(&(&x / &y)));
            }
            prop_assert!(a.mul_rational(&rat(n2, d2)).contains_rational(&(&x * rat(n2, d2))));
            prop_assert!(a.mul_pow2(-3).contains_rational(&(&x / rat(8, 1))));
        }

        #[test]
        fn zero_predicates_are_exclusive(n in -1000i64..1000, e in 0i64..2000, prec in 4u32..40) {
            let mut b = Ball::from_rational(&rat(n, 7), prec);
            b.add_error(&rat(e, 1000));
            prop_assert!(!(b.contains_zero() && (b.is_positive() || b.is_negative())));
            prop_assert!(b.contains_zero() || b.is_positive() || b.is_negative());
        }
    }
}
