//! Rectangular complex balls.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ball::Ball;
use crate::error::Result;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexBall {
    pub fn new(re: Ball, im: Ball) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Ball::zero(prec), Ball::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::new(Ball::from_int(1, prec), Ball::zero(prec))
    }

    pub fn from_real(re: Ball) -> Self {
        let p = re.prec();
        Self::new(re, Ball::zero(p))
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self::from_real(Ball::from_rational(r, prec))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn mul_real(&self, x: &Ball) -> Self {
        Self::new(&self.re * x, &self.im * x)
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        Self::new(self.re.mul_rational(r), self.im.mul_rational(r))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::new(self.re.mul_int(k), self.im.mul_int(k))
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, other: &ComplexBall) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }

    /// Upper bound on `|z|²`.
    pub fn norm_sqr_upper(&self) -> Rational {
        let a = self.re.abs_upper();
        let b = self.im.abs_upper();
        &a * &a + &b * &b
    }

    pub fn checked_div(&self, other: &ComplexBall) -> Result<Self> {
        let den = &other.re.sqr() + &other.im.sqr();
        let num = self * &other.conj();
        Ok(Self::new(num.re.checked_div(&den)?, num.im.checked_div(&den)?))
    }
}

impl Add for &ComplexBall {
    type Output = ComplexBall;

    fn add(self, rhs: &ComplexBall) -> ComplexBall {
        ComplexBall::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexBall {
    type Output = ComplexBall;

    fn sub(self, rhs: &ComplexBall) -> ComplexBall {
        ComplexBall::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexBall {
    type Output = ComplexBall;

    fn mul(self, rhs: &ComplexBall) -> ComplexBall {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        ComplexBall::new(re, im)
    }
}

impl Neg for &ComplexBall {
    type Output = ComplexBall;

    fn neg(self) -> ComplexBall {
        ComplexBall::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + i({})", self.re, self.im)
    }
}
