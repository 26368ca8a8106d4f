//! Periodic rational-valued arithmetic functions.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{euler_phi, gcd};
use crate::error::{Error, Result};
use crate::Rational;

/// A function `f: Z → Q` with period `q`.
///
/// Values are stored for residues `a = 1..=q`; slot `q` holds `f(0) = f(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicFunction {
    modulus: u64,
    values: Vec<Rational>,
}

/// Default upper bound on the modulus accepted by [`PeriodicFunction::new`].
pub const MAX_MODULUS: u64 = 1_000_000;

impl PeriodicFunction {
    pub fn new(modulus: u64, values: Vec<Rational>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroArgument);
        }
        if modulus > MAX_MODULUS {
            return Err(Error::ModulusTooLarge {
                modulus,
                cap: MAX_MODULUS,
            });
        }
        if values.len() as u64 != modulus {
            return Err(Error::LengthMismatch {
                expected: modulus as usize,
                got: values.len(),
            });
        }
        Ok(Self { modulus, values })
    }

    pub fn from_integers(modulus: u64, values: &[i64]) -> Result<Self> {
        Self::new(
            modulus,
            values.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        )
    }

    pub fn zero(modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            modulus,
            values: vec![Rational::zero(); modulus as usize],
        }
    }

    /// Build from a closure evaluated at residues `1..=q`.
    pub fn from_fn(modulus: u64, mut f: impl FnMut(u64) -> Rational) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            modulus,
            values: (1..=modulus).map(&mut f).collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Values `f(1), …, f(q)`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `f(n)` for any integer `n`.
    pub fn at(&self, n: i64) -> &Rational {
        let idx = (n - 1).rem_euclid(self.modulus as i64) as usize;
        &self.values[idx]
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// `q⁻¹ Σ f(a)`, the residue of `L(s,f)` at `s = 1`.
    pub fn mean(&self) -> Rational {
        self.sum() / Rational::from_integer(BigInt::from(self.modulus))
    }

    pub fn is_zero_mean(&self) -> bool {
        self.sum().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Supported on residues coprime to the modulus.
    pub fn is_unit_supported(&self) -> bool {
        (1..=self.modulus)
            .all(|a| gcd(a, self.modulus) == 1 || self.values[(a - 1) as usize].is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            modulus: self.modulus,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Least common multiple of the value denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    /// Integer values `D·f(a)` with `D` the denominator lcm.
    pub fn cleared_integers(&self) -> (BigInt, Vec<BigInt>) {
        let d = self.denominator_lcm();
        let ints = self
            .values
            .iter()
            .map(|v| v.numer() * (&d / v.denom()))
            .collect();
        (d, ints)
    }

    /// `f_a(b) = f(ab)`; requires `gcd(a, q) = 1`.
    pub fn dilate(&self, a: i64) -> Result<Self> {
        let q = self.modulus;
        let a_red = a.rem_euclid(q as i64) as u64;
        if gcd(a_red, q) != 1 {
            return Err(Error::NotUnit { a, modulus: q });
        }
        Ok(Self::from_fn(q, |b| self.at((a_red * b % q) as i64).clone()))
    }

    /// `(f_e, f_o)` with `f_e(a) = (f(a)+f(−a))/2` and `f_o(a) = (f(a)−f(−a))/2`.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let half = Rational::new(1.into(), 2.into());
        let q = self.modulus;
        let even = Self::from_fn(q, |a| (self.at(a as i64) + self.at(-(a as i64))) * &half);
        let odd = Self::from_fn(q, |a| (self.at(a as i64) - self.at(-(a as i64))) * &half);
        (even, odd)
    }

    pub fn is_even(&self) -> bool {
        (1..=self.modulus as i64).all(|a| self.at(a) == self.at(-a))
    }

    pub fn is_odd(&self) -> bool {
        (1..=self.modulus as i64).all(|a| *self.at(a) == -self.at(-a))
    }

    /// Sup norm of the values.
    pub fn max_abs(&self) -> Rational {
        self.values
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// `(f, g) = φ(q)⁻¹ Σ_{(a,q)=1} f(a)·g(a)` for rational `f`, `g`.
pub fn inner_product(f: &PeriodicFunction, g: &PeriodicFunction) -> Result<Rational> {
    if f.modulus != g.modulus {
        return Err(Error::ModulusMismatch(f.modulus, g.modulus));
    }
    let q = f.modulus;
    let phi = euler_phi(q)?;
    let sum = (1..=q)
        .filter(|&a| gcd(a, q) == 1)
        .fold(Rational::zero(), |acc, a| {
            let i = (a - 1) as usize;
            acc + &f.values[i] * &g.values[i]
        });
    Ok(sum / Rational::from_integer(phi.into()))
}

impl Add for &PeriodicFunction {
    type Output = PeriodicFunction;

    fn add(self, rhs: &PeriodicFunction) -> PeriodicFunction {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        PeriodicFunction {
            modulus: self.modulus,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PeriodicFunction {
    type Output = PeriodicFunction;

    fn sub(self, rhs: &PeriodicFunction) -> PeriodicFunction {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        PeriodicFunction {
            modulus: self.modulus,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for PeriodicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ") mod {}", self.modulus)
    }
}
