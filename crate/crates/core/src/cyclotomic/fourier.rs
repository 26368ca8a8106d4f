//! Discrete Fourier transform of periodic functions over `Q(ζ_q)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::CyclotomicElement;
use crate::error::{Error, Result};
use crate::{PeriodicFunction, Rational};

/// `f̂(1), …, f̂(q)`; index `q − 1` holds `f̂(q) = f̂(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCoefficients {
    modulus: u64,
    hat: Vec<CyclotomicElement>,
}

impl FourierCoefficients {
    pub fn new(modulus: u64, hat: Vec<CyclotomicElement>) -> Result<Self> {
        if hat.len() as u64 != modulus {
            return Err(Error::LengthMismatch {
                expected: modulus as usize,
                got: hat.len(),
            });
        }
        if let Some(e) = hat.iter().find(|e| e.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus, e.modulus()));
        }
        Ok(Self { modulus, hat })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coefficients(&self) -> &[CyclotomicElement] {
        &self.hat
    }

    /// `f̂(b)` for any integer `b`.
    pub fn at(&self, b: i64) -> &CyclotomicElement {
        let q = self.modulus as i64;
        &self.hat[((b - 1).rem_euclid(q)) as usize]
    }
}

/// `f̂(b) = q^{-1} Σ_a f(a) ζ^{-ab}` for `b = 1..=q`.
pub fn fourier_transform(f: &PeriodicFunction) -> Result<FourierCoefficients> {
    let q = f.modulus();
    let (d, ints) = f.cleared_integers();
    let den = d * BigInt::from(q);
    let hat = (1..=q as i64)
        .map(|b| {
            let terms: Vec<(i64, BigInt)> = ints
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (-(i as i64 + 1) * b, v.clone()))
                .collect();
            CyclotomicElement::from_exponent_sum(q, &terms, den.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    FourierCoefficients::new(q, hat)
}

/// `f(b) = Σ_a f̂(a) ζ^{ab}`; fails when the result is not rational-valued.
pub fn fourier_inverse(hat: &FourierCoefficients) -> Result<PeriodicFunction> {
    let q = hat.modulus();
    let mut values = Vec::with_capacity(q as usize);
    for b in 1..=q as i64 {
        let mut acc = CyclotomicElement::zero(q)?;
        for a in 1..=q as i64 {
            let c = hat.at(a);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&CyclotomicElement::zeta_pow(q, a * b)?)?)?;
        }
        values.push(acc.as_rational().ok_or(Error::NonRationalInverse)?);
    }
    PeriodicFunction::new(q, values)
}

/// Power-basis coordinates `c[b-1][j]` of `f̂(b)`, `b = 1..q-1`, `j = 0..φ(q)-1`.
pub fn coefficient_matrix(f: &PeriodicFunction) -> Result<Vec<Vec<Rational>>> {
    if !f.is_zero_mean() {
        return Err(Error::Pole {
            residue: f.mean().to_string(),
        });
    }
    let hat = fourier_transform(f)?;
    Ok(hat.coefficients()[..f.modulus() as usize - 1]
        .iter()
        .map(CyclotomicElement::coeffs)
        .collect())
}
