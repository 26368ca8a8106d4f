//! The field `Q(ζ_q)` on the power basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::cyclotomic_polynomial;
use crate::arith::{euler_phi, gcd, units};
use crate::error::{Error, Result};
use crate::Rational;

/// Largest modulus for which a cyclotomic field will be built.
pub const MAX_FIELD_MODULUS: u64 = 2048;

/// Shared data for one cyclotomic field: `Φ_q` and the reduced powers `ζ^k`, `0 ≤ k < q`.
#[derive(Debug)]
pub struct CyclotomicField {
    q: u64,
    phi: usize,
    /// Nonzero coefficients of `Φ_q` below the leading term, as (degree, coefficient).
    tail: Vec<(usize, i64)>,
    poly: Vec<BigInt>,
    powers: OnceLock<Vec<Vec<i64>>>,
}

static FIELDS: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();

impl CyclotomicField {
    /// The (cached) field of `q`-th roots of unity.
    pub fn get(q: u64) -> Result<Arc<Self>> {
        if q == 0 {
            return Err(Error::ZeroArgument);
        }
        if q > MAX_FIELD_MODULUS {
            return Err(Error::ModulusTooLarge {
                modulus: q,
                cap: MAX_FIELD_MODULUS,
            });
        }
        let cache = FIELDS.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&q) {
            return Ok(f.clone());
        }
        let poly = cyclotomic_polynomial(q)?;
        let phi = euler_phi(q)? as usize;
        let tail = poly[..phi]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.to_i64().expect("cyclotomic coefficient fits in i64")))
            .collect();
        let field = Arc::new(Self {
            q,
            phi,
            tail,
            poly,
            powers: OnceLock::new(),
        });
        Ok(cache.lock().unwrap().entry(q).or_insert(field).clone())
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn polynomial(&self) -> &[BigInt] {
        &self.poly
    }

    /// Coordinates of `ζ^k` for every `0 ≤ k < q`.
    fn powers(&self) -> &[Vec<i64>] {
        self.powers.get_or_init(|| {
            let mut out = Vec::with_capacity(self.q as usize);
            let mut cur = vec![0i64; self.phi];
            cur[0] = 1;
            for _ in 0..self.q {
                out.push(cur.clone());
                // multiply by x and reduce the overflow term x^phi
                let top = cur[self.phi - 1];
                for k in (1..self.phi).rev() {
                    cur[k] = cur[k - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    for &(k, c) in &self.tail {
                        cur[k] = cur[k]
                            .checked_sub(top.checked_mul(c).expect("power table overflow"))
                            .expect("power table overflow");
                    }
                }
            }
            out
        })
    }

    /// Coordinates of `ζ^k`.
    pub fn power_coords(&self, k: i64) -> &[i64] {
        let r = k.rem_euclid(self.q as i64) as usize;
        &self.powers()[r]
    }

    /// Reduce a polynomial with integer coefficients modulo `Φ_q` in place.
    fn reduce(&self, a: &mut Vec<BigInt>) {
        let phi = self.phi;
        for i in (phi..a.len()).rev() {
            if a[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut a[i]);
            for &(k, pk) in &self.tail {
                a[i - phi + k] -= &c * pk;
            }
        }
        a.truncate(phi);
        a.resize(phi, BigInt::zero());
    }
}

/// An exact element `Σ_j c_j ζ_q^j` of `Q(ζ_q)`, `0 ≤ j < φ(q)`.
///
/// Stored as integer numerators over a positive common denominator in lowest terms.
#[derive(Clone)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.q == other.field.q && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicElement(q={}, {})", self.field.q, self)
    }
}

impl CyclotomicElement {
    fn from_raw(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut e = Self { field, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if g.is_zero() {
            self.den = BigInt::one();
        } else if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
    }

    pub fn zero(q: u64) -> Result<Self> {
        let field = CyclotomicField::get(q)?;
        let num = vec![BigInt::zero(); field.phi];
        Ok(Self {
            field,
            num,
            den: BigInt::one(),
        })
    }

    pub fn from_rational(q: u64, r: &Rational) -> Result<Self> {
        let field = CyclotomicField::get(q)?;
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = r.numer().clone();
        Ok(Self::from_raw(field, num, r.denom().clone()))
    }

    pub fn one(q: u64) -> Result<Self> {
        Self::from_rational(q, &Rational::one())
    }

    /// `ζ_q^k`.
    pub fn zeta_pow(q: u64, k: i64) -> Result<Self> {
        let field = CyclotomicField::get(q)?;
        let num = field.power_coords(k).iter().map(|&c| BigInt::from(c)).collect();
        Ok(Self::from_raw(field, num, BigInt::one()))
    }

    /// Element from power-basis coordinates.
    pub fn from_coeffs(q: u64, coeffs: &[Rational]) -> Result<Self> {
        let field = CyclotomicField::get(q)?;
        if coeffs.len() != field.phi {
            return Err(Error::LengthMismatch {
                expected: field.phi,
                got: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_raw(field, num, den))
    }

    /// Element `(Σ_k n_k ζ^k) / den` from exponent-indexed integers (any exponents).
    pub fn from_exponent_sum(q: u64, terms: &[(i64, BigInt)], den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = CyclotomicField::get(q)?;
        let mut num = vec![BigInt::zero(); field.phi];
        for (k, n) in terms {
            if n.is_zero() {
                continue;
            }
            for (slot, &c) in num.iter_mut().zip(field.power_coords(*k)) {
                if c != 0 {
                    *slot += n * c;
                }
            }
        }
        Ok(Self::from_raw(field, num, den))
    }

    pub fn modulus(&self) -> u64 {
        self.field.q
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Power-basis coordinates.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.q != other.field.q {
            return Err(Error::ModulusMismatch(self.field.q, other.field.q));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let l = self.den.lcm(&other.den);
        let (ma, mb) = (&l / &self.den, &l / &other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &ma + b * &mb)
            .collect();
        Ok(Self::from_raw(self.field.clone(), num, l))
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_raw(self.field.clone(), num, &self.den * r.denom())
    }

    fn mul_numerators(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.field.phi;
        let mut out = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.field.reduce(&mut out);
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let num = self.mul_numerators(&self.num, &other.num);
        Ok(Self::from_raw(self.field.clone(), num, &self.den * &other.den))
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.q).expect("field exists");
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    /// `σ_a`: the automorphism with `ζ ↦ ζ^a`.
    pub fn galois_apply(&self, a: i64) -> Result<Self> {
        let q = self.field.q;
        if gcd(a.rem_euclid(q as i64) as u64, q) != 1 {
            return Err(Error::NotUnit { a, modulus: q });
        }
        let mut num = vec![BigInt::zero(); self.field.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = self.field.power_coords(a * j as i64);
            for (slot, &p) in num.iter_mut().zip(img) {
                if p != 0 {
                    *slot += c * p;
                }
            }
        }
        Ok(Self::from_raw(self.field.clone(), num, self.den.clone()))
    }

    /// Complex conjugate, `σ_{−1}`.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("-1 is a unit")
    }

    /// The field norm `∏_a σ_a(e)` over units `a`, together with `∏_{a≠1} σ_a(e)`.
    fn norm_and_cofactor(&self) -> (Rational, Self) {
        let q = self.field.q;
        let mut cof = Self::one(q).expect("field exists");
        for a in units(q).into_iter().filter(|&a| a % q != 1 % q) {
            cof = cof.mul(&self.galois_apply(a as i64).expect("unit")).expect("same field");
        }
        let n = self.mul(&cof).expect("same field");
        let n = n.as_rational().expect("norm is rational");
        (n, cof)
    }

    pub fn norm(&self) -> Rational {
        self.norm_and_cofactor().0
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (n, cof) = self.norm_and_cofactor();
        Ok(cof.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, j: usize, c: &Rational| -> fmt::Result {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}"),
                1 if mag.is_one() => write!(f, "z"),
                1 => write!(f, "{mag}*z"),
                _ if mag.is_one() => write!(f, "z^{j}"),
                _ => write!(f, "{mag}*z^{j}"),
            }
        };
        for (j, c) in self.coeffs().iter().enumerate() {
            if !c.is_zero() {
                write_term(f, j, c)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
