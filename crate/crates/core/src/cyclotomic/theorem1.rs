//! The product criterion: `L(1,f) = 0` iff `∏_b (1 − ζ^b)^{c_bj} = 1` for every `j`,
//! with the principal-branch logarithms summing to zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::CyclotomicElement;
use super::fourier::fourier_transform;
use crate::error::{Error, Result};
use crate::numeric::{log_one_minus_zeta_table, pi, Ball};
use crate::par::{map_slice, Execution};
use crate::{PeriodicFunction, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem1Options {
    /// Starting precision for the lattice read-off.
    pub precision: u32,
    /// Give up after the precision would exceed this.
    pub max_precision: u32,
    /// Above this total exponent `Σ_b |e_b|` a product is first screened by its
    /// archimedean log-heights, which certify `P_j ≠ 1` cheaply.
    pub exact_budget: u64,
    pub execution: Execution,
}

impl Default for Theorem1Options {
    fn default() -> Self {
        Self {
            precision: 128,
            max_precision: 4096,
            exact_budget: 1 << 13,
            execution: Execution::default(),
        }
    }
}

/// One coordinate `j` of the criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    /// `e_b = N·c_bj` for `b = 1..q−1`.
    pub exponents: Vec<BigInt>,
    /// `∏_{e_b > 0} (1 − ζ^b)^{e_b}`, when computed.
    pub numerator: Option<CyclotomicElement>,
    /// `∏_{e_b < 0} (1 − ζ^b)^{−e_b}`, when computed.
    pub denominator: Option<CyclotomicElement>,
    pub is_one: bool,
    /// The `k` with `N·λ_j = 2πik`, present when `P_j = 1`.
    pub lattice_index: Option<BigInt>,
}

impl ProductCheck {
    /// `P_j` as a field element, if both halves were computed.
    pub fn value(&self) -> Option<Result<CyclotomicElement>> {
        match (&self.numerator, &self.denominator) {
            (Some(a), Some(b)) => Some(a.div(b)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Outcome {
    pub vanishing: bool,
    /// `N`, the common denominator of the `c_bj` after clearing the denominators of `f`.
    pub scale: BigInt,
    pub products: Vec<ProductCheck>,
    pub precision_used: u32,
}

impl Theorem1Outcome {
    pub fn exact_products(&self) -> Vec<Option<CyclotomicElement>> {
        self.products
            .iter()
            .map(|p| p.value().and_then(|r| r.ok()))
            .collect()
    }

    pub fn root_of_unity_indices(&self) -> Vec<Option<BigInt>> {
        self.products.iter().map(|p| p.lattice_index.clone()).collect()
    }
}

pub fn theorem1_decide(f: &PeriodicFunction, precision: u32) -> Result<Theorem1Outcome> {
    theorem1_decide_with(
        f,
        &Theorem1Options {
            precision,
            ..Default::default()
        },
    )
}

pub fn theorem1_decide_with(f: &PeriodicFunction, opts: &Theorem1Options) -> Result<Theorem1Outcome> {
    if !f.is_zero_mean() {
        return Err(Error::Pole {
            residue: f.mean().to_string(),
        });
    }
    let q = f.modulus();
    // L(1, D·f) = D·L(1, f): work with integer values
    let (_, ints) = f.cleared_integers();
    let g = PeriodicFunction::new(q, ints.into_iter().map(Rational::from_integer).collect())?;
    let hat = fourier_transform(&g)?;
    let rows = &hat.coefficients()[..q as usize - 1];
    let scale = rows
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denominator()));
    assert!(
        (BigInt::from(q) % &scale).is_zero(),
        "Fourier denominators of an integer function divide q"
    );
    let phi = hat.at(1).field().degree();
    let exponents: Vec<Vec<BigInt>> = (0..phi)
        .map(|j| {
            rows.iter()
                .map(|e| &e.numerators()[j] * (&scale / e.denominator()))
                .collect()
        })
        .collect();

    let factors: Vec<CyclotomicElement> = {
        let one = CyclotomicElement::one(q)?;
        (1..q as i64)
            .map(|b| one.sub(&CyclotomicElement::zeta_pow(q, b)?))
            .collect::<Result<_>>()?
    };

    let mut prec = opts.precision.max(32);
    loop {
        let checks: Vec<Result<ProductCheck>> = map_slice(opts.execution, &exponents, |e| {
            check_product(q, e, &factors, prec, opts.exact_budget)
        });
        match checks.into_iter().collect::<Result<Vec<_>>>() {
            Ok(products) => {
                let vanishing = products
                    .iter()
                    .all(|p| p.is_one && p.lattice_index.as_ref().is_some_and(Zero::is_zero));
                return Ok(Theorem1Outcome {
                    vanishing,
                    scale,
                    products,
                    precision_used: prec,
                });
            }
            Err(Error::PrecisionExhausted(_)) if prec * 2 <= opts.max_precision => prec *= 2,
            Err(Error::PrecisionExhausted(_)) => return Err(Error::PrecisionExhausted(prec)),
            Err(e) => return Err(e),
        }
    }
}

fn check_product(
    q: u64,
    exps: &[BigInt],
    factors: &[CyclotomicElement],
    prec: u32,
    budget: u64,
) -> Result<ProductCheck> {
    let total: BigInt = exps.iter().map(|e| e.abs()).sum();
    let mut out = ProductCheck {
        exponents: exps.to_vec(),
        numerator: None,
        denominator: None,
        is_one: false,
        lattice_index: None,
    };
    if total > BigInt::from(budget) && some_height_nonzero(q, exps, prec)? {
        return Ok(out);
    }
    let mut num = CyclotomicElement::one(q)?;
    let mut den = CyclotomicElement::one(q)?;
    for (e, fac) in exps.iter().zip(factors) {
        if e.is_zero() {
            continue;
        }
        let k = e
            .abs()
            .to_u64()
            .ok_or_else(|| Error::InvalidArgument("exponent too large".into()))?;
        let p = fac.pow(k);
        if e.is_positive() {
            num = num.mul(&p)?;
        } else {
            den = den.mul(&p)?;
        }
    }
    out.is_one = num == den;
    out.numerator = Some(num);
    out.denominator = Some(den);
    if out.is_one {
        out.lattice_index = Some(lattice_index(q, exps, prec)?);
    }
    Ok(out)
}

/// Whether some embedding `σ_a` certifiably gives `log|σ_a(P)| ≠ 0`.
fn some_height_nonzero(q: u64, exps: &[BigInt], prec: u32) -> Result<bool> {
    let logs = log_one_minus_zeta_table(q, prec)?;
    for a in crate::arith::units(q) {
        let mut h = Ball::zero(prec);
        for (b, e) in exps.iter().enumerate() {
            if !e.is_zero() {
                let idx = ((a * (b as u64 + 1)) % q) as usize - 1;
                h = &h + &logs[idx].re.mul_int(e.clone());
            }
        }
        if h.is_nonzero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reads `k` off `Σ_b e_b Log(1 − ζ^b) = 2πik` from a certified ball, and
/// confirms it against the exact imaginary parts `π(b/q − 1/2)`.
fn lattice_index(q: u64, exps: &[BigInt], prec: u32) -> Result<BigInt> {
    let logs = log_one_minus_zeta_table(q, prec)?;
    let mut re = Ball::zero(prec);
    let mut im = Ball::zero(prec);
    let mut exact = Rational::zero();
    for (i, e) in exps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        re = &re + &logs[i].re.mul_int(e.clone());
        im = &im + &logs[i].im.mul_int(e.clone());
        let b = i as i64 + 1;
        exact += Rational::new(e * (2 * b - q as i64), BigInt::from(4 * q));
    }
    let k = im.checked_div(&pi(prec).mul_int(2))?;
    if !k.rad_below_pow2(-2) {
        return Err(Error::PrecisionExhausted(prec));
    }
    let nearest = k.mid_rational().round().to_integer();
    let nearest_r = Rational::from_integer(nearest.clone());
    if !re.contains_zero() || !k.contains_rational(&nearest_r) || exact != nearest_r {
        return Err(Error::InvalidArgument(format!(
            "product equals 1 but its logarithm is off the lattice (k ≈ {k}, exact {exact})"
        )));
    }
    Ok(nearest)
}
