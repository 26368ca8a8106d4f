//! Cyclotomic polynomials over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::divisors;
use crate::error::Result;

/// Quotient of `num` by a monic `den`, both low-to-high; panics if inexact.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// `Φ_q` as integer coefficients, lowest degree first, obtained by dividing
/// `x^q − 1` by `Φ_d` for every proper divisor `d` of `q`.
pub fn cyclotomic_polynomial(q: u64) -> Result<Vec<BigInt>> {
    let divs = divisors(q)?;
    let mut table: Vec<(u64, Vec<BigInt>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for (e, phi_e) in &table {
            if d % e == 0 {
                poly = exact_div_monic(&poly, phi_e);
            }
        }
        table.push((d, poly));
    }
    Ok(table.pop().expect("q has at least one divisor").1)
}
