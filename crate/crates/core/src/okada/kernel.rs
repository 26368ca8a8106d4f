//! The space of `f` mod `q` with `L(1,f) = 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::epsilon::EpsilonTable;
use super::weights::ResidueWeightSystem;
use crate::arith::{gcd, units};
use crate::error::Result;
use crate::linalg::{nullspace, primitive_integer_vector};
use crate::{PeriodicFunction, Rational};

/// The linear conditions on `(f(1), …, f(q))`: zero mean, then one row per unit
/// `a`, then one row per prime `p | q`.
pub fn vanishing_conditions(q: u64) -> Result<Vec<Vec<Rational>>> {
    let n = q as usize;
    let w = ResidueWeightSystem::get(q)?;
    let mut rows = vec![vec![Rational::one(); n]];
    for a in units(q) {
        let mut row = vec![Rational::zero(); n];
        for (i, s) in w.s_values().iter().enumerate() {
            if !s.is_zero() {
                let r = (a * (i as u64 + 1)) % q;
                row[((r + q - 1) % q) as usize] += s;
            }
        }
        rows.push(row);
    }
    let eps = EpsilonTable::new(q)?;
    for p in eps.primes() {
        let row = eps
            .row(p)
            .expect("prime of q")
            .iter()
            .enumerate()
            .map(|(i, e)| if gcd(i as u64 + 1, q) > 1 { e.clone() } else { Rational::zero() })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Canonical integer basis: each vector primitive with first nonzero entry positive,
/// one per free coordinate of the reduced echelon form.
pub fn kernel_basis(q: u64) -> Result<Vec<PeriodicFunction>> {
    let rows = vanishing_conditions(q)?;
    nullspace(&rows, q as usize)
        .iter()
        .map(|v| {
            let ints: Vec<BigInt> = primitive_integer_vector(v);
            PeriodicFunction::new(q, ints.into_iter().map(Rational::from_integer).collect())
        })
        .collect()
}
