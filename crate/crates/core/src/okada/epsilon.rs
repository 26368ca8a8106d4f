//! The weights `ε(r, p)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorize, is_prime, v_p};
use crate::error::{Error, Result};
use crate::Rational;

fn check(r: u64, p: u64, q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::ZeroArgument);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q % p != 0 {
        return Err(Error::PrimeNotDivisor { p, modulus: q });
    }
    if r == 0 || r > q {
        return Err(Error::ResidueOutOfRange { r, modulus: q });
    }
    Ok(())
}

/// `v_p(r)` if `v_p(r) < v_p(q)`, else `v_p(q) + 1/(p−1)`.
pub fn epsilon(r: u64, p: u64, q: u64) -> Result<Rational> {
    check(r, p, q)?;
    let vq = v_p(q, p)?;
    let vr = v_p(r, p)?;
    Ok(if vr < vq {
        Rational::from_integer(vr.into())
    } else {
        Rational::from_integer(vq.into()) + Rational::new(1.into(), (p - 1).into())
    })
}

/// `Σ_{j ≤ J} p^{−j} · #{t mod q : p^j t ≡ r}` and a bound `q p^{−J} / (1 − 1/p)`
/// on the omitted terms.
pub fn lemma1_bruteforce(r: u64, p: u64, q: u64, depth: u32) -> Result<(Rational, Rational)> {
    check(r, p, q)?;
    let mut partial = Rational::zero();
    let mut pj = 1u64;
    let mut pj_big = BigInt::one();
    for _ in 1..=depth {
        pj = pj * p % q;
        pj_big *= p;
        let count = (1..=q).filter(|&t| (pj as u128 * t as u128 % q as u128) as u64 == r % q).count();
        if count > 0 {
            partial += Rational::new(count.into(), pj_big.clone());
        }
    }
    let tail = Rational::new(BigInt::from(q) * p, pj_big * (p - 1));
    Ok((partial, tail))
}

/// `ε(r, p)` for every prime `p | q` and every residue `r = 1..=q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTable {
    modulus: u64,
    rows: Vec<(u64, Vec<Rational>)>,
}

impl EpsilonTable {
    pub fn new(q: u64) -> Result<Self> {
        let rows = factorize(q)?
            .primes()
            .map(|p| Ok((p, (1..=q).map(|r| epsilon(r, p, q)).collect::<Result<_>>()?)))
            .collect::<Result<_>>()?;
        Ok(Self { modulus: q, rows })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Values at `r = 1..=q` for the prime `p`.
    pub fn row(&self, p: u64) -> Option<&[Rational]> {
        self.rows.iter().find(|(x, _)| *x == p).map(|(_, v)| v.as_slice())
    }

    pub fn get(&self, r: u64, p: u64) -> Option<&Rational> {
        self.row(p)?.get((r as usize).checked_sub(1)?)
    }
}
