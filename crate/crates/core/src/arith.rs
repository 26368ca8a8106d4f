//! Elementary number theory on machine integers.

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { factors })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let fac = factorize(n)?;
    Ok(fac
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn mobius(n: u64) -> Result<i32> {
    let fac = factorize(n)?;
    if fac.factors.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if fac.factors.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Exponent of the prime `p` in `n`.
pub fn v_p(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    Ok(e)
}

/// Least `k ≥ 1` with `a^k ≡ 1 (mod m)`. The order modulo 1 is 1.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::NotUnit { a: a as i64, modulus: m });
    }
    let phi = euler_phi(m)?;
    let mut order = phi;
    for (p, _) in factorize(phi)?.factors {
        while order % p == 0 && pow_mod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Inverse of a unit modulo `m`.
pub fn inverse_mod(a: u64, m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return Err(Error::NotUnit { a: a as i64, modulus: m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fac = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in fac.factors() {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Residues `a` in `1..=q` with `gcd(a, q) = 1`, ascending.
pub fn units(q: u64) -> Vec<u64> {
    (1..=q).filter(|&a| gcd(a, q) == 1).collect()
}
