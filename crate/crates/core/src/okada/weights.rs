//! Exact sums over the monoid `M(q)` of integers composed of primes dividing `q`.
//!
//! For `p | q` with `v = v_p(q)` and `d = ord(p mod q/p^v)`, the powers `p^e` fall
//! into classes with constant residue mod `q`: the singletons `e < v` and the
//! arithmetic progressions `e ≡ v + s (mod d)`, `e ≥ v`. Summing each class
//! exactly and convolving over the primes gives `S(r)` and `W_p(r)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorize, multiplicative_order, pow_mod};
use crate::error::{Error, Result};
use crate::Rational;

/// Default cap on the modulus for weight systems.
pub const MAX_WEIGHT_MODULUS: u64 = 10_000;

/// `S(r) = Σ_{m ∈ M(q), m ≡ r} 1/m` and `W_p(r) = Σ_{m ∈ M(q), m ≡ r} v_p(m)/m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueWeightSystem {
    modulus: u64,
    primes: Vec<u64>,
    /// Indexed by `r − 1` for `r = 1..=q`.
    s: Vec<Rational>,
    w: Vec<Vec<Rational>>,
}

struct Class {
    residue: u64,
    weight: Rational,
    log_weight: Rational,
}

fn classes(p: u64, q: u64, v: u32) -> Result<Vec<Class>> {
    let q1 = q / p.pow(v);
    let d = multiplicative_order(p % q1.max(1), q1)?;
    let p_r = |e: u64| Rational::new(BigInt::one(), BigInt::from(p).pow(e as u32));
    let mut out: Vec<Class> = (0..v as u64)
        .map(|e| Class {
            residue: pow_mod(p, e, q),
            weight: p_r(e),
            log_weight: p_r(e) * Rational::from_integer(e.into()),
        })
        .collect();
    let x = p_r(d);
    let one_minus = Rational::one() - &x;
    for s in 0..d {
        let e0 = v as u64 + s;
        let base = p_r(e0);
        // Σ_k (e0 + kd) X^k = e0/(1−X) + dX/(1−X)²
        let log_sum = Rational::from_integer(e0.into()) / &one_minus
            + Rational::from_integer(d.into()) * &x / (&one_minus * &one_minus);
        out.push(Class {
            residue: pow_mod(p, e0, q),
            weight: &base / &one_minus,
            log_weight: base * log_sum,
        });
    }
    Ok(out)
}

impl ResidueWeightSystem {
    pub fn new(q: u64) -> Result<Self> {
        Self::with_cap(q, MAX_WEIGHT_MODULUS)
    }

    pub fn with_cap(q: u64, cap: u64) -> Result<Self> {
        if q > cap {
            return Err(Error::ModulusTooLarge { modulus: q, cap });
        }
        let fac = factorize(q)?;
        let primes: Vec<u64> = fac.primes().collect();
        let n = q as usize;
        let idx = |r: u64| ((r + q - 1) % q) as usize;
        let mut s = vec![Rational::zero(); n];
        let mut w = vec![vec![Rational::zero(); n]; primes.len()];
        s[idx(1 % q)] = Rational::one();
        for (i, &(p, v)) in fac.factors().iter().enumerate() {
            let cls = classes(p, q, v)?;
            let mut s2 = vec![Rational::zero(); n];
            let mut w2 = vec![vec![Rational::zero(); n]; primes.len()];
            for r in 1..=q {
                let k = idx(r);
                if s[k].is_zero() && w.iter().all(|row| row[k].is_zero()) {
                    continue;
                }
                for c in &cls {
                    let t = idx((r % q) * c.residue % q);
                    s2[t] += &s[k] * &c.weight;
                    for j in 0..i {
                        w2[j][t] += &w[j][k] * &c.weight;
                    }
                    w2[i][t] += &s[k] * &c.log_weight;
                }
            }
            s = s2;
            w = w2;
        }
        Ok(Self {
            modulus: q,
            primes,
            s,
            w,
        })
    }

    /// Shared instance for `q` (default cap).
    pub fn get(q: u64) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ResidueWeightSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(w) = cache.lock().unwrap().get(&q) {
            return Ok(w.clone());
        }
        let w = Arc::new(Self::new(q)?);
        Ok(cache.lock().unwrap().entry(q).or_insert(w).clone())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `S(r)` for `r = 1..=q`.
    pub fn s_values(&self) -> &[Rational] {
        &self.s
    }

    pub fn s(&self, r: i64) -> &Rational {
        &self.s[(r - 1).rem_euclid(self.modulus as i64) as usize]
    }

    /// `W_p(r)` for `r = 1..=q`.
    pub fn w_values(&self, p: u64) -> Option<&[Rational]> {
        let i = self.primes.iter().position(|&x| x == p)?;
        Some(&self.w[i])
    }
}

/// `residue_weight_system(q)`.
pub fn residue_weight_system(q: u64) -> Result<Arc<ResidueWeightSystem>> {
    ResidueWeightSystem::get(q)
}
