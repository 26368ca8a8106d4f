//! Exact even-index Bernoulli numbers from the tangent numbers.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::Rational;

static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Tangent numbers `T_1..=T_n` by the in-place recurrence of Brent and Harvey.
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    t
}

/// `B_{2k}` for `k ≥ 1`.
pub fn bernoulli_even(k: usize) -> Rational {
    assert!(k >= 1, "index must be positive");
    let table = TABLE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = table.lock().unwrap_or_else(|e| e.into_inner());
    if guard.len() < k {
        let n = (k.max(16)).max(guard.len() * 2);
        let t = tangent_numbers(n);
        let mut out = Vec::with_capacity(n);
        for (i, tk) in t.iter().enumerate().skip(1) {
            let two_k = 2 * i;
            let pow = BigInt::one() << two_k;
            let den = &pow * (&pow - 1u32);
            let mut b = Rational::new(tk * BigInt::from(two_k), den);
            if i % 2 == 0 {
                b = -b;
            }
            out.push(b);
        }
        *guard = out;
    }
    guard[k - 1].clone()
}
