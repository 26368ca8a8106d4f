//! Numeric checks of the digamma sum bound and the divisor-sum identity.

use super::ball::Ball;
use super::digamma::digamma;
use super::elementary::ln_int;
use super::gamma::euler_gamma;
use super::lvalue::{l_one, Method};
use crate::arith::{divisors, euler_phi, gcd, mobius, units};
use crate::error::{Error, Result};
use crate::par::{map_range, Execution};
use crate::{PeriodicFunction, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma4Result {
    pub q: u64,
    /// `Σ_{(a,q)=1} ψ(a/q)`.
    pub sum: Ball,
    /// `−γ φ(q)`.
    pub bound: Ball,
    pub holds: bool,
}

pub fn lemma4_check(q: u64, prec: u32) -> Result<Lemma4Result> {
    if q < 2 {
        return Err(Error::InvalidArgument("needs q ≥ 2".into()));
    }
    let mut sum = Ball::zero(prec);
    for a in units(q) {
        sum = &sum + &digamma(&Rational::new(a.into(), q.into()), prec)?;
    }
    let bound = -&euler_gamma(prec).mul_int(euler_phi(q)?);
    let holds = sum.strictly_below(&bound);
    Ok(Lemma4Result { q, sum, bound, holds })
}

/// `lemma4_check` for every `q` in the range.
pub fn lemma4_sweep(range: std::ops::Range<u64>, prec: u32, exec: Execution) -> Result<Vec<Lemma4Result>> {
    map_range(exec, range, |q| lemma4_check(q, prec)).into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MurtyCheck {
    pub lhs: Ball,
    pub rhs: Ball,
    pub agree: bool,
}

/// `g = 1` on units, `g(q) = −φ(q)`, `0` elsewhere.
pub fn murty_g(q: u64) -> Result<PeriodicFunction> {
    let phi = euler_phi(q)? as i64;
    Ok(PeriodicFunction::from_fn(q, |a| {
        Rational::from_integer(if a == q { -phi } else { i64::from(gcd(a, q) == 1) }.into())
    }))
}

/// `L(1,g)` by the digamma formula against `q^{-1} Σ_{d|q} μ(q/d) d log d`.
pub fn murty_g_identity(q: u64, prec: u32) -> Result<MurtyCheck> {
    if q < 2 {
        return Err(Error::InvalidArgument("needs q ≥ 2".into()));
    }
    let lhs = l_one(&murty_g(q)?, prec, Method::Digamma)?.value;
    let wp = prec + 16;
    let mut rhs = Ball::zero(wp);
    for d in divisors(q)? {
        let mu = mobius(q / d)?;
        if mu != 0 && d > 1 {
            rhs = &rhs + &ln_int(d, wp)?.mul_int(i64::from(mu) * d as i64);
        }
    }
    let rhs = rhs.div_int(q);
    let agree = lhs.overlaps(&rhs);
    Ok(MurtyCheck { lhs, rhs, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{ln2, ln_rational};

    #[test]
    fn closed_forms() {
        // ψ(1/3)+ψ(2/3) = −2γ − 3 ln 3, ψ(1/4)+ψ(3/4) = −2γ − 6 ln 2
        let g = euler_gamma(128).mul_int(2);
        let r3 = lemma4_check(3, 128).unwrap();
        let want3 = -&(&g + &ln_rational(&Rational::from_integer(3.into()), 128).unwrap().mul_int(3));
        assert!(r3.sum.overlaps(&want3) && r3.holds);
        let r4 = lemma4_check(4, 128).unwrap();
        assert!(r4.sum.overlaps(&-&(&g + &ln2(128).mul_int(6))) && r4.holds);
    }

    #[test]
    fn small_sweep() {
        for r in lemma4_sweep(2..60, 64, Execution::default()).unwrap() {
            assert!(r.holds, "q={}", r.q);
        }
    }

    #[test]
    fn murty() {
        let m = murty_g_identity(4, 128).unwrap();
        assert!(m.agree);
        assert!(m.lhs.overlaps(&ln2(160).mul_rational(&Rational::new(3.into(), 2.into()))));
        for q in [2u64, 6, 7, 12, 30] {
            let m = murty_g_identity(q, 128).unwrap();
            assert!(m.agree, "q={q}");
            assert!((&m.lhs - &m.rhs).abs_below_pow2(-100));
        }
        let p = murty_g_identity(7, 96).unwrap();
        assert!(p.rhs.overlaps(&ln_int(7, 96).unwrap()));
    }
}
