//! The two linear conditions of the criterion and the decision built on them.

use std::fmt;

use num_traits::Zero;

use super::epsilon::epsilon;
use super::weights::ResidueWeightSystem;
use crate::arith::{euler_phi, gcd, units, v_p};
use crate::error::{Error, Result};
use crate::par::{map_slice, Execution};
use crate::{PeriodicFunction, Rational};

fn require_zero_mean(f: &PeriodicFunction) -> Result<()> {
    if f.is_zero_mean() {
        Ok(())
    } else {
        Err(Error::Pole {
            residue: f.mean().to_string(),
        })
    }
}

fn require_prime_divisor(p: u64, q: u64) -> Result<()> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q % p != 0 {
        return Err(Error::PrimeNotDivisor { p, modulus: q });
    }
    Ok(())
}

/// `Σ_ρ S(ρ) f(aρ)`, i.e. `Σ_{m ∈ M(q)} f(am)/m`.
pub fn condition_a(f: &PeriodicFunction, a: i64) -> Result<Rational> {
    let q = f.modulus();
    if gcd(a.rem_euclid(q as i64) as u64, q) != 1 {
        return Err(Error::NotUnit { a, modulus: q });
    }
    let w = ResidueWeightSystem::get(q)?;
    Ok(condition_a_with(&w, f, a))
}

fn condition_a_with(w: &ResidueWeightSystem, f: &PeriodicFunction, a: i64) -> Rational {
    let mut acc = Rational::zero();
    for (i, s) in w.s_values().iter().enumerate() {
        if !s.is_zero() {
            let v = f.at(a * (i as i64 + 1));
            if !v.is_zero() {
                acc += s * v;
            }
        }
    }
    acc
}

/// `Σ_{(r,q)>1} f(r) ε(r,p)`.
pub fn condition_b(f: &PeriodicFunction, p: u64) -> Result<Rational> {
    let q = f.modulus();
    require_prime_divisor(p, q)?;
    let mut acc = Rational::zero();
    for (i, v) in f.values().iter().enumerate() {
        let r = i as u64 + 1;
        if gcd(r, q) > 1 && !v.is_zero() {
            acc += v * epsilon(r, p, q)?;
        }
    }
    Ok(acc)
}

/// `(f_ρ, χ0) = φ(q)^{-1} Σ_{(a,q)=1} f(aρ)` for `ρ = 1..=q`.
fn principal_projections(f: &PeriodicFunction) -> Result<Vec<Rational>> {
    let q = f.modulus();
    let us = units(q);
    let phi = Rational::from_integer(euler_phi(q)?.into());
    Ok((1..=q as i64)
        .map(|rho| us.iter().map(|&a| f.at(a as i64 * rho)).sum::<Rational>() / &phi)
        .collect())
}

/// The coefficient `T_p` of `log p` in `Σ_{b ∈ M(q)} (f_b, χ0) log(b) / b`.
pub fn theorem3_log_condition(f: &PeriodicFunction) -> Result<Vec<(u64, Rational)>> {
    require_zero_mean(f)?;
    let w = ResidueWeightSystem::get(f.modulus())?;
    let proj = principal_projections(f)?;
    Ok(w.primes()
        .iter()
        .map(|&p| {
            let t = w
                .w_values(p)
                .expect("prime of q")
                .iter()
                .zip(&proj)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum();
            (p, t)
        })
        .collect())
}

/// Both sides of the log-coefficient identity for one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogCoefficientCheck {
    pub p: u64,
    /// `T_p` from the weights `W_p`.
    pub log_coefficient: Rational,
    /// `φ(q)^{-1} Σ_{(r,q)>1} f(r) ε(r,p)`.
    pub epsilon_side: Rational,
    /// `q₁/φ(q₁)` with `q₁ = q / p^{v_p(q)}`.
    pub cofactor: Rational,
}

impl LogCoefficientCheck {
    pub fn holds(&self) -> bool {
        self.log_coefficient == self.epsilon_side
    }

    /// Whether `T_p = (q₁/φ(q₁))·φ(q)^{-1}·Σ f(r)ε(r,p)` also holds.
    pub fn holds_with_cofactor(&self) -> bool {
        self.log_coefficient == &self.cofactor * &self.epsilon_side
    }

    /// `T_p = 0` exactly when the `ε`-sum vanishes.
    pub fn zero_sets_agree(&self) -> bool {
        self.log_coefficient.is_zero() == self.epsilon_side.is_zero()
    }
}

pub fn theorem4_details(f: &PeriodicFunction) -> Result<Vec<LogCoefficientCheck>> {
    let q = f.modulus();
    let phi = Rational::from_integer(euler_phi(q)?.into());
    theorem3_log_condition(f)?
        .into_iter()
        .map(|(p, t)| {
            let q1 = q / p.pow(v_p(q, p)?);
            Ok(LogCoefficientCheck {
                p,
                log_coefficient: t,
                epsilon_side: condition_b(f, p)? / &phi,
                cofactor: Rational::new(q1.into(), euler_phi(q1)?.into()),
            })
        })
        .collect()
}

/// Checks `T_p = φ(q)^{-1} Σ_{(r,q)>1} f(r) ε(r,p)` for every `p | q`.
pub fn theorem4_equivalence_check(f: &PeriodicFunction) -> Result<bool> {
    Ok(theorem4_details(f)?.iter().all(LogCoefficientCheck::holds))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Okada,
    Theorem1,
    Both,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Okada => "okada",
            Route::Theorem1 => "theorem1",
            Route::Both => "both",
        })
    }
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "okada" => Ok(Route::Okada),
            "theorem1" => Ok(Route::Theorem1),
            "both" => Ok(Route::Both),
            _ => Err(Error::InvalidArgument(format!("unknown route {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingCertificate {
    pub decision: bool,
    /// `(a, condition_a(f, a))` for every unit `a`.
    pub condition_a_residuals: Vec<(u64, Rational)>,
    /// `(p, condition_b(f, p))` for every prime `p | q`.
    pub condition_b_residuals: Vec<(u64, Rational)>,
    pub route: Route,
}

/// Decides `L(1,f) = 0` exactly.
pub fn decide_vanishing(f: &PeriodicFunction) -> Result<VanishingCertificate> {
    require_zero_mean(f)?;
    let q = f.modulus();
    let w = ResidueWeightSystem::get(q)?;
    let a_res: Vec<(u64, Rational)> = units(q)
        .into_iter()
        .map(|a| (a, condition_a_with(&w, f, a as i64)))
        .collect();
    let b_res: Vec<(u64, Rational)> = w
        .primes()
        .iter()
        .map(|&p| Ok((p, condition_b(f, p)?)))
        .collect::<Result<_>>()?;
    let decision = a_res.iter().chain(&b_res).all(|(_, r)| r.is_zero());
    Ok(VanishingCertificate {
        decision,
        condition_a_residuals: a_res,
        condition_b_residuals: b_res,
        route: Route::Okada,
    })
}

/// [`decide_vanishing`] over a batch; results keep the input order.
pub fn decide_batch(fs: &[PeriodicFunction], exec: Execution) -> Vec<Result<VanishingCertificate>> {
    map_slice(exec, fs, decide_vanishing)
}
