//! Dirichlet characters modulo `q`.

mod dedekind;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{euler_phi, factorize, gcd, lcm, multiplicative_order, pow_mod, units};
use crate::cyclotomic::CyclotomicElement;
use crate::error::{Error, Result};
use crate::{PeriodicFunction, Rational};

pub use dedekind::{dedekind_determinant, DedekindReport};

/// `(Z/qZ)^*` as a product of cyclic groups, one generator per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupStructure {
    modulus: u64,
    generators: Vec<u64>,
    orders: Vec<u64>,
    exponent: u64,
    /// `dlog[a]` for `0 ≤ a < q`; `None` off the units.
    dlog: Vec<Option<Vec<u64>>>,
}

fn crt_lift(residue: u64, modulus_part: u64, q: u64) -> u64 {
    // x ≡ residue (mod modulus_part), x ≡ 1 (mod q / modulus_part)
    let other = q / modulus_part;
    (0..modulus_part)
        .map(|k| 1 + k * other)
        .find(|x| x % modulus_part == residue % modulus_part)
        .expect("CRT solution exists for coprime moduli")
        % q.max(1)
}

fn primitive_root(pk: u64) -> u64 {
    let phi = euler_phi(pk).expect("positive");
    (2..pk)
        .find(|&g| gcd(g, pk) == 1 && multiplicative_order(g, pk).expect("unit") == phi)
        .expect("odd prime powers have primitive roots")
}

impl UnitGroupStructure {
    pub fn new(q: u64) -> Result<Self> {
        let fac = factorize(q)?;
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for &(p, k) in fac.factors() {
            let pk = p.pow(k);
            if p == 2 {
                if k >= 2 {
                    generators.push(crt_lift(pk - 1, pk, q));
                    orders.push(2);
                }
                if k >= 3 {
                    generators.push(crt_lift(5, pk, q));
                    orders.push(1 << (k - 2));
                }
            } else {
                generators.push(crt_lift(primitive_root(pk), pk, q));
                orders.push(euler_phi(pk)?);
            }
        }
        let exponent = orders.iter().fold(1, |m, &o| lcm(m, o));
        let mut dlog = vec![None; q as usize];
        let mut e = vec![0u64; orders.len()];
        loop {
            let x = generators
                .iter()
                .zip(&e)
                .fold(1 % q, |acc, (&g, &k)| acc * pow_mod(g, k, q) % q);
            debug_assert!(dlog[x as usize].is_none(), "generators are independent");
            dlog[x as usize] = Some(e.clone());
            // odometer over exponent vectors
            let mut i = 0;
            while i < e.len() {
                e[i] += 1;
                if e[i] < orders[i] {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == e.len() {
                break;
            }
        }
        Ok(Self {
            modulus: q,
            generators,
            orders,
            exponent,
            dlog,
        })
    }

    /// Cached structure for `q`.
    pub fn get(q: u64) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<UnitGroupStructure>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&q) {
            return Ok(g.clone());
        }
        let g = Arc::new(Self::new(q)?);
        Ok(cache.lock().unwrap().entry(q).or_insert(g).clone())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Exponent of the group: the lcm of the orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn discrete_log(&self, a: i64) -> Option<&[u64]> {
        let r = a.rem_euclid(self.modulus as i64) as usize;
        self.dlog[r].as_deref()
    }
}

/// `unit_group(q)`.
pub fn unit_group(q: u64) -> Result<Arc<UnitGroupStructure>> {
    UnitGroupStructure::get(q)
}

/// A character given by its exponents on the generators of the unit group.
#[derive(Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    group: Arc<UnitGroupStructure>,
    exponents: Vec<u64>,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirichletCharacter(q={}, e={:?})", self.group.modulus, self.exponents)
    }
}

impl DirichletCharacter {
    pub fn new(group: Arc<UnitGroupStructure>, exponents: Vec<u64>) -> Result<Self> {
        if exponents.len() != group.orders.len()
            || exponents.iter().zip(&group.orders).any(|(e, o)| e >= o)
        {
            return Err(Error::InvalidArgument(format!(
                "exponents {exponents:?} do not fit orders {:?}",
                group.orders
            )));
        }
        Ok(Self { group, exponents })
    }

    pub fn principal(q: u64) -> Result<Self> {
        let g = unit_group(q)?;
        let n = g.orders.len();
        Self::new(g, vec![0; n])
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn group(&self) -> &Arc<UnitGroupStructure> {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Modulus `m` of the field `Q(ζ_m)` holding the values.
    pub fn value_modulus(&self) -> u64 {
        self.group.exponent
    }

    /// `k` with `χ(a) = ζ_m^k`, or `None` when `gcd(a, q) > 1`.
    pub fn value_index(&self, a: i64) -> Option<u64> {
        let m = self.group.exponent;
        let d = self.group.discrete_log(a)?;
        let k = d
            .iter()
            .zip(&self.exponents)
            .zip(&self.group.orders)
            .map(|((&l, &e), &o)| (l * e % o) * (m / o))
            .sum::<u64>();
        Some(k % m)
    }

    pub fn value(&self, a: i64) -> CyclotomicElement {
        let m = self.value_modulus();
        match self.value_index(a) {
            Some(k) => CyclotomicElement::zeta_pow(m, k as i64),
            None => CyclotomicElement::zero(m),
        }
        .expect("character field within cap")
    }

    /// Values at `a = 1..=q`.
    pub fn values(&self) -> Vec<CyclotomicElement> {
        (1..=self.modulus() as i64).map(|a| self.value(a)).collect()
    }

    pub fn conj(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(&self.group.orders)
            .map(|(&e, &o)| (o - e) % o)
            .collect();
        Self {
            group: self.group.clone(),
            exponents,
        }
    }

    /// `χ(−1) = −1`.
    pub fn is_odd(&self) -> bool {
        let m = self.value_modulus();
        self.value_index(-1).is_some_and(|k| 2 * k == m)
    }
}

/// All `φ(q)` characters, principal first.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    let g = unit_group(q)?;
    let mut out = Vec::with_capacity(g.order() as usize);
    let mut e = vec![0u64; g.orders.len()];
    loop {
        out.push(DirichletCharacter::new(g.clone(), e.clone())?);
        let mut i = 0;
        while i < e.len() {
            e[i] += 1;
            if e[i] < g.orders[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == e.len() {
            break;
        }
    }
    Ok(out)
}

/// `(f, χ) = φ(q)^{-1} Σ_{(a,q)=1} f(a) conj(χ(a))`.
pub fn inner_product_character(f: &PeriodicFunction, chi: &DirichletCharacter) -> Result<CyclotomicElement> {
    let q = f.modulus();
    if q != chi.modulus() {
        return Err(Error::ModulusMismatch(q, chi.modulus()));
    }
    let (d, ints) = f.cleared_integers();
    let terms: Vec<(i64, BigInt)> = units(q)
        .into_iter()
        .filter_map(|a| {
            let v = &ints[a as usize - 1];
            (!v.is_zero()).then(|| (-(chi.value_index(a as i64).expect("unit") as i64), v.clone()))
        })
        .collect();
    CyclotomicElement::from_exponent_sum(chi.value_modulus(), &terms, d * BigInt::from(euler_phi(q)?))
}

/// `(g, χ)` for every character; `g` must vanish off the units.
pub fn character_decompose(g: &PeriodicFunction) -> Result<Vec<(DirichletCharacter, CyclotomicElement)>> {
    if !g.is_unit_supported() {
        return Err(Error::NotUnitSupported(g.modulus()));
    }
    enumerate_characters(g.modulus())?
        .into_iter()
        .map(|chi| {
            let c = inner_product_character(g, &chi)?;
            Ok((chi, c))
        })
        .collect()
}

/// `Σ_χ c_χ χ(a)` for `a = 1..=q`, as rationals when possible.
pub fn character_reconstruct(
    q: u64,
    parts: &[(DirichletCharacter, CyclotomicElement)],
) -> Result<PeriodicFunction> {
    let m = unit_group(q)?.exponent();
    let values = (1..=q as i64)
        .map(|a| {
            let mut acc = CyclotomicElement::zero(m)?;
            for (chi, c) in parts {
                acc = acc.add(&c.mul(&chi.value(a))?)?;
            }
            acc.as_rational().ok_or(Error::NonRationalInverse)
        })
        .collect::<Result<Vec<Rational>>>()?;
    PeriodicFunction::new(q, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn generators() {
        let g = unit_group(4).unwrap();
        assert_eq!((g.generators(), g.orders()), (&[3u64][..], &[2u64][..]));
        let g = unit_group(8).unwrap();
        assert_eq!((g.generators(), g.orders()), (&[7u64, 5][..], &[2u64, 2][..]));
        let g = unit_group(12).unwrap();
        assert_eq!(g.generators(), &[7, 5]);
        let g = unit_group(5).unwrap();
        assert_eq!((g.generators(), g.orders()), (&[2u64][..], &[4u64][..]));
        for q in [1u64, 2] {
            assert!(unit_group(q).unwrap().generators().is_empty());
        }
    }

    #[test]
    fn dlog_covers_units() {
        for q in 1..=60u64 {
            let g = unit_group(q).unwrap();
            assert_eq!(g.order(), euler_phi(q).unwrap());
            for a in 1..=q {
                assert_eq!(g.discrete_log(a as i64).is_some(), gcd(a, q) == 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn mod4_characters() {
        let chars = enumerate_characters(4).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_principal());
        assert_eq!(chars[1].value(3).as_rational(), Some(r(-1, 1)));
        assert!(chars[1].is_odd());
        assert_eq!(enumerate_characters(12).unwrap().len(), 4);
    }

    #[test]
    fn orthogonality() {
        for q in 1..=24u64 {
            let chars = enumerate_characters(q).unwrap();
            let m = unit_group(q).unwrap().exponent();
            let phi = euler_phi(q).unwrap();
            for (i, x) in chars.iter().enumerate() {
                for (j, y) in chars.iter().enumerate() {
                    let mut s = CyclotomicElement::zero(m).unwrap();
                    for a in units(q) {
                        s = s.add(&x.value(a as i64).mul(&y.conj().value(a as i64)).unwrap()).unwrap();
                    }
                    let want = if i == j { phi } else { 0 };
                    assert_eq!(s.as_rational(), Some(r(want as i64, 1)), "q={q}");
                }
            }
        }
    }

    #[test]
    fn multiplicative() {
        for q in 2..=36u64 {
            for chi in enumerate_characters(q).unwrap() {
                for a in units(q) {
                    for b in units(q) {
                        let lhs = chi.value((a * b) as i64);
                        let rhs = chi.value(a as i64).mul(&chi.value(b as i64)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_indicator_and_principal() {
        for q in [5u64, 8, 12] {
            let phi = euler_phi(q).unwrap() as i64;
            let delta = PeriodicFunction::from_fn(q, |a| if a == 1 { Rational::one() } else { Rational::zero() });
            for (_, c) in character_decompose(&delta).unwrap() {
                assert_eq!(c.as_rational(), Some(r(1, phi)));
            }
            let chi0 = PeriodicFunction::from_fn(q, |a| {
                if gcd(a, q) == 1 { Rational::one() } else { Rational::zero() }
            });
            for (chi, c) in character_decompose(&chi0).unwrap() {
                let want = if chi.is_principal() { 1 } else { 0 };
                assert_eq!(c.as_rational(), Some(r(want, 1)));
            }
            assert_eq!(character_reconstruct(q, &character_decompose(&delta).unwrap()).unwrap(), delta);
        }
        let bad = PeriodicFunction::from_integers(4, &[1, 1, 0, 0]).unwrap();
        assert_eq!(character_decompose(&bad).unwrap_err(), Error::NotUnitSupported(4));
    }
}
