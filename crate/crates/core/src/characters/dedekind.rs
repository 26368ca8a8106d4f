//! The Dedekind determinant `det[F(x y^{-1})] = ∏_χ Σ_x χ(x) F(x)` over `(Z/qZ)^*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::enumerate_characters;
use crate::arith::{inverse_mod, units};
use crate::error::Result;
use crate::numeric::{embed, Ball, ComplexBall};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindReport {
    pub det: ComplexBall,
    pub product_formula: ComplexBall,
}

impl DedekindReport {
    pub fn agree(&self) -> bool {
        self.det.overlaps(&self.product_formula)
    }
}

/// Both sides of the Dedekind identity for `F` given on the units mod `q`.
pub fn dedekind_determinant<F>(q: u64, prec: u32, f: F) -> Result<DedekindReport>
where
    F: Fn(u64) -> ComplexBall,
{
    let us = units(q);
    let vals: Vec<ComplexBall> = us.iter().map(|&a| f(a)).collect();
    let idx = |a: u64| us.binary_search(&(a % q.max(1))).expect("unit");
    let matrix: Vec<Vec<ComplexBall>> = us
        .iter()
        .map(|&x| {
            us.iter()
                .map(|&y| {
                    let yi = inverse_mod(y, q).expect("unit");
                    vals[idx(if q == 1 { 0 } else { x * yi % q })].clone()
                })
                .collect()
        })
        .collect();
    let det = determinant(matrix, prec)?;

    let mut product = ComplexBall::one(prec);
    for chi in enumerate_characters(q)? {
        let mut s = ComplexBall::zero(prec);
        for (&a, v) in us.iter().zip(&vals) {
            s = &s + &(&embed(&chi.value(a as i64), prec)? * v);
        }
        product = &product * &s;
    }
    Ok(DedekindReport {
        det,
        product_formula: product,
    })
}

/// Gaussian elimination on complex balls. If no remaining pivot is separated
/// from zero, the rest of the matrix is enclosed by Hadamard's bound.
fn determinant(mut a: Vec<Vec<ComplexBall>>, prec: u32) -> Result<ComplexBall> {
    let n = a.len();
    let mut det = ComplexBall::one(prec);
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].contains_zero())
            .max_by(|&r, &s| {
                let m = |z: &ComplexBall| z.re.mid_f64().hypot(z.im.mid_f64());
                m(&a[r][col]).total_cmp(&m(&a[s][col]))
            });
        let Some(p) = pivot else {
            let bound = hadamard_bound(&a[col..], col);
            return Ok(det_times_disc(&det, &bound, prec));
        };
        if p != col {
            a.swap(p, col);
            det = -&det;
        }
        let piv = a[col][col].clone();
        det = &det * &piv;
        for r in col + 1..n {
            let factor = a[r][col].checked_div(&piv)?;
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &t;
            }
        }
    }
    Ok(det)
}

/// `|det| ≤ ∏_rows ‖row‖₂` restricted to columns `from..`.
fn hadamard_bound(rows: &[Vec<ComplexBall>], from: usize) -> Rational {
    let mut sq = Rational::one();
    for row in rows {
        let s: Rational = row[from..].iter().map(ComplexBall::norm_sqr_upper).sum();
        sq *= s;
    }
    sqrt_upper(&sq)
}

fn sqrt_upper(x: &Rational) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let k = 128u32;
    let scaled = (x * Rational::from_integer(BigInt::one() << (2 * k))).ceil().to_integer();
    let root = scaled.sqrt() + 1u32;
    Rational::new(root, BigInt::one() << k)
}

/// The disc `{ d·z : |z| ≤ bound }` enclosed in a rectangle.
fn det_times_disc(det: &ComplexBall, bound: &Rational, prec: u32) -> ComplexBall {
    let r = bound * Rational::new(det.norm_sqr_upper().ceil().to_integer() + 1u32, BigInt::one());
    let mut re = Ball::zero(prec);
    let mut im = Ball::zero(prec);
    re.add_error(&r);
    im.add_error(&r);
    ComplexBall::new(re, im)
}
