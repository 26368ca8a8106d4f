//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p lseries-core --test acceptance`.

use std::time::{Duration, Instant};

use lseries_core::arith::{euler_phi, factorize, units};
use lseries_core::characters::{dedekind_determinant, enumerate_characters};
use lseries_core::corpus::{self, mixed_corpus, random_unit_supported, random_zero_mean};
use lseries_core::cyclotomic::theorem1_decide;
use lseries_core::numeric::{
    digamma, l_one, l_one_cyclotomic, l_s, lemma4_sweep, ln2, murty_g_identity, pi, Ball,
    ComplexBall, Method,
};
use lseries_core::okada::{
    condition_a, decide_vanishing, epsilon, kernel_basis, lemma1_bruteforce, residue_weight_system,
    theorem4_details,
};
use lseries_core::par::Execution;
use lseries_core::{PeriodicFunction, Rational};

const SEED: u64 = 0x5EED_2024;
const CORPUS_MODULI: [u64; 10] = [4, 6, 8, 9, 12, 16, 18, 24, 30, 36];
const CORPUS_PER_Q: usize = 200;

type Outcome = Result<String, String>;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ten_pow(e: i32) -> Rational {
    let t = Rational::from_integer(10.into());
    if e >= 0 {
        num_traits::pow::Pow::pow(&t, e as u32)
    } else {
        num_traits::pow::Pow::pow(&t.recip(), (-e) as u32)
    }
}

/// `|x − y| + rad` bound, as an upper estimate of the distance between balls.
fn distance_upper(x: &Ball, y: &Ball) -> Rational {
    (x - y).abs_upper()
}

fn within_limit(label: &str, elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed <= limit {
        Ok(String::new())
    } else {
        Err(format!("{label} took {elapsed:?}, limit {limit:?}"))
    }
}

fn full_corpus() -> Vec<PeriodicFunction> {
    let mut out = Vec::new();
    for q in 1..=36u64 {
        out.extend(kernel_basis(q).expect("kernel"));
    }
    for q in CORPUS_MODULI {
        out.extend(mixed_corpus(q, CORPUS_PER_Q, SEED).expect("corpus"));
    }
    out
}

fn c1_kernel_golden() -> Outcome {
    let t = Instant::now();
    let b4 = kernel_basis(4).map_err(|e| e.to_string())?;
    let want = PeriodicFunction::from_integers(4, &[1, -3, 1, 1]).unwrap();
    if b4 != vec![want] {
        return Err(format!("q=4 basis {b4:?}"));
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        let d = kernel_basis(q).map_err(|e| e.to_string())?.len();
        if d != 0 {
            return Err(format!("q={q} has dimension {d}"));
        }
    }
    within_limit("kernel", t.elapsed(), Duration::from_secs(5))?;
    Ok(format!("q=4 basis [1,-3,1,1], primes dim 0, {:.2?}", t.elapsed()))
}

fn c2_cross_route(corpus: &[PeriodicFunction]) -> Outcome {
    let t = Instant::now();
    let mut disagreements = Vec::new();
    let mut vanishing = 0usize;
    for f in corpus {
        let okada = decide_vanishing(f).map_err(|e| e.to_string())?.decision;
        let t1 = theorem1_decide(f, 128).map_err(|e| e.to_string())?.vanishing;
        vanishing += usize::from(okada);
        if okada != t1 {
            disagreements.push(f.to_string());
        }
    }
    if !disagreements.is_empty() {
        return Err(format!("{} disagreements, first {}", disagreements.len(), disagreements[0]));
    }
    within_limit("cross-route", t.elapsed(), Duration::from_secs(600))?;
    Ok(format!(
        "{} functions ({vanishing} vanishing), 0 disagreements, {:.2?}",
        corpus.len(),
        t.elapsed()
    ))
}

fn c3_numeric_concordance(corpus: &[PeriodicFunction]) -> Outcome {
    let tol = ten_pow(-40);
    let mut violations = 0usize;
    let mut first = None;
    for f in corpus {
        let decision = decide_vanishing(f).map_err(|e| e.to_string())?.decision;
        let v = l_one(f, 256, Method::Digamma).map_err(|e| e.to_string())?.value;
        let ok = if decision {
            v.contains_zero() && v.rad_rational() < tol
        } else {
            v.is_nonzero()
        };
        if !ok {
            violations += 1;
            first.get_or_insert_with(|| format!("{f}: {v}"));
        }
    }
    match first {
        None => Ok(format!("{} functions, 0 violations at 256 bits", corpus.len())),
        Some(f) => Err(format!("{violations} violations, first {f}")),
    }
}

fn c4_golden_numeric() -> Outcome {
    let tol = ten_pow(-30);
    let reference_prec = 200;
    let f = PeriodicFunction::from_integers(4, &[1, -2, 1, 0]).unwrap();
    let chi = PeriodicFunction::from_integers(4, &[1, 0, -1, 0]).unwrap();
    let eta = PeriodicFunction::from_integers(2, &[1, -1]).unwrap();
    let ln2_ref = ln2(reference_prec);
    let pi_ref = pi(reference_prec);
    let murty = murty_g_identity(4, 128).map_err(|e| e.to_string())?;
    let three_halves_ln2 = ln2_ref.mul_rational(&rat(3, 2));
    let cases: Vec<(&str, Ball, Ball)> = vec![
        (
            "L1((1,-2,1,0) mod 4) = ln2/2",
            l_one(&f, 128, Method::Digamma).map_err(|e| e.to_string())?.value,
            ln2_ref.div_int(2),
        ),
        (
            "L1(odd char mod 4) = pi/4",
            l_one(&chi, 128, Method::Digamma).map_err(|e| e.to_string())?.value,
            pi_ref.div_int(4),
        ),
        ("murty_g(4) lhs = 3/2 ln2", murty.lhs.clone(), three_halves_ln2.clone()),
        ("murty_g(4) rhs = 3/2 ln2", murty.rhs.clone(), three_halves_ln2),
        (
            "L_s((1,-1) mod 2, 2) = pi^2/12",
            l_s(&eta, &rat(2, 1), 128).map_err(|e| e.to_string())?.value,
            pi_ref.sqr().div_int(12),
        ),
    ];
    for (name, got, want) in &cases {
        if distance_upper(got, want) >= tol {
            return Err(format!("{name}: got {got}"));
        }
    }
    Ok(format!("{} values within 1e-30", cases.len()))
}

fn c5_epsilon_series() -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    for q in 2..=30u64 {
        for p in factorize(q).unwrap().primes() {
            for r in 1..=q {
                let e = epsilon(r, p, q).map_err(|e| e.to_string())?;
                let (partial, tail) = lemma1_bruteforce(r, p, q, 40).map_err(|e| e.to_string())?;
                let diff = &e - &partial;
                if diff < Rational::from_integer(0.into()) || diff > tail {
                    return Err(format!("q={q} p={p} r={r}: eps {e}, partial {partial}"));
                }
                checked += 1;
            }
        }
    }
    within_limit("lemma 1", t.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{checked} triples at J=40, {:.2?}", t.elapsed()))
}

fn c6_unit_average() -> Outcome {
    let mut rng = corpus::rng(SEED + 6);
    for q in 1..=36u64 {
        for _ in 0..100 {
            let f = random_zero_mean(&mut rng, q, 9, 4);
            let mut total = Rational::from_integer(0.into());
            for a in units(q) {
                total += condition_a(&f, a as i64).map_err(|e| e.to_string())?;
            }
            if total != Rational::from_integer(0.into()) {
                return Err(format!("q={q}: unit sum {total} for {f}"));
            }
        }
    }
    for q in 1..=60u64 {
        let w = residue_weight_system(q).map_err(|e| e.to_string())?;
        let us = units(q);
        for r in 1..=q {
            let mut acc = Rational::from_integer(0.into());
            for rho in 1..=q {
                let count = us.iter().filter(|&&a| (a * rho) % q == r % q).count();
                if count > 0 {
                    acc += w.s(rho as i64) * Rational::from_integer(count.into());
                }
            }
            if acc != Rational::from_integer(1.into()) {
                return Err(format!("q={q} r={r}: weight sum {acc}"));
            }
        }
    }
    Ok("3600 functions exact; weight identity for q<=60".into())
}

fn c7_log_coefficients() -> Outcome {
    let mut rng = corpus::rng(SEED + 7);
    let mut cofactor_failures = Vec::new();
    for q in [4u64, 6, 8, 9, 12, 18, 30] {
        let mut fails = 0;
        for _ in 0..200 {
            let f = random_zero_mean(&mut rng, q, 9, 4);
            let details = theorem4_details(&f).map_err(|e| e.to_string())?;
            if !details.iter().all(|d| d.holds() && d.zero_sets_agree()) {
                return Err(format!("q={q}: identity fails for {f}"));
            }
            if !details.iter().all(|d| d.holds_with_cofactor()) {
                fails += 1;
            }
        }
        if fails > 0 {
            cofactor_failures.push(format!("q={q}:{fails}/200"));
        }
    }
    let w6 = residue_weight_system(6).map_err(|e| e.to_string())?;
    let want = [rat(1, 1), rat(2, 3), rat(1, 2), rat(1, 3), rat(0, 1), rat(1, 2)];
    if w6.s_values() != want {
        return Err(format!("S(6) = {:?}", w6.s_values()));
    }
    for q in 1..=60u64 {
        let w = residue_weight_system(q).map_err(|e| e.to_string())?;
        let total: Rational = w.s_values().iter().sum();
        if total != rat(q as i64, euler_phi(q).unwrap() as i64) {
            return Err(format!("q={q}: total weight {total}"));
        }
    }
    println!(
        "INFO  7  T_p = phi(q)^-1 sum f(r)eps(r,p) holds exactly; the form with extra factor q1/phi(q1) fails on {}",
        if cofactor_failures.is_empty() { "none".into() } else { cofactor_failures.join(" ") }
    );
    Ok("1400 functions exact; S(6) table; total weight q/phi(q) for q<=60".into())
}

fn c8_symmetries(corpus: &[PeriodicFunction]) -> Outcome {
    let mut checked = 0usize;
    for f in corpus {
        let d = decide_vanishing(f).map_err(|e| e.to_string())?.decision;
        let (fe, fo) = f.even_odd_split();
        let de = decide_vanishing(&fe).map_err(|e| e.to_string())?.decision;
        let dd = decide_vanishing(&fo).map_err(|e| e.to_string())?.decision;
        if d != (de && dd) {
            return Err(format!("even/odd split breaks for {f}"));
        }
        for a in units(f.modulus()) {
            let fa = f.dilate(a as i64).map_err(|e| e.to_string())?;
            if decide_vanishing(&fa).map_err(|e| e.to_string())?.decision != d {
                return Err(format!("dilation by {a} breaks for {f}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{} functions, {checked} dilations, 0 violations", corpus.len()))
}

fn c9_bbw() -> Outcome {
    let mut rng = corpus::rng(SEED + 9);
    for q in [6u64, 8, 12, 15] {
        for _ in 0..500 {
            let f = random_unit_supported(&mut rng, q, 9, 4);
            if decide_vanishing(&f).map_err(|e| e.to_string())?.decision {
                return Err(format!("q={q}: {f} decided vanishing"));
            }
        }
    }
    Ok("2000 functions, all nonvanishing".into())
}

fn c10_digamma_bound() -> Outcome {
    let t = Instant::now();
    let res = lemma4_sweep(2..1001, 96, Execution::default()).map_err(|e| e.to_string())?;
    if let Some(bad) = res.iter().find(|r| !r.holds) {
        return Err(format!("q={}: sum {} vs bound {}", bad.q, bad.sum, bad.bound));
    }
    within_limit("lemma 4", t.elapsed(), Duration::from_secs(120))?;
    Ok(format!("2<=q<=1000 separated at 96 bits, {:.2?}", t.elapsed()))
}

fn c11_dedekind() -> Outcome {
    let prec = 128;
    let mut notes = Vec::new();
    for q in [3u64, 4, 5, 8, 12] {
        let psi = |a: u64| ComplexBall::from_real(digamma(&Rational::new(a.into(), q.into()), prec).unwrap());
        let rep = dedekind_determinant(q, prec, psi).map_err(|e| e.to_string())?;
        if !rep.agree() {
            return Err(format!("q={q}: det {} vs product {}", rep.det, rep.product_formula));
        }
        // (Σψ)·∏_{χ≠χ0} (−q L(1,χ)), since Σ_x χ(x)ψ(x/q) = −q L(1,χ)
        let mut sum_psi = Ball::zero(prec);
        for a in units(q) {
            sum_psi = &sum_psi + &digamma(&Rational::new(a.into(), q.into()), prec).unwrap();
        }
        let mut prod = ComplexBall::from_real(sum_psi);
        for chi in enumerate_characters(q).unwrap().into_iter().filter(|c| !c.is_principal()) {
            let l = l_one_cyclotomic(&chi.values(), prec).map_err(|e| e.to_string())?;
            prod = &prod * &l.mul_int(-(q as i64));
        }
        if !rep.det.overlaps(&prod) {
            return Err(format!("q={q}: det {} vs L-value form {}", rep.det, prod));
        }
        let phi = euler_phi(q).unwrap();
        let literal = if (phi - 1) % 2 == 1 { -&prod } else { prod.clone() };
        notes.push(format!(
            "q={q}:{}",
            if rep.det.overlaps(&literal) { "literal ok" } else { "literal off by sign" }
        ));
    }
    println!(
        "INFO 11  det = (sum psi) * prod_(chi!=chi0) (-q L(1,chi)); without the minus sign: {}",
        notes.join(" ")
    );
    Ok("q in {3,4,5,8,12} agree within radii at 128 bits".into())
}

fn main() {
    let start = Instant::now();
    let corpus = full_corpus();
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "kernel golden vectors", Box::new(c1_kernel_golden)),
        (2, "cross-route agreement", Box::new(|| c2_cross_route(&corpus))),
        (3, "exact-numeric concordance", Box::new(|| c3_numeric_concordance(&corpus))),
        (4, "golden numeric values", Box::new(c4_golden_numeric)),
        (5, "epsilon series oracle", Box::new(c5_epsilon_series)),
        (6, "unit-average invariant", Box::new(c6_unit_average)),
        (7, "log-coefficient identity", Box::new(c7_log_coefficients)),
        (8, "even/odd split and dilation", Box::new(|| c8_symmetries(&corpus))),
        (9, "unit-supported functions never vanish", Box::new(c9_bbw)),
        (10, "digamma sum bound", Box::new(c10_digamma_bound)),
        (11, "Dedekind determinant", Box::new(c11_dedekind)),
    ];
    let mut failed = 0;
    for (id, name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS {id:>2}  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2}  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
