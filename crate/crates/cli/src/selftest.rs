//! Invariant suites behind `selftest`. Level `n` covers moduli up to `12n`.

use std::fmt::Write;

use lseries_core::arith::factorize;
use lseries_core::characters::dedekind_determinant;
use lseries_core::corpus;
use lseries_core::cyclotomic::{fourier_inverse, fourier_transform, theorem1_decide};
use lseries_core::numeric::{digamma, lemma4_sweep, l_one, ComplexBall, Method};
use lseries_core::okada::{decide_vanishing, epsilon, kernel_basis, lemma1_bruteforce, theorem4_equivalence_check};
use lseries_core::par::Execution;
use lseries_core::{PeriodicFunction, Rational};

use crate::report::{CheckLine, SelftestReport, SCHEMA};
use crate::{CliError, Outcome};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn core<T>(r: lseries_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn corpus_for(level: u32) -> Result<Vec<PeriodicFunction>, String> {
    let count = 12 * level as usize;
    let mut out = Vec::new();
    for q in 1..=12 * level as u64 {
        out.extend(core(corpus::mixed_corpus(q, count, 0x5EED))?);
    }
    Ok(out)
}

fn kernel_golden() -> Check {
    let b = core(kernel_basis(4))?;
    let want = PeriodicFunction::from_integers(4, &[1, -3, 1, 1]).unwrap();
    ensure(b == vec![want], || format!("q=4 basis {b:?}"))?;
    for q in [1u64, 2, 3, 5, 7] {
        ensure(core(kernel_basis(q))?.is_empty(), || format!("q={q} kernel not trivial"))?;
    }
    Ok("q=4 basis [1,-3,1,1]; primes dim 0".into())
}

fn routes(fs: &[PeriodicFunction]) -> Check {
    let mut vanishing = 0;
    for f in fs {
        let a = core(decide_vanishing(f))?.decision;
        let b = core(theorem1_decide(f, 128))?.vanishing;
        ensure(a == b, || format!("routes disagree on {f}"))?;
        vanishing += a as usize;
    }
    Ok(format!("{} functions ({vanishing} vanishing) agree", fs.len()))
}

fn concordance(fs: &[PeriodicFunction]) -> Check {
    for f in fs {
        let d = core(decide_vanishing(f))?.decision;
        let v = core(l_one(f, 128, Method::Digamma))?.value;
        ensure(d == v.contains_zero(), || format!("ball {v} vs decision {d} on {f}"))?;
    }
    Ok(format!("{} functions at 128 bits", fs.len()))
}

fn fourier_round_trip(fs: &[PeriodicFunction]) -> Check {
    for f in fs {
        let back = core(fourier_inverse(&core(fourier_transform(f))?))?;
        ensure(&back == f, || format!("round trip failed on {f}"))?;
    }
    Ok(format!("{} functions", fs.len()))
}

fn epsilon_series(level: u32) -> Check {
    let mut n = 0;
    for q in 2..=12 * level as u64 {
        for p in core(factorize(q))?.primes() {
            for r in 1..=q {
                let e = core(epsilon(r, p, q))?;
                let (partial, tail) = core(lemma1_bruteforce(r, p, q, 40))?;
                ensure(partial <= e && &e - &partial <= tail, || format!("q={q} p={p} r={r}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples"))
}

fn log_coefficients(fs: &[PeriodicFunction]) -> Check {
    for f in fs {
        ensure(core(theorem4_equivalence_check(f))?, || format!("log-coefficient identity fails on {f}"))?;
    }
    Ok(format!("{} functions", fs.len()))
}

fn symmetry(fs: &[PeriodicFunction]) -> Check {
    for f in fs {
        let d = core(decide_vanishing(f))?.decision;
        let (e, o) = f.even_odd_split();
        let split = core(decide_vanishing(&e))?.decision && core(decide_vanishing(&o))?.decision;
        ensure(d == split, || format!("even/odd split changes decision on {f}"))?;
        for a in lseries_core::arith::units(f.modulus()) {
            let g = core(f.dilate(a as i64))?;
            ensure(core(decide_vanishing(&g))?.decision == d, || format!("dilation by {a} on {f}"))?;
        }
    }
    Ok(format!("{} functions", fs.len()))
}

fn unit_supported(level: u32) -> Check {
    let mut rng = corpus::rng(0xC0FFEE);
    let mut n = 0;
    for q in 2..=12 * level as u64 {
        for _ in 0..10 {
            let f = corpus::random_unit_supported(&mut rng, q, 9, 4);
            ensure(!core(decide_vanishing(&f))?.decision, || format!("{f} vanishes"))?;
            n += 1;
        }
    }
    Ok(format!("{n} functions nonvanishing"))
}

fn digamma_bound(level: u32) -> Check {
    let hi = 100 * level as u64;
    for r in core(lemma4_sweep(2..hi + 1, 64, Execution::Parallel))? {
        ensure(r.holds, || format!("q={} not separated", r.q))?;
    }
    Ok(format!("2<=q<={hi}"))
}

fn dedekind() -> Check {
    for q in [3u64, 4, 5, 8, 12] {
        let rep = core(dedekind_determinant(q, 128, |a| {
            ComplexBall::from_real(digamma(&Rational::new(a.into(), q.into()), 128).expect("a/q > 0"))
        }))?;
        ensure(rep.agree(), || format!("q={q}"))?;
    }
    Ok("q in {3,4,5,8,12}".into())
}

pub fn run(level: u32) -> Result<Outcome, CliError> {
    if !(1..=3).contains(&level) {
        return Err(CliError::Precondition(format!("--level must be 1, 2 or 3, got {level}")));
    }
    let fs = corpus_for(level).map_err(CliError::Internal)?;
    let zero_mean: Vec<PeriodicFunction> = fs.iter().filter(|f| f.is_zero_mean()).cloned().collect();
    let checks: Vec<(&str, Check)> = vec![
        ("kernel-golden", kernel_golden()),
        ("route-agreement", routes(&zero_mean)),
        ("numeric-concordance", concordance(&zero_mean)),
        ("fourier-round-trip", fourier_round_trip(&fs)),
        ("epsilon-series", epsilon_series(level)),
        ("log-coefficients", log_coefficients(&zero_mean)),
        ("split-and-dilation", symmetry(&zero_mean)),
        ("unit-supported", unit_supported(level)),
        ("digamma-sum-bound", digamma_bound(level)),
        ("dedekind-determinant", dedekind()),
    ];
    let lines: Vec<CheckLine> = checks
        .into_iter()
        .map(|(name, r)| {
            let (passed, detail) = match r {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckLine { name: name.into(), passed, detail }
        })
        .collect();
    let failed = lines.iter().filter(|l| !l.passed).count();
    let mut text = String::new();
    for l in &lines {
        writeln!(text, "{} {:<22} {}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail).unwrap();
    }
    writeln!(text, "{} of {} checks passed", lines.len() - failed, lines.len()).unwrap();
    let report = SelftestReport { schema: SCHEMA.into(), level, checks: lines };
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Outcome { text, json, code: if failed == 0 { 0 } else { 70 } })
}
