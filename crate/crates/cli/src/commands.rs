use std::fmt::Write;

use lseries_core::characters::enumerate_characters;
use lseries_core::cyclotomic::{coefficient_matrix, fourier_transform, theorem1_decide};
use lseries_core::numeric::{l_one, l_s, Ball, EvalReport, Method};
use lseries_core::okada::{decide_vanishing, epsilon as eps, kernel_basis, EpsilonTable};
use lseries_core::{Error, PeriodicFunction, Rational};
use num_traits::{One, Zero};
use serde_json::json;

use crate::report::*;
use crate::{CliError, MethodArg, Outcome, RouteArg, MAX_PRECISION};

const DIGITS: usize = 30;

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn echo(f: &PeriodicFunction) -> InputEcho {
    InputEcho { modulus: f.modulus(), values: strings(f.values()) }
}

fn to_json<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report serializes")
}

fn numeric_report(v: &Ball, prec: u32, method: Method) -> NumericReport {
    NumericReport {
        midpoint: v.mid_decimal(DIGITS),
        radius: v.rad_scientific(),
        precision_bits: prec,
        method: method.to_string(),
        contains_zero: v.contains_zero(),
    }
}

/// Evaluates `L(1,f)` until the ball agrees with the exact decision, doubling the precision.
fn certified_value(f: &PeriodicFunction, prec: u32, vanishing: bool) -> Result<(Ball, u32), CliError> {
    let mut p = prec;
    loop {
        let v = l_one(f, p, Method::Digamma)?.value;
        if vanishing {
            if !v.contains_zero() {
                return Err(CliError::Internal(format!("exact decision is vanishing but L(1,f) = {v}")));
            }
            return Ok((v, p));
        }
        if v.is_nonzero() {
            return Ok((v, p));
        }
        if p >= MAX_PRECISION {
            return Err(Error::PrecisionExhausted(MAX_PRECISION).into());
        }
        p = (2 * p).min(MAX_PRECISION);
    }
}

pub fn decide(f: &PeriodicFunction, prec: u32, route: RouteArg) -> Result<Outcome, CliError> {
    let mean = f.mean();
    let route_name = match route {
        RouteArg::Okada => "okada",
        RouteArg::Theorem1 => "theorem1",
        RouteArg::Both => "both",
    };
    let mut report = DecisionReport {
        schema: SCHEMA.into(),
        input: echo(f),
        mean: mean.to_string(),
        decision: "pole".into(),
        route: route_name.into(),
        okada: None,
        theorem1: None,
        routes_agree: None,
        numeric: None,
    };
    if !mean.is_zero() {
        let text = format!(
            "modulus: {}\nmean: {}\ndecision: pole (residue {} at s = 1)\n",
            f.modulus(),
            mean,
            mean
        );
        return Ok(Outcome { text, json: to_json(&report), code: 2 });
    }

    if route != RouteArg::Theorem1 {
        let cert = decide_vanishing(f)?;
        let res = |v: &[(u64, Rational)]| {
            v.iter().map(|(i, r)| Residual { index: *i, value: r.to_string() }).collect()
        };
        report.okada = Some(OkadaReport {
            vanishing: cert.decision,
            condition_a: res(&cert.condition_a_residuals),
            condition_b: res(&cert.condition_b_residuals),
        });
    }
    if route != RouteArg::Okada {
        match theorem1_decide(f, prec) {
            Ok(out) => {
                report.theorem1 = Some(Theorem1Report {
                    vanishing: out.vanishing,
                    scale: out.scale.to_string(),
                    precision_bits: out.precision_used,
                })
            }
            // the cyclotomic route has a smaller modulus cap; skip it when both routes were requested
            Err(Error::ModulusTooLarge { .. }) if route == RouteArg::Both => {}
            Err(e) => return Err(e.into()),
        }
    }

    let decisions: Vec<bool> = report
        .okada
        .iter()
        .map(|o| o.vanishing)
        .chain(report.theorem1.iter().map(|t| t.vanishing))
        .collect();
    if decisions.len() == 2 {
        report.routes_agree = Some(decisions[0] == decisions[1]);
    }
    let code;
    if report.routes_agree == Some(false) {
        report.decision = "disagreement".into();
        code = 70;
    } else {
        let vanishing = decisions[0];
        report.decision = if vanishing { "vanishing" } else { "nonvanishing" }.into();
        code = if vanishing { 0 } else { 1 };
        let (v, p) = certified_value(f, prec, vanishing)?;
        report.numeric = Some(numeric_report(&v, p, Method::Digamma));
    }

    let mut text = String::new();
    writeln!(text, "modulus: {}", f.modulus()).unwrap();
    writeln!(text, "values: {}", report.input.values.join(" ")).unwrap();
    writeln!(text, "mean: 0").unwrap();
    writeln!(text, "decision: {}", report.decision).unwrap();
    if let Some(o) = &report.okada {
        let fmt = |v: &[Residual], tag: &str| {
            v.iter().map(|r| format!("{tag}={}: {}", r.index, r.value)).collect::<Vec<_>>().join(", ")
        };
        writeln!(text, "condition A: {}", fmt(&o.condition_a, "a")).unwrap();
        let b = fmt(&o.condition_b, "p");
        writeln!(text, "condition B: {}", if b.is_empty() { "(no primes)".into() } else { b }).unwrap();
    }
    if let Some(t) = &report.theorem1 {
        let agree = match report.routes_agree {
            Some(true) => " (agrees)",
            Some(false) => " (DISAGREES)",
            None => "",
        };
        let d = if t.vanishing { "vanishing" } else { "nonvanishing" };
        writeln!(text, "theorem1: {d}{agree}").unwrap();
    } else if route == RouteArg::Both {
        writeln!(text, "theorem1: skipped (modulus above the cyclotomic cap)").unwrap();
    }
    if let Some(n) = &report.numeric {
        writeln!(text, "L(1,f) = {} ± {} ({} bits)", n.midpoint, n.radius, n.precision_bits).unwrap();
    }
    Ok(Outcome { text, json: to_json(&report), code })
}

pub fn kernel(q: u64) -> Result<Outcome, CliError> {
    let basis = kernel_basis(q)?;
    let report = KernelReport {
        schema: SCHEMA.into(),
        modulus: q,
        dimension: basis.len(),
        basis: basis.iter().map(|f| strings(f.values())).collect(),
    };
    let mut text = format!("modulus: {q}\ndimension: {}\n", basis.len());
    for v in &report.basis {
        writeln!(text, "[{}]", v.join(",")).unwrap();
    }
    Ok(Outcome { text, json: to_json(&report), code: 0 })
}

pub fn eval(f: &PeriodicFunction, s: &Rational, prec: u32, method: MethodArg) -> Result<Outcome, CliError> {
    let rep: EvalReport = if s.is_one() {
        let m = match method {
            MethodArg::Digamma => Method::Digamma,
            MethodArg::Hurwitz => Method::Hurwitz,
            MethodArg::FourierLog => Method::FourierLog,
            MethodArg::PartialSum => Method::PartialSum,
        };
        l_one(f, prec, m)?
    } else {
        l_s(f, s, prec)?
    };
    let out = EvalOutput {
        schema: SCHEMA.into(),
        input: echo(f),
        s: s.to_string(),
        midpoint: rep.value.mid_decimal(DIGITS),
        radius: rep.value.rad_scientific(),
        precision_bits: rep.precision_bits,
        method: rep.method.to_string(),
        terms_used: rep.terms_used,
    };
    let text = format!(
        "L({},f) = {} ± {}\nmethod: {}, precision: {} bits, terms: {}\n",
        out.s, out.midpoint, out.radius, out.method, out.precision_bits, out.terms_used
    );
    Ok(Outcome { text, json: to_json(&out), code: 0 })
}

pub fn epsilon(q: u64, single: Option<(u64, u64)>) -> Result<Outcome, CliError> {
    if let Some((r, p)) = single {
        let v = eps(r, p, q)?;
        let json = json!({ "schema": SCHEMA, "modulus": q, "r": r, "p": p, "value": v.to_string() });
        return Ok(Outcome { text: format!("{v}\n"), json, code: 0 });
    }
    let table = EpsilonTable::new(q)?;
    let rows: Vec<EpsilonRow> = table
        .primes()
        .map(|p| EpsilonRow { p, values: strings(table.row(p).unwrap_or_default()) })
        .collect();
    let mut text = format!("modulus: {q}\n");
    for row in &rows {
        writeln!(text, "p={}: {}", row.p, row.values.join(" ")).unwrap();
    }
    let report = EpsilonReport { schema: SCHEMA.into(), modulus: q, rows };
    Ok(Outcome { text, json: to_json(&report), code: 0 })
}

pub fn fourier(f: &PeriodicFunction) -> Result<Outcome, CliError> {
    let hat = fourier_transform(f)?;
    let coefficients: Vec<String> = hat.coefficients().iter().map(|c| c.to_string()).collect();
    let matrix = match coefficient_matrix(f) {
        Ok(m) => Some(m.iter().map(|row| strings(row)).collect::<Vec<_>>()),
        Err(Error::Pole { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("modulus: {} (z = zeta_{})\n", f.modulus(), f.modulus());
    for (b, c) in coefficients.iter().enumerate() {
        writeln!(text, "fhat({}) = {c}", b + 1).unwrap();
    }
    let report = FourierReport { schema: SCHEMA.into(), input: echo(f), coefficients, matrix };
    Ok(Outcome { text, json: to_json(&report), code: 0 })
}

pub fn characters(q: u64) -> Result<Outcome, CliError> {
    let chars = enumerate_characters(q)?;
    let m = chars.first().map(|c| c.value_modulus()).unwrap_or(1);
    let entries: Vec<CharacterEntry> = chars
        .iter()
        .enumerate()
        .map(|(i, chi)| CharacterEntry {
            index: i,
            exponents: chi.exponents().to_vec(),
            principal: chi.is_principal(),
            odd: chi.is_odd(),
            value_indices: (1..=q as i64).map(|a| chi.value_index(a)).collect(),
            values: chi.values().iter().map(|v| v.to_string()).collect(),
        })
        .collect();
    let mut text = format!("modulus: {q}\ncharacters: {} (values in Q(z), z = zeta_{m})\n", entries.len());
    for e in &entries {
        let tag = if e.principal { "principal" } else if e.odd { "odd" } else { "even" };
        writeln!(text, "chi_{} {:?} {tag}: {}", e.index, e.exponents, e.values.join(" | ")).unwrap();
    }
    let report = CharactersReport { schema: SCHEMA.into(), modulus: q, value_modulus: m, characters: entries };
    Ok(Outcome { text, json: to_json(&report), code: 0 })
}
