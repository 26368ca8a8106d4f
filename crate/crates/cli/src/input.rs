//! Reading function files: `{"modulus": q, "values": ["f(1)", ..., "f(q)"]}`.
//!
//! The values array is 1-indexed: the last slot holds `f(q) = f(0)`.

use std::io::Read;
use std::path::Path;

use lseries_core::{PeriodicFunction, Rational};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    modulus: u64,
    values: Vec<String>,
}

/// Parses a rational written as an integer or `p/q`. No decimal points, no floats.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let t = s.trim();
    let ok = !t.is_empty()
        && t.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-' || c == '+');
    let r = ok.then(|| t.parse::<Rational>().ok()).flatten();
    r.ok_or_else(|| CliError::Parse(format!("not a rational: {s:?}")))
}

pub fn parse_function(text: &str) -> Result<PeriodicFunction, CliError> {
    let doc: FunctionFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if doc.modulus == 0 {
        return Err(CliError::Parse("modulus must be positive".into()));
    }
    if doc.values.len() as u64 != doc.modulus {
        return Err(CliError::Parse(format!(
            "modulus {} needs {} values, got {}",
            doc.modulus,
            doc.modulus,
            doc.values.len()
        )));
    }
    let values = doc.values.iter().map(|v| parse_rational(v)).collect::<Result<_, _>>()?;
    Ok(PeriodicFunction::new(doc.modulus, values)?)
}

/// Reads a function file from `path`, or from standard input when `path` is `-`.
pub fn read_function(path: &Path) -> Result<PeriodicFunction, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
    };
    parse_function(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational(" -3/6 ").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), Rational::from_integer(7.into()));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn function_files() {
        let f = parse_function(r#"{"modulus": 4, "values": ["2","-6","2","2"]}"#).unwrap();
        assert_eq!(f.modulus(), 4);
        assert!(parse_function(r#"{"modulus": 3, "values": ["1","1"]}"#).is_err());
        assert!(parse_function(r#"{"modulus": 1, "values": [1]}"#).is_err());
        assert!(parse_function(r#"{"modulus": 0, "values": []}"#).is_err());
    }
}
