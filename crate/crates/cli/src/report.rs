//! Machine-readable report types. Every rational is a string.

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lseries-vanish/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub modulus: u64,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub index: u64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OkadaReport {
    pub vanishing: bool,
    /// Indexed by the unit `a`.
    pub condition_a: Vec<Residual>,
    /// Indexed by the prime `p`.
    pub condition_b: Vec<Residual>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub vanishing: bool,
    pub scale: String,
    pub precision_bits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericReport {
    pub midpoint: String,
    pub radius: String,
    pub precision_bits: u32,
    pub method: String,
    pub contains_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub schema: String,
    pub input: InputEcho,
    pub mean: String,
    /// `vanishing`, `nonvanishing` or `pole`.
    pub decision: String,
    pub route: String,
    pub okada: Option<OkadaReport>,
    pub theorem1: Option<Theorem1Report>,
    /// `None` when a route was skipped or the decision is a pole.
    pub routes_agree: Option<bool>,
    pub numeric: Option<NumericReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub schema: String,
    pub modulus: u64,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub schema: String,
    pub input: InputEcho,
    pub s: String,
    pub midpoint: String,
    pub radius: String,
    pub precision_bits: u32,
    pub method: String,
    pub terms_used: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonRow {
    pub p: u64,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonReport {
    pub schema: String,
    pub modulus: u64,
    pub rows: Vec<EpsilonRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierReport {
    pub schema: String,
    pub input: InputEcho,
    /// `hat f(b)` for `b = 1..=q`, written in the power basis of `Q(zeta_q)` with `z = zeta_q`.
    pub coefficients: Vec<String>,
    /// Rows `c_bj` for `b = 1..q-1`; absent when the mean is nonzero.
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub index: usize,
    pub exponents: Vec<u64>,
    pub principal: bool,
    pub odd: bool,
    /// `k` with `chi(a) = zeta_m^k`, or `None` off the units, for `a = 1..=q`.
    pub value_indices: Vec<Option<u64>>,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharactersReport {
    pub schema: String,
    pub modulus: u64,
    pub value_modulus: u64,
    pub characters: Vec<CharacterEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub schema: String,
    pub level: u32,
    pub checks: Vec<CheckLine>,
}
