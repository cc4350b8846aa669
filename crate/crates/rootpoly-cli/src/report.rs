//! Machine-readable run reports.
//!
//! Polynomials are serialized as arrays of coefficient strings, lowest
//! degree first, so arbitrary-precision coefficients survive the trip.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use rootpoly::arith::Rat;
use rootpoly::Polynomial;

pub fn poly_to_coeffs(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn poly_from_coeffs(coeffs: &[String]) -> anyhow::Result<Polynomial> {
    let parsed: Result<Vec<Rat>, _> = coeffs.iter().map(|s| Rat::from_str(s)).collect();
    Ok(Polynomial::from_rat_coeffs(parsed.map_err(|e| {
        anyhow::anyhow!("invalid coefficient: {e}")
    })?))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, String>,
    /// method name -> polynomial coefficients, lowest degree first
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: impl Into<String>, input: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            input: input.into(),
            facts: BTreeMap::new(),
            polynomials: BTreeMap::new(),
            verdicts: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.insert(key.into(), value.to_string());
    }

    pub fn polynomial(&mut self, method: impl Into<String>, p: &Polynomial) {
        self.polynomials.insert(method.into(), poly_to_coeffs(p));
    }

    pub fn verdict(&mut self, check: impl Into<String>, passed: bool, witness: Option<String>) {
        self.verdicts.push(Verdict {
            check: check.into(),
            passed,
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering for terminals.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.input);
        for (key, value) in &self.facts {
            let _ = writeln!(out, "  {key}: {value}");
        }
        for (method, coeffs) in &self.polynomials {
            match poly_from_coeffs(coeffs) {
                Ok(p) => {
                    let _ = writeln!(out, "  {method}: {p}");
                }
                Err(_) => {
                    let _ = writeln!(out, "  {method}: {coeffs:?}");
                }
            }
        }
        for v in &self.verdicts {
            let status = if v.passed { "pass" } else { "FAIL" };
            match &v.witness {
                Some(w) => {
                    let _ = writeln!(out, "  [{status}] {}: {w}", v.check);
                }
                None => {
                    let _ = writeln!(out, "  [{status}] {}", v.check);
                }
            }
        }
        let _ = writeln!(out, "  elapsed: {} ms", self.elapsed_ms);
        out
    }
}
