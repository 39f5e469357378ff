//! Command results and their text and JSON renderings.

use std::fmt::Write;

use curve_ideals::{CurveRing, Factorization, RingIdeal};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub generators: Vec<String>,
    pub multiplicity: u32,
    pub degree: u32,
}

/// Outcome of the brute-force cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCheck {
    Agrees(bool),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub field: String,
    pub curve: String,
    pub input_ideal: Vec<String>,
    pub factors: Vec<FactorEntry>,
    pub verified: bool,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalEntry {
    pub multiplicity: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub field: String,
    pub curve: String,
    pub input_ideal: Vec<String>,
    pub radical_factors: Vec<RadicalEntry>,
    pub verified: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub degree: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub field: String,
    pub curve: String,
    pub input_ideal: Vec<String>,
    pub degree_factors: Vec<DegreeEntry>,
    pub verified: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpReport {
    pub field: String,
    pub curve: String,
    pub operation: String,
    pub operands: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Factor(FactorReport),
    Radical(RadicalReport),
    Degree(DegreeReport),
    Op(OpReport),
}

pub fn field_name(ring: &CurveRing) -> String {
    ring.field().to_string()
}

pub fn curve_text(ring: &CurveRing) -> String {
    ring.defining_polynomial().to_string()
}

pub fn factor_entries(f: &Factorization) -> Vec<FactorEntry> {
    f.factors()
        .iter()
        .map(|p| FactorEntry {
            generators: p.prime.generator_strings(),
            multiplicity: p.multiplicity,
            degree: p.degree,
        })
        .collect()
}

pub fn generators(a: &RingIdeal) -> Vec<String> {
    a.generator_strings()
}

fn ideal_lines(out: &mut String, indent: &str, gens: &[String]) {
    for g in gens {
        let _ = writeln!(out, "{indent}{g}");
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let (field, curve) = match self {
            Report::Factor(r) => (&r.field, &r.curve),
            Report::Radical(r) => (&r.field, &r.curve),
            Report::Degree(r) => (&r.field, &r.curve),
            Report::Op(r) => (&r.field, &r.curve),
        };
        let _ = writeln!(out, "field: {field}");
        let _ = writeln!(out, "curve: {curve}");
        match self {
            Report::Factor(r) => {
                out.push_str("input ideal:\n");
                ideal_lines(&mut out, "  ", &r.input_ideal);
                let _ = writeln!(out, "factors: {}", r.factors.len());
                for (i, f) in r.factors.iter().enumerate() {
                    let _ = writeln!(out, "  p_{}: degree {}, multiplicity {}", i + 1, f.degree, f.multiplicity);
                    ideal_lines(&mut out, "    ", &f.generators);
                }
                let _ = writeln!(out, "product equals input: {}", r.verified);
                match &r.oracle {
                    Some(OracleCheck::Agrees(b)) => {
                        let _ = writeln!(out, "oracle agrees: {b}");
                    }
                    Some(OracleCheck::Skipped(why)) => {
                        let _ = writeln!(out, "oracle check skipped: {why}");
                    }
                    None => {}
                }
                let _ = writeln!(out, "seed: {}", r.seed);
            }
            Report::Radical(r) => {
                out.push_str("input ideal:\n");
                ideal_lines(&mut out, "  ", &r.input_ideal);
                out.push_str("radical factors:\n");
                for g in &r.radical_factors {
                    let _ = writeln!(out, "  g_{}:", g.multiplicity);
                    ideal_lines(&mut out, "    ", &g.generators);
                }
                let _ = writeln!(out, "product equals input: {}", r.verified);
                let _ = writeln!(out, "seed: {}", r.seed);
            }
            Report::Degree(r) => {
                out.push_str("input ideal:\n");
                ideal_lines(&mut out, "  ", &r.input_ideal);
                out.push_str("degree factors:\n");
                for h in &r.degree_factors {
                    let _ = writeln!(out, "  h_{}:", h.degree);
                    ideal_lines(&mut out, "    ", &h.generators);
                }
                let _ = writeln!(out, "product equals input: {}", r.verified);
                let _ = writeln!(out, "seed: {}", r.seed);
            }
            Report::Op(r) => {
                let _ = writeln!(out, "operation: {}", r.operation);
                for (i, gens) in r.operands.iter().enumerate() {
                    let _ = writeln!(out, "operand {}:", i + 1);
                    ideal_lines(&mut out, "  ", gens);
                }
                if let Some(gens) = &r.result {
                    out.push_str("result:\n");
                    ideal_lines(&mut out, "  ", gens);
                }
                if let Some(eq) = r.equal {
                    let _ = writeln!(out, "equal: {eq}");
                }
            }
        }
        out
    }
}
