//! Serialized output: one JSON object per line, or a plain polynomial.

use crate::error::{Error, Result};
use crate::gfield::Gf;
use crate::projgeom::HomPoly;
use serde::{Deserialize, Serialize};

/// One output item. Field elements are coordinate vectors over the prime
/// field, low coordinate first; `coeffs[i]` multiplies `x^i y^(n-i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub q: u64,
    pub n: u32,
    pub coeffs: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stab_order: Option<u64>,
    /// Cross polynomial, low degree first, same element encoding.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_poly: Option<Vec<Vec<u32>>>,
}

impl Record {
    pub fn new(f: &Gf, form: &HomPoly) -> Self {
        Record {
            q: f.q() as u64,
            n: form.degree() as u32,
            coeffs: form.0.iter().map(|&c| f.digits(c)).collect(),
            stab_order: None,
            cross_poly: None,
        }
    }

    pub fn with_cross_poly(mut self, f: &Gf, cross: &[u32]) -> Self {
        self.cross_poly = Some(cross.iter().map(|&c| f.digits(c)).collect());
        self
    }

    pub fn with_stab_order(mut self, s: u64) -> Self {
        self.stab_order = Some(s);
        self
    }

    /// The form, checked against the field `f`.
    pub fn form(&self, f: &Gf) -> Result<HomPoly> {
        if self.q != f.q() as u64 {
            return Err(Error::Parse(format!("record over q = {}, expected {}", self.q, f.q())));
        }
        if self.coeffs.len() != self.n as usize + 1 {
            return Err(Error::Parse(format!(
                "{} coefficients for degree {}",
                self.coeffs.len(),
                self.n
            )));
        }
        let c = self.coeffs.iter().map(|d| f.from_digits(d)).collect::<Result<Vec<u32>>>()?;
        Ok(HomPoly(c))
    }
}

pub fn to_jsonl(r: &Record) -> String {
    serde_json::to_string(r).expect("records always serialize")
}

pub fn from_jsonl(line: &str) -> Result<Record> {
    serde_json::from_str(line.trim_end()).map_err(|e| Error::Parse(e.to_string()))
}

fn element(f: &Gf, c: u32) -> String {
    if f.k() == 1 {
        c.to_string()
    } else {
        let d: Vec<String> = f.digits(c).iter().map(u32::to_string).collect();
        format!("[{}]", d.join(","))
    }
}

fn power(v: &str, e: usize) -> Option<String> {
    match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    }
}

/// `x^2 + 2*y^2` style text, highest power of `x` first.
pub fn to_text(f: &Gf, form: &HomPoly) -> String {
    let n = form.0.len().saturating_sub(1);
    let mut terms = Vec::new();
    for (i, &c) in form.0.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mut parts: Vec<String> = Vec::new();
        let mono: Vec<String> = [power("x", i), power("y", n - i)].into_iter().flatten().collect();
        if c != 1 || mono.is_empty() {
            parts.push(element(f, c));
        }
        parts.extend(mono);
        terms.push(parts.join("*"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
