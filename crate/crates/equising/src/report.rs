//! Deterministic analysis reports.
//!
//! A [`Report`] collects the verdict, the edge data (q, m, N, P) with P
//! printed over the residue variables z₁, …, z_{k−1}, the invariants
//! (e, f, C, Γ, v_F, per-branch v_{F_i}) and, when requested, the oracle
//! agreement booleans. Field order is fixed and coefficient printing is
//! canonical, so identical inputs produce byte-identical structured output.

use serde::Serialize;

use crate::error::Error;
use crate::field::BaseField;
use crate::newton::EdgeData;
use crate::pipeline::{Analysis, Invariants, Verdict};
use crate::tower::{RingView, TowerPoly, TowerRing};

/// One stage of edge data, with P as coefficient strings (constant term
/// first) over the z-variables of the previous tower level.
#[derive(Clone, Debug, Serialize)]
pub struct DataEntry {
    pub q: usize,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "P")]
    pub p: Vec<String>,
}

/// Oracle agreement booleans (present only with `--oracle`).
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub disc_valuation: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disc_valuation_match: Option<bool>,
    pub boundaries_match: bool,
}

/// Full analysis report with a fixed, serialization-stable field order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<usize>,
    pub data: Vec<DataEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_exponents: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersections: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disc_valuation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch_disc_valuation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

/// Renders P as a polynomial string in Z with canonical coefficients.
pub fn poly_string(pol: &TowerPoly, rv: &RingView<'_>) -> String {
    let mut out = String::new();
    for (i, c) in pol.coeffs.iter().enumerate().rev() {
        if rv.is_zero(c) {
            continue;
        }
        let cs = rv.display(c).to_string();
        let (sign, mag) = match cs.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", cs),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "Z".to_string(),
            _ => format!("Z^{i}"),
        };
        let unit_mag = mag == "1";
        if var.is_empty() {
            out.push_str(&wrap(&mag));
        } else if unit_mag {
            out.push_str(&var);
        } else {
            out.push_str(&wrap(&mag));
            out.push('*');
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn wrap(s: &str) -> String {
    if s.contains('+') || s.contains('-') || s.contains(' ') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Builds a report from an analysis, its invariants (when the verdict is
/// positive) and optional oracle results.
pub fn build(
    analysis: &Analysis,
    invariants: Option<&Invariants>,
    base: BaseField,
    oracle: Option<OracleReport>,
) -> Result<Report, Error> {
    let (verdict, stage) = match analysis.verdict {
        Verdict::PseudoIrreducible => ("pseudo_irreducible".to_string(), None),
        Verdict::NotPseudoIrreducible { stage } => {
            ("not_pseudo_irreducible".to_string(), Some(stage))
        }
    };
    let data = data_entries(&analysis.data, base)?;
    Ok(Report {
        verdict,
        stage,
        data,
        e: invariants.map(|i| i.e),
        f: invariants.map(|i| i.f),
        char_exponents: invariants.map(|i| i.char_exponents.clone()),
        intersections: invariants.map(|i| i.intersections.clone()),
        disc_valuation: invariants.map(|i| i.disc_valuation),
        branch_disc_valuation: invariants.map(|i| i.branch_disc_valuation),
        oracle,
    })
}

/// Serializes the edge data, rebuilding the tower stage by stage so each
/// P_k is printed over its own level (variables z₁, …, z_{k−1}).
pub fn data_entries(
    data: &[EdgeData],
    base: BaseField,
) -> Result<Vec<DataEntry>, Error> {
    let mut ring = TowerRing::new(base);
    let mut out = Vec::with_capacity(data.len());
    for ed in data {
        {
            let rv = ring.view();
            out.push(DataEntry {
                q: ed.q,
                m: ed.m,
                n: ed.n,
                p: ed
                    .pol
                    .coeffs
                    .iter()
                    .map(|c| rv.display(c).to_string())
                    .collect(),
            });
        }
        ring = ring.extend(ed.pol.clone())?;
    }
    Ok(out)
}

impl Report {
    /// Machine-readable single-document output.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Human-readable output; P is printed as a polynomial in Z.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("verdict: {}\n", self.verdict.replace('_', "-")));
        if let Some(stage) = self.stage {
            s.push_str(&format!("failed at stage: {stage}\n"));
        }
        if !self.data.is_empty() {
            s.push_str("edge data (q, m, N, P):\n");
            for (k, d) in self.data.iter().enumerate() {
                s.push_str(&format!(
                    "  stage {k}: q={} m={} N={} P={}\n",
                    d.q,
                    d.m,
                    d.n,
                    text_poly(&d.p)
                ));
            }
        }
        if let Some(e) = self.e {
            s.push_str(&format!("e (factor degree): {e}\n"));
        }
        if let Some(f) = self.f {
            s.push_str(&format!("f (factor count): {f}\n"));
        }
        if let Some(c) = &self.char_exponents {
            s.push_str(&format!("characteristic exponents: {}\n", list(c)));
        }
        if let Some(g) = &self.intersections {
            s.push_str(&format!("pairwise intersections: {}\n", list(g)));
        }
        if let Some(v) = self.disc_valuation {
            s.push_str(&format!("discriminant valuation: {v}\n"));
        }
        if let Some(v) = self.branch_disc_valuation {
            s.push_str(&format!("per-factor discriminant valuation: {v}\n"));
        }
        if let Some(o) = &self.oracle {
            s.push_str(&format!("oracle discriminant valuation: {}\n", o.disc_valuation));
            if let Some(m) = o.disc_valuation_match {
                s.push_str(&format!("oracle discriminant agreement: {m}\n"));
            }
            s.push_str(&format!("oracle boundary agreement: {}\n", o.boundaries_match));
        }
        s
    }
}

fn list(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn text_poly(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (sign, mag) = match c.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", c.clone()),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "Z".to_string(),
            _ => format!("Z^{i}"),
        };
        if var.is_empty() {
            out.push_str(&wrap(&mag));
        } else if mag == "1" {
            out.push_str(&var);
        } else {
            out.push_str(&wrap(&mag));
            out.push('*');
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
