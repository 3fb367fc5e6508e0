//! The committed corpus of `(group, weight) → P_Λ` records.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use torsionlab_core::exactalg::{int, Rational, Var};
use torsionlab_core::rootsys::{dominant_weights_up_to, user_coords, GroupName, GroupSpec};
use torsionlab_core::torsion::{compute, SymbolicConstant};

use crate::error::{CliError, ErrorCode};
use crate::serial::{int_coords, poly_from_json, poly_json, Prefactor, Rat};

pub const EMBEDDED: &str = include_str!("../data/golden.jsonl");

pub fn default_path() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden.jsonl")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRecord {
    pub group: String,
    pub weight: Vec<i64>,
    pub poly_coeffs: Vec<Rat>,
    pub prefactor: Prefactor,
}

/// Inputs covered by the corpus: small weights across the supported
/// families, both θ-representatives, plus a few vanishing groups.
pub fn corpus_inputs() -> Vec<(GroupName, Vec<i64>)> {
    let mut out = Vec::new();
    let plan: [((u32, u32), i64); 12] = [
        ((3, 1), 3),
        ((5, 1), 2),
        ((3, 3), 2),
        ((5, 3), 2),
        ((7, 1), 2),
        ((7, 3), 1),
        ((5, 5), 1),
        ((7, 5), 1),
        ((9, 3), 1),
        ((11, 1), 1),
        ((9, 7), 1),
        ((11, 5), 1),
    ];
    let mut push_group = |g: GroupSpec, bound: i64| {
        for w in dominant_weights_up_to(g, bound) {
            if g.theta_signature(&w) != Rational::from_integer(0.into()) {
                out.push((GroupName::from(g), int_coords(&user_coords(g, &w))));
            }
        }
    };
    push_group(GroupSpec::Sl3, 3);
    for ((p, q), bound) in plan {
        push_group(GroupSpec::so(p, q).expect("odd-odd"), bound);
    }
    for (p, q) in [(2, 1), (4, 3), (4, 4), (6, 1), (8, 3)] {
        let rank = ((p + q) / 2) as usize;
        out.push((GroupName::So { p, q }, vec![1; rank]));
    }
    out
}

pub fn record_for(group: GroupName, weight: &[i64]) -> Result<GoldenRecord, CliError> {
    let coords: Vec<Rational> = weight.iter().map(|&k| int(k)).collect();
    let r = compute(group, &coords)?;
    Ok(GoldenRecord {
        group: group.to_string(),
        weight: weight.to_vec(),
        poly_coeffs: poly_json(&r.poly),
        prefactor: Prefactor::from(&r.prefactor),
    })
}

pub fn regenerate() -> Result<Vec<GoldenRecord>, CliError> {
    corpus_inputs().into_iter().map(|(g, w)| record_for(g, &w)).collect()
}

pub fn to_jsonl(records: &[GoldenRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let _ = writeln!(out, "{}", serde_json::to_string(r).expect("record serializes"));
    }
    out
}

pub fn parse_jsonl(text: &str) -> Result<Vec<GoldenRecord>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l)
                .map_err(|e| CliError::new(ErrorCode::Internal, format!("golden line {}: {e}", i + 1)))
        })
        .collect()
}

/// Recomputes every record; returns one message per mismatch.
pub fn diff(records: &[GoldenRecord]) -> Vec<String> {
    let mut out = Vec::new();
    for rec in records {
        let group = match GroupName::parse(&rec.group) {
            Ok(g) => g,
            Err(e) => {
                out.push(format!("{}: {e}", rec.group));
                continue;
            }
        };
        match record_for(group, &rec.weight) {
            Ok(fresh) if fresh == *rec => {}
            Ok(fresh) => {
                let old = poly_from_json(Var::M, &rec.poly_coeffs);
                let new = poly_from_json(Var::M, &fresh.poly_coeffs);
                let old_c = SymbolicConstant::from(&rec.prefactor);
                let new_c = SymbolicConstant::from(&fresh.prefactor);
                out.push(format!(
                    "{} {:?}: stored {old} × {old_c}, computed {new} × {new_c}",
                    rec.group, rec.weight
                ));
            }
            Err(e) => out.push(format!("{} {:?}: {e}", rec.group, rec.weight)),
        }
    }
    out
}
