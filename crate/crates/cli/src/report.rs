//! Canonical JSON rendering of check reports and matrices.

use bhl_core::exactalg::format_scalar;
use bhl_core::gradedcat::GradedMorphism;
use bhl_core::report::CheckReport;
use bhl_core::{Field, Matrix};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub fn checks_json<K: Field>(r: &CheckReport<K>) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), json!(c.name));
                m.insert("passed".into(), json!(c.passed));
                if let Some(w) = &c.witness {
                    m.insert("witness".into(), json!({"row": w.row, "col": w.col, "value": w.value}));
                }
                if let Some(n) = &c.note {
                    m.insert("note".into(), json!(n));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn matrix_json<K: Field>(m: &Matrix<K>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| json!(format_scalar(m.get(r, c)))).collect()))
            .collect(),
    )
}

pub fn morphism_json<K: Field>(f: &GradedMorphism<K>) -> Value {
    matrix_json(f.matrix())
}

/// Pretty JSON with sorted keys and a trailing newline.
///
/// `serde_json::Map` is a `BTreeMap` unless `preserve_order` is enabled,
/// which this crate never does.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// One line per failed check, with the first nonzero residual entry.
pub fn failure_lines<K: Field>(r: &CheckReport<K>) -> Vec<String> {
    r.failures()
        .into_iter()
        .map(|c| {
            let mut line = format!("FAIL {}", c.name);
            if let Some(w) = &c.witness {
                line.push_str(&format!(" at ({}, {}) = {}", w.row, w.col, w.value));
            }
            if let Some(n) = &c.note {
                line.push_str(&format!(" ({n})"));
            }
            line
        })
        .collect()
}
