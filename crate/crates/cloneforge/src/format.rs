//! JSON files: algebras, group tables, and the canonical layout every output uses.
//!
//! An algebra file is `{"carrier": k, "ops": [{"arity": n, "name": "...",
//! "table": [...]}]}` with tables in tuple-encoding order. Keys are written
//! sorted; operations keep their signature order.

use std::fmt::Write as _;
use std::path::Path;

use cloneforge_core::zoo::GroupTable;
use cloneforge_core::{checked_pow, table_limit, Algebra, Elem, Operation};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub carrier: usize,
    pub ops: Vec<OpFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpFile {
    pub arity: usize,
    pub name: String,
    // wide so that oversized entries get a named error instead of a type error
    pub table: Vec<u64>,
}

impl From<&Algebra> for AlgebraFile {
    fn from(a: &Algebra) -> Self {
        AlgebraFile {
            carrier: a.carrier(),
            ops: a
                .named_ops()
                .map(|(name, op)| OpFile {
                    arity: op.arity(),
                    name: name.to_string(),
                    table: op.table().iter().map(|&x| x as u64).collect(),
                })
                .collect(),
        }
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub(crate) fn from_json<T: serde::de::DeserializeOwned>(source_name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| CliError::json(source_name, text, e))
}

/// Checks a table against `carrier^arity` and the carrier bound. `field` names
/// the table in error messages.
pub(crate) fn check_table(source_name: &str, field: &str, carrier: usize, arity: usize, table: &[u64]) -> Result<Operation> {
    let limit = table_limit();
    let len = match checked_pow(carrier, arity) {
        Some(len) if len <= limit => len,
        _ => return Err(CliError::invalid(source_name, field, format!("{carrier}^{arity} entries exceed the table limit {limit}"))),
    };
    if table.len() != len {
        return Err(CliError::invalid(source_name, field, format!("expected {len} entries, found {}", table.len())));
    }
    if let Some((i, &v)) = table.iter().enumerate().find(|(_, &v)| v >= carrier as u64) {
        return Err(CliError::invalid(source_name, format!("{field}[{i}]"), format!("entry {v} is not below the carrier {carrier}")));
    }
    Ok(Operation::new(carrier, arity, table.iter().map(|&v| v as Elem).collect::<Vec<_>>())?)
}

impl AlgebraFile {
    /// Validates against every algebra invariant. `prefix` locates this
    /// algebra inside a larger document (empty at top level).
    pub fn validate(&self, source_name: &str, prefix: &str) -> Result<Algebra> {
        if self.carrier == 0 {
            return Err(CliError::invalid(source_name, format!("{prefix}carrier"), "the carrier must be nonempty"));
        }
        if u32::try_from(self.carrier).is_err() {
            return Err(CliError::invalid(source_name, format!("{prefix}carrier"), "the carrier is too large"));
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for (i, op) in self.ops.iter().enumerate() {
            if self.ops[..i].iter().any(|o| o.name == op.name) {
                return Err(CliError::invalid(source_name, format!("{prefix}ops[{i}].name"), format!("duplicate symbol {:?}", op.name)));
            }
            let field = format!("{prefix}ops[{i}].table");
            let operation = check_table(source_name, &field, self.carrier, op.arity, &op.table)
                .map_err(|e| name_op(e, &op.name))?;
            ops.push((op.name.clone(), operation));
        }
        Ok(Algebra::new(self.carrier, ops)?)
    }
}

fn name_op(e: CliError, name: &str) -> CliError {
    match e {
        CliError::Invalid { source_name, field, message } => {
            CliError::Invalid { source_name, field, message: format!("operation {name:?}: {message}") }
        }
        other => other,
    }
}

pub fn parse_algebra_str(source_name: &str, text: &str) -> Result<Algebra> {
    from_json::<AlgebraFile>(source_name, text)?.validate(source_name, "")
}

pub fn parse_algebra(path: &Path) -> Result<Algebra> {
    parse_algebra_str(&path.display().to_string(), &read_text(path)?)
}

pub fn algebra_to_value(algebra: &Algebra) -> Value {
    serde_json::to_value(AlgebraFile::from(algebra)).expect("algebra files always serialize")
}

/// The canonical file contents for `algebra`.
pub fn algebra_to_json(algebra: &Algebra) -> String {
    to_canonical_json(&algebra_to_value(algebra))
}

/// A group file is its Cayley table: a JSON array of rows, row `a` holding `a*b` at position `b`.
pub fn parse_group_str(source_name: &str, text: &str) -> Result<GroupTable> {
    let rows: Vec<Vec<u64>> = from_json(source_name, text)?;
    let order = rows.len();
    let mut table = Vec::with_capacity(order);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(CliError::invalid(source_name, format!("[{a}]"), format!("expected {order} entries, found {}", row.len())));
        }
        if let Some((b, &v)) = row.iter().enumerate().find(|(_, &v)| v >= order as u64) {
            return Err(CliError::invalid(source_name, format!("[{a}][{b}]"), format!("entry {v} is not below the order {order}")));
        }
        table.push(row.iter().map(|&v| v as Elem).collect());
    }
    GroupTable::from_cayley(&table).map_err(|e| CliError::invalid(source_name, "table", e.to_string()))
}

pub fn parse_group(path: &Path) -> Result<GroupTable> {
    parse_group_str(&path.display().to_string(), &read_text(path)?)
}

pub fn group_to_json(group: &GroupTable) -> String {
    to_canonical_json(&serde_json::to_value(group.rows()).expect("rows serialize"))
}

/// Pretty JSON with sorted keys, two-space indentation, and arrays of scalars
/// kept on one line. Ends with a newline.
pub fn to_canonical_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            // serde_json's default map is ordered by key
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                let _ = write!(out, "{:width$}{}: ", "", Value::String(k.clone()), width = indent + 2);
                write_value(out, v, indent + 2);
            }
            let _ = write!(out, "\n{:indent$}}}", "");
        }
        Value::Array(items) if !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                let _ = write!(out, "{:width$}", "", width = indent + 2);
                write_value(out, v, indent + 2);
            }
            let _ = write!(out, "\n{:indent$}]", "");
        }
        Value::Array(items) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}
