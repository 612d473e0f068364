//! JSON file formats. Indices in files are 1-based; scalars are integers
//! or strings `"n"`, `"n/d"`, `"0.25"`.

use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::Path;

use crate::algebra::{CommAlgebra, LyAlgebra};
use crate::error::FormatError;
use crate::linalg::Matrix;
use crate::rep::LyModule;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::symmetry::{FiniteAbelianGroup, Grading};

/// Parses JSON text, reporting the line and column of syntax errors.
pub fn parse_json(text: &str) -> Result<Value, FormatError> {
    Ok(serde_json::from_str(text)?)
}

fn field<'a>(obj: &'a Value, name: &str, path: &str) -> Result<&'a Value, FormatError> {
    obj.get(name).ok_or_else(|| FormatError::field(join(path, name), "missing"))
}

fn join(path: &str, name: &str) -> String {
    if path.is_empty() {
        name.to_string()
    } else {
        format!("{path}.{name}")
    }
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| FormatError::field(path, "expected an array"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize, FormatError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| FormatError::field(path, "expected a non-negative integer"))
}

/// A 1-based index in `1..=dim`, returned 0-based.
fn as_index(v: &Value, dim: usize, path: &str) -> Result<usize, FormatError> {
    let i = as_usize(v, path)?;
    if i == 0 || i > dim {
        return Err(FormatError::field(path, format!("index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

pub fn scalar_from_json(v: &Value, path: &str) -> Result<Scalar, FormatError> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| FormatError::field(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) => parse_scalar(&n.to_string()).map_err(|e| FormatError::field(path, e.to_string())),
        _ => Err(FormatError::field(path, "expected a number or a rational string")),
    }
}

pub fn scalar_to_json(c: &Scalar) -> Value {
    if c.is_integer() {
        if let Ok(i) = i64::try_from(c.numer()) {
            return json!(i);
        }
    }
    json!(format_scalar(c))
}

/// `[[i, j, ..., "c"], ...]` with `arity` indices.
fn entries(v: &Value, arity: usize, dim: usize, path: &str) -> Result<Vec<(Vec<usize>, Scalar)>, FormatError> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let p = format!("{path}[{}]", k + 1);
            let items = as_array(e, &p)?;
            if items.len() != arity + 1 {
                return Err(FormatError::field(&p, format!("expected {} indices and a coefficient", arity)));
            }
            let idx = (0..arity)
                .map(|a| as_index(&items[a], dim, &format!("{p}[{}]", a + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            let c = scalar_from_json(&items[arity], &format!("{p}[{}]", arity + 1))?;
            Ok((idx, c))
        })
        .collect()
}

pub fn algebra_from_value(v: &Value) -> Result<LyAlgebra, FormatError> {
    let dim = as_usize(field(v, "dim", "")?, "dim")?;
    let mut l = LyAlgebra::new(dim)?;
    if let Some(t) = v.get("tau") {
        for (idx, c) in entries(t, 3, dim, "tau")? {
            l.set_tau(idx[0], idx[1], idx[2], c)?;
        }
    }
    if let Some(o) = v.get("omega") {
        for (idx, c) in entries(o, 4, dim, "omega")? {
            l.set_omega(idx[0], idx[1], idx[2], idx[3], c)?;
        }
    }
    if let Some(labels) = v.get("labels") {
        let labels = as_array(labels, "labels")?
            .iter()
            .enumerate()
            .map(|(k, s)| {
                s.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| FormatError::field(format!("labels[{}]", k + 1), "expected a string"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() != dim {
            return Err(FormatError::field("labels", format!("expected {dim} labels, found {}", labels.len())));
        }
        l = l.with_labels(labels)?;
    }
    Ok(l)
}

pub fn parse_algebra(text: &str) -> Result<LyAlgebra, FormatError> {
    algebra_from_value(&parse_json(text)?)
}

pub fn algebra_to_json(l: &LyAlgebra) -> Value {
    let tau: Vec<Value> =
        l.tau_entries().map(|(&(i, j, s), c)| json!([i + 1, j + 1, s + 1, format_scalar(c)])).collect();
    let omega: Vec<Value> =
        l.omega_entries().map(|(&(i, j, k, s), c)| json!([i + 1, j + 1, k + 1, s + 1, format_scalar(c)])).collect();
    let mut out = json!({ "dim": l.dim(), "tau": tau, "omega": omega });
    if let Some(labels) = l.labels() {
        out["labels"] = json!(labels);
    }
    out
}

pub fn comm_algebra_from_value(v: &Value) -> Result<CommAlgebra, FormatError> {
    let dim = as_usize(field(v, "dim", "")?, "dim")?;
    let mut mult = BTreeMap::new();
    for (idx, c) in entries(field(v, "mult", "")?, 3, dim, "mult")? {
        mult.insert((idx[0], idx[1], idx[2]), c);
    }
    let unit = as_array(field(v, "unit", "")?, "unit")?
        .iter()
        .enumerate()
        .map(|(k, c)| scalar_from_json(c, &format!("unit[{}]", k + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CommAlgebra::checked(dim, mult, unit)?)
}

pub fn parse_comm_algebra(text: &str) -> Result<CommAlgebra, FormatError> {
    comm_algebra_from_value(&parse_json(text)?)
}

pub fn comm_algebra_to_json(a: &CommAlgebra) -> Value {
    let mult: Vec<Value> =
        a.mult_entries().map(|(&(i, j, k), c)| json!([i + 1, j + 1, k + 1, format_scalar(c)])).collect();
    let unit: Vec<Value> = a.unit().iter().map(scalar_to_json).collect();
    json!({ "dim": a.dim(), "mult": mult, "unit": unit })
}

/// A list of rows, or an object with a `"matrix"` field.
pub fn matrix_from_value(v: &Value, path: &str) -> Result<Matrix, FormatError> {
    let (v, path) = match v.get("matrix") {
        Some(inner) => (inner, join(path, "matrix")),
        None if path.is_empty() => (v, "matrix".to_string()),
        None => (v, path.to_string()),
    };
    let rows = as_array(v, &path)?;
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let p = format!("{path}[{}]", r + 1);
        let row = as_array(row, &p)?
            .iter()
            .enumerate()
            .map(|(c, x)| scalar_from_json(x, &format!("{p}[{}]", c + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = out.first() {
            let first: &Vec<Scalar> = first;
            if first.len() != row.len() {
                return Err(FormatError::field(p, format!("expected {} entries, found {}", first.len(), row.len())));
            }
        }
        out.push(row);
    }
    if out.is_empty() {
        return Err(FormatError::field(path, "empty matrix"));
    }
    Ok(Matrix::from_rows(out))
}

pub fn parse_matrix(text: &str) -> Result<Matrix, FormatError> {
    matrix_from_value(&parse_json(text)?, "")
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_to_json).collect())).collect())
}

/// `over` is either an inline algebra object or a path handed to `resolve`.
pub fn module_from_value(
    v: &Value,
    resolve: &dyn Fn(&str) -> Result<LyAlgebra, FormatError>,
) -> Result<LyModule, FormatError> {
    let over = match field(v, "over", "")? {
        Value::String(path) => resolve(path)?,
        obj @ Value::Object(_) => algebra_from_value(obj).map_err(|e| match e {
            FormatError::Field { field, message } => FormatError::field(join("over", &field), message),
            other => other,
        })?,
        _ => return Err(FormatError::field("over", "expected a file path or an algebra object")),
    };
    let n = over.dim();
    let dim = as_usize(field(v, "dim", "")?, "dim")?;
    let mut m = LyModule::zero(&over, dim);
    let read = |name: &str, arity: usize| -> Result<Vec<(Vec<usize>, Matrix)>, FormatError> {
        let Some(list) = v.get(name) else { return Ok(Vec::new()) };
        as_array(list, name)?
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let p = format!("{name}[{}]", k + 1);
                let items = as_array(e, &p)?;
                if items.len() != arity + 1 {
                    return Err(FormatError::field(&p, format!("expected {arity} indices and a matrix")));
                }
                let idx = (0..arity)
                    .map(|a| as_index(&items[a], n, &format!("{p}[{}]", a + 1)))
                    .collect::<Result<Vec<_>, _>>()?;
                let mx = matrix_from_value(&items[arity], &format!("{p}[{}]", arity + 1))?;
                if mx.rows() != dim || mx.cols() != dim {
                    return Err(FormatError::field(&p, format!("expected a {dim}x{dim} matrix")));
                }
                Ok((idx, mx))
            })
            .collect()
    };
    let bad = |e: crate::error::RepError| FormatError::field("module", e.to_string());
    for (idx, mx) in read("rho", 1)? {
        m.set_rho(idx[0], mx).map_err(bad)?;
    }
    for (idx, mx) in read("D", 2)? {
        m.set_d(idx[0], idx[1], mx).map_err(bad)?;
    }
    for (idx, mx) in read("theta", 2)? {
        m.set_theta(idx[0], idx[1], mx).map_err(bad)?;
    }
    Ok(m)
}

/// Reads a module file; a string `over` is resolved relative to the file.
pub fn load_module(path: &Path) -> Result<LyModule, FormatError> {
    let text = std::fs::read_to_string(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = move |p: &str| -> Result<LyAlgebra, FormatError> {
        let text = std::fs::read_to_string(base.join(p))?;
        parse_algebra(&text)
    };
    module_from_value(&parse_json(&text)?, &resolve)
}

/// Inline `over`, nonzero matrices only.
pub fn module_to_json(m: &LyModule) -> Value {
    let n = m.over().dim();
    let rho: Vec<Value> =
        (0..n).filter(|&i| !m.rho(i).is_zero()).map(|i| json!([i + 1, matrix_to_json(m.rho(i))])).collect();
    let pairs = |d: bool| -> Vec<Value> {
        let f = |i: usize, j: usize| if d { m.d(i, j) } else { m.theta(i, j) };
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !f(i, j).is_zero())
            .map(|(i, j)| json!([i + 1, j + 1, matrix_to_json(f(i, j))]))
            .collect()
    };
    json!({
        "over": algebra_to_json(m.over()),
        "dim": m.dim(),
        "rho": rho,
        "D": pairs(true),
        "theta": pairs(false),
    })
}

/// `{ "group": [d..], "assignment": [[basis_index, [exps]], ...] }`.
pub fn grading_from_value(v: &Value, dim: usize) -> Result<Grading, FormatError> {
    let orders = as_array(field(v, "group", "")?, "group")?
        .iter()
        .enumerate()
        .map(|(k, d)| as_usize(d, &format!("group[{}]", k + 1)).map(|d| d as u32))
        .collect::<Result<Vec<_>, _>>()?;
    let group = FiniteAbelianGroup::new(orders).map_err(|e| FormatError::field("group", e.to_string()))?;
    let mut assignment = vec![None; dim];
    for (k, e) in as_array(field(v, "assignment", "")?, "assignment")?.iter().enumerate() {
        let p = format!("assignment[{}]", k + 1);
        let items = as_array(e, &p)?;
        if items.len() != 2 {
            return Err(FormatError::field(&p, "expected [basis_index, [exponents]]"));
        }
        let i = as_index(&items[0], dim, &format!("{p}[1]"))?;
        let exps = as_array(&items[1], &format!("{p}[2]"))?
            .iter()
            .enumerate()
            .map(|(c, x)| as_usize(x, &format!("{p}[2][{}]", c + 1)).map(|x| x as u32))
            .collect::<Result<Vec<_>, _>>()?;
        let g = group.index_of(&exps).map_err(|e| FormatError::field(&p, e.to_string()))?;
        if assignment[i].replace(g).is_some() {
            return Err(FormatError::field(&p, format!("basis index {} assigned twice", i + 1)));
        }
    }
    let assignment = assignment
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| FormatError::field("assignment", format!("basis index {} unassigned", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Grading::diagonal(&group, &assignment).map_err(|e| FormatError::field("assignment", e.to_string()))
}

/// Diagonal gradings only; `None` otherwise.
pub fn grading_to_json(g: &Grading) -> Option<Value> {
    let a = g.assignment()?;
    let assignment: Vec<Value> = a.iter().enumerate().map(|(i, &e)| json!([i + 1, g.group().element(e)])).collect();
    Some(json!({ "group": g.group().orders(), "assignment": assignment }))
}
