//! JSON encoding of vectors: an array of `{"basis": …, "coeff": "p/q"}` terms.
//!
//! A basis element is written as an object (tabloid or bracket) and may be
//! read back either as an object or as a basis index. Non-canonical objects
//! are accepted on input; their sorting sign is folded into the coefficient.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lanke::{bracket_arity, canonicalize_bracket, CombBracket};
use crate::linalg::{format_rational, parse_rational, Ambient, ModuleVector, Rational};
use crate::partition::Partition;
use crate::tabloid::{canonicalize_column, canonicalize_row, ColumnTabloid, Filling, RowTabloid};

#[derive(Serialize)]
struct Term<B: Serialize> {
    basis: B,
    coeff: String,
}

fn emit_terms<B: Serialize>(v: &ModuleVector, basis: impl Fn(usize) -> B) -> Value {
    let terms: Vec<Term<B>> = v
        .iter()
        .map(|(i, c)| Term {
            basis: basis(i),
            coeff: format_rational(c),
        })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

/// Terms in basis order; tabloids as objects, plain coordinates as indices.
pub fn emit_vector(v: &ModuleVector) -> Value {
    match v.ambient() {
        Ambient::Coords(_) => emit_terms(v, |i| i),
        Ambient::Column(shape) => emit_terms(v, |i| ColumnTabloid::from_index(shape, i)),
        Ambient::Row(shape) => emit_terms(v, |i| RowTabloid::from_index(shape, i)),
    }
}

/// Bracket vectors write each basis element as `{"x": …, "y": …}`.
pub fn emit_bracket_vector(v: &ModuleVector) -> Result<Value> {
    let n = bracket_arity(v.ambient())?;
    Ok(emit_terms(v, |i| CombBracket::from_index(n, i).expect("index lies in the bracket basis")))
}

pub fn to_string(value: &Value) -> String {
    serde_json::to_string(value).expect("JSON value serializes")
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn labels(value: &Value, what: &str) -> Result<Vec<usize>> {
    serde_json::from_value::<Vec<usize>>(value.clone())
        .map_err(|e| parse_err(format!("{what}: expected an array of labels ({e})")))
}

fn label_lists(value: &Value, what: &str) -> Result<Vec<Vec<usize>>> {
    serde_json::from_value::<Vec<Vec<usize>>>(value.clone())
        .map_err(|e| parse_err(format!("{what}: expected an array of label arrays ({e})")))
}

fn check_declared_shape(obj: &serde_json::Map<String, Value>, shape: &Partition) -> Result<()> {
    if let Some(s) = obj.get("shape") {
        let declared: Partition = serde_json::from_value(s.clone()).map_err(|e| parse_err(format!("shape: {e}")))?;
        if &declared != shape {
            return Err(parse_err(format!("term has shape {declared}, vector has shape {shape}")));
        }
    }
    Ok(())
}

fn object_sign(obj: &serde_json::Map<String, Value>) -> Result<i64> {
    match obj.get("sign") {
        None => Ok(1),
        Some(Value::Number(k)) if k.as_i64() == Some(1) || k.as_i64() == Some(-1) => Ok(k.as_i64().unwrap()),
        Some(other) => Err(parse_err(format!("sign must be 1 or -1, got {other}"))),
    }
}

/// `(index, sign)` for a single basis element given as index or object.
fn parse_basis(value: &Value, ambient: &Ambient, brackets: bool) -> Result<(usize, i64)> {
    if let Some(i) = value.as_u64() {
        let i = i as usize;
        if i >= ambient.dim() {
            return Err(parse_err(format!("basis index {i} out of range for {ambient} (dim {})", ambient.dim())));
        }
        return Ok((i, 1));
    }
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err(format!("basis must be an index or an object, got {value}")))?;
    let sign = object_sign(obj)?;
    let bad = |e: Error| parse_err(e.to_string());
    match ambient {
        Ambient::Coords(_) => Err(parse_err("plain coordinates take integer basis indices")),
        Ambient::Column(_) if brackets => {
            let x = labels(obj.get("x").ok_or_else(|| parse_err("bracket is missing \"x\""))?, "x")?;
            let y = labels(obj.get("y").ok_or_else(|| parse_err("bracket is missing \"y\""))?, "y")?;
            let b = canonicalize_bracket(&x, &y).map_err(bad)?;
            if b.bracket.n() != bracket_arity(ambient)? {
                return Err(parse_err(format!("bracket arity {} does not match the vector", b.bracket.n())));
            }
            Ok((b.bracket.index(), sign * b.sign as i64))
        }
        Ambient::Column(shape) => {
            check_declared_shape(obj, shape)?;
            let cols = label_lists(obj.get("columns").ok_or_else(|| parse_err("tabloid is missing \"columns\""))?, "columns")?;
            let f = Filling::with_shape(shape, cols).map_err(bad)?;
            let s = canonicalize_column(&f);
            Ok((s.tabloid.index(), sign * s.sign as i64))
        }
        Ambient::Row(shape) => {
            check_declared_shape(obj, shape)?;
            let rows = label_lists(obj.get("rows").ok_or_else(|| parse_err("tabloid is missing \"rows\""))?, "rows")?;
            let f = Filling::from_rows(rows).map_err(bad)?;
            if f.shape() != shape {
                return Err(parse_err(format!("rows have shape {}, expected {shape}", f.shape())));
            }
            Ok((canonicalize_row(&f).index(), sign))
        }
    }
}

fn parse_terms(value: &Value, ambient: &Ambient, brackets: bool) -> Result<ModuleVector> {
    let terms = value
        .as_array()
        .ok_or_else(|| parse_err("a vector is a JSON array of terms"))?;
    let mut v = ModuleVector::zero(ambient.clone());
    for t in terms {
        let obj = t
            .as_object()
            .ok_or_else(|| parse_err(format!("term must be an object, got {t}")))?;
        let basis = obj.get("basis").ok_or_else(|| parse_err("term is missing \"basis\""))?;
        let coeff = match obj.get("coeff") {
            Some(Value::String(s)) => parse_rational(s)?,
            Some(Value::Number(k)) if k.is_i64() => Rational::from_integer(k.as_i64().unwrap().into()),
            Some(other) => return Err(parse_err(format!("coeff must be a \"p/q\" string, got {other}"))),
            None => return Err(parse_err("term is missing \"coeff\"")),
        };
        let (i, sign) = parse_basis(basis, ambient, brackets)?;
        v.add_term(i, coeff * Rational::from_integer(sign.into()));
    }
    Ok(v)
}

pub fn parse_vector(value: &Value, ambient: &Ambient) -> Result<ModuleVector> {
    parse_terms(value, ambient, false)
}

pub fn parse_bracket_vector(value: &Value, n: usize) -> Result<ModuleVector> {
    parse_terms(value, &crate::lanke::lanke_ambient(n)?, true)
}

pub fn parse_str(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("malformed JSON: {e}")))
}
