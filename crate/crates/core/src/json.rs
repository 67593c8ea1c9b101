//! JSON formats: exact rationals as strings, polynomials and field elements as
//! coefficient arrays, base-definition files and certification inputs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::base::{make_alternate_base, AlternateBase};
use crate::certify::UPSequenceInput;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField, RootHint};
use crate::interval::Interval;
use crate::{Rational, RationalPoly};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parse `"a/b"` or `"a"` with integers `a`, `b` (`b != 0`). Decimal and
/// exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) {
        return Err(parse_err(format!("'{s}' is not exact; write it as a fraction such as 1/2")));
    }
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| parse_err(format!("'{s}' is not a rational number")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(parse_err(format!("'{s}' has a zero denominator")));
            }
            Ok(Rational::new(int(n)?, d))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}

/// A rational from a JSON string or integer.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        Value::Number(n) => Err(parse_err(format!("{n} is a float; write it as an exact fraction string"))),
        other => Err(parse_err(format!("expected a rational, got {other}"))),
    }
}

pub fn rationals_from_json(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("expected an array of rationals, got {v}")))?
        .iter()
        .map(rational_from_json)
        .collect()
}

/// Lowest terms; integers print without a denominator.
pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Ascending coefficients.
pub fn poly_to_json(p: &RationalPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<RationalPoly> {
    Ok(RationalPoly::new(rationals_from_json(v)?))
}

/// Coordinates over the power basis.
pub fn element_to_json(x: &FieldElement) -> Value {
    Value::Array(x.coords().iter().map(rational_to_json).collect())
}

/// A field element from a coordinate array or a single rational.
pub fn element_from_json(field: &Arc<NumberField>, v: &Value) -> Result<FieldElement> {
    match v {
        Value::Array(_) => FieldElement::from_coords(field, rationals_from_json(v)?),
        _ => Ok(FieldElement::from_rational(field, rational_from_json(v)?)),
    }
}

pub fn interval_to_json(i: &Interval) -> Value {
    Value::Array(vec![rational_to_json(&i.lo), rational_to_json(&i.hi)])
}

/// Parse a JSON text given on the command line.
pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RootFile {
    lo: Value,
    hi: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BaseFile {
    minpoly: Value,
    root: RootFile,
    p: usize,
    betas: Vec<Value>,
}

/// Base definition `{"minpoly", "root": {"lo", "hi"}, "p", "betas"}`.
pub fn base_from_str(text: &str) -> Result<AlternateBase> {
    let f: BaseFile = serde_json::from_str(text).map_err(|e| parse_err(format!("malformed base file: {e}")))?;
    if f.p != f.betas.len() {
        return Err(parse_err(format!("p = {} but {} bases listed", f.p, f.betas.len())));
    }
    let minpoly = poly_from_json(&f.minpoly)?;
    let hint = RootHint::Interval(rational_from_json(&f.root.lo)?, rational_from_json(&f.root.hi)?);
    let field = NumberField::new(minpoly, hint)?;
    let coords = f.betas.iter().map(rationals_from_json).collect::<Result<Vec<_>>>()?;
    make_alternate_base(&field, coords)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertFile {
    sequences: Vec<SequenceFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    i: usize,
    q: i64,
    #[serde(default)]
    preperiod: Vec<i64>,
    period: Vec<i64>,
}

/// Certification input `{"sequences": [{"i", "q", "preperiod", "period"}, ...]}`.
pub fn cert_inputs_from_str(text: &str) -> Result<Vec<UPSequenceInput>> {
    let f: CertFile =
        serde_json::from_str(text).map_err(|e| parse_err(format!("malformed certification input: {e}")))?;
    Ok(f.sequences
        .into_iter()
        .map(|s| UPSequenceInput { i: s.i, q: s.q, preperiod: s.preperiod, period: s.period })
        .collect())
}
