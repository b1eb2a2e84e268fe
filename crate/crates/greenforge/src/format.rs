//! JSON and text renderings of decompositions, Green ring elements and
//! representations.

use greenforge_core::{
    Decomposition, Error, GreenElement, Indecomposable, QuiverRep, Result, ScalarValue,
};
use serde_json::{json, Map, Value};

fn summand(v: Indecomposable, multiplicity: Value) -> Value {
    json!({"vertex": v.vertex, "length": v.length, "multiplicity": multiplicity})
}

/// `{"summands": [{"vertex", "length", "multiplicity"}, ...]}` sorted by `(vertex, length)`.
pub fn decomposition_json(d: &Decomposition) -> Value {
    let summands: Vec<Value> = d.iter().map(|(v, m)| summand(v, json!(m))).collect();
    json!({ "summands": summands })
}

/// Same layout as [`decomposition_json`], multiplicities may be negative.
pub fn green_json(a: &GreenElement) -> Value {
    let summands: Vec<Value> = a.iter().map(|(v, c)| summand(v, json!(c))).collect();
    json!({ "summands": summands })
}

fn read_summands(value: &Value) -> Result<Vec<(Indecomposable, i64)>> {
    let bad = |what: &str| Error::Parse(format!("summand JSON: {what}"));
    let list = value
        .get("summands")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"summands\" array"))?;
    list.iter()
        .map(|s| {
            let vertex = s
                .get("vertex")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("vertex"))?;
            let length = s
                .get("length")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("length"))?;
            let mult = s
                .get("multiplicity")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("multiplicity"))?;
            Ok((Indecomposable::new(vertex, length as usize), mult))
        })
        .collect()
}

pub fn green_from_json(value: &Value) -> Result<GreenElement> {
    let mut out = GreenElement::zero();
    for (v, c) in read_summands(value)? {
        out.add_term(v, c);
    }
    Ok(out)
}

pub fn decomposition_from_json(value: &Value) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for (v, c) in read_summands(value)? {
        let c =
            u64::try_from(c).map_err(|_| Error::Parse(format!("negative multiplicity for {v}")))?;
        out.add(v, c);
    }
    Ok(out)
}

/// `V(0,5) + V(1,3)`, with `k*` prefixes for multiplicities above one.
pub fn decomposition_text(d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter()
        .map(|(v, m)| {
            if m == 1 {
                v.to_string()
            } else {
                format!("{m}*{v}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Reads either summand JSON or a sum such as `2*V(0,1) - V(1,0)`.
pub fn parse_green(text: &str) -> Result<GreenElement> {
    let t = text.trim();
    if t.starts_with('{') {
        let value: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        return green_from_json(&value);
    }
    let bad = || Error::Parse(format!("cannot read {text:?} as a Green ring element"));
    let mut out = GreenElement::zero();
    let mut rest = t;
    let mut sign = 1i64;
    if t == "0" {
        return Ok(out);
    }
    loop {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        let v_at = rest.find('V').ok_or_else(bad)?;
        let coeff = rest[..v_at].trim().trim_end_matches('*').trim();
        let coeff: i64 = if coeff.is_empty() {
            1
        } else {
            coeff.parse().map_err(|_| bad())?
        };
        let close = rest[v_at..].find(')').ok_or_else(bad)? + v_at;
        let v = crate::parse_operand(&rest[v_at..=close])?;
        out.add_term(v, sign * coeff);
        rest = rest[close + 1..].trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        sign = match rest.as_bytes()[0] {
            b'+' => 1,
            b'-' => -1,
            _ => return Err(bad()),
        };
        rest = &rest[1..];
    }
}

/// Rationals as `"a/b"` strings, other cyclotomic numbers as
/// `{"order": N, "coeffs": [...]}` in the power basis `1, ζ_N, ζ_N², …`.
pub fn scalar_json(s: &ScalarValue) -> Value {
    if let Some(r) = s.as_rational() {
        return json!(r.to_string());
    }
    match s {
        ScalarValue::Rational(r) => json!(r.to_string()),
        ScalarValue::Cyclotomic(c) => json!({
            "order": c.order(),
            "coeffs": c.coeffs().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        }),
    }
}

/// `{"vertex_dims": {v: dim}, "arrows": {v: row-major matrix of V_v → V_{v+1}}}`.
pub fn rep_json(rep: &QuiverRep) -> Value {
    let mut dims = Map::new();
    for (v, d) in rep.vertex_dims() {
        dims.insert(v.to_string(), json!(d));
    }
    let mut arrows = Map::new();
    let zero = ScalarValue::zero();
    for (v, m) in rep.arrows() {
        let rows: Vec<Value> = m
            .to_dense(&zero)
            .iter()
            .map(|row| Value::Array(row.iter().map(scalar_json).collect()))
            .collect();
        arrows.insert(v.to_string(), Value::Array(rows));
    }
    json!({ "vertex_dims": dims, "arrows": arrows })
}
