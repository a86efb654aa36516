//! JSON encodings shared by the subcommands. Field elements are plain
//! integers over prime fields and coefficient lists (low degree first) over
//! extension fields; either form is accepted on input.

use holocodes::field::FieldDescriptor;
use holocodes::{Elem, ErrorOperator, Field, LinearCode, Matrix, StabilizerCode};
use serde_json::{json, Value};

use crate::error::CliError;

pub fn elem(f: &Field, e: Elem) -> Value {
    if f.r() == 1 {
        json!(e.index())
    } else {
        json!(f.coefficients(e))
    }
}

pub fn elems(f: &Field, v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|&e| elem(f, e)).collect())
}

pub fn matrix(f: &Field, m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| elems(f, m.row(i))).collect())
}

pub fn parse_elem(f: &Field, v: &Value) -> Result<Elem, CliError> {
    match v {
        Value::Number(n) => {
            let i =
                n.as_u64().and_then(|i| u32::try_from(i).ok()).ok_or_else(|| malformed(format!("bad element {v}")))?;
            Ok(f.element(i)?)
        }
        Value::Array(cs) => {
            let coeffs = cs
                .iter()
                .map(|c| c.as_u64().and_then(|c| u32::try_from(c).ok()))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| malformed(format!("bad element {v}")))?;
            Ok(f.from_coefficients(&coeffs)?)
        }
        _ => Err(malformed(format!("bad element {v}"))),
    }
}

pub fn parse_elems(f: &Field, v: &Value) -> Result<Vec<Elem>, CliError> {
    v.as_array()
        .ok_or_else(|| malformed(format!("expected a list of elements, got {v}")))?
        .iter()
        .map(|x| parse_elem(f, x))
        .collect()
}

pub fn malformed(msg: String) -> CliError {
    CliError::domain("MalformedJson", msg)
}

pub fn field_of(v: &Value) -> Result<Field, CliError> {
    if let Some(desc) = v.get("field") {
        let desc: FieldDescriptor = serde_json::from_value(desc.clone()).map_err(|e| malformed(e.to_string()))?;
        return Ok(Field::from_descriptor(&desc)?);
    }
    let q = v.get("q").and_then(Value::as_u64).ok_or_else(|| malformed("missing \"field\" or \"q\"".into()))?;
    Ok(Field::of_order(q as u32)?)
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    v.get(key).ok_or_else(|| malformed(format!("missing \"{key}\"")))
}

fn get_usize(v: &Value, key: &str) -> Result<usize, CliError> {
    get(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| malformed(format!("\"{key}\" is not a count")))
}

pub fn code(c: &LinearCode, min_distance: Option<usize>) -> Value {
    let f = c.field();
    json!({
        "field": f.descriptor(),
        "n": c.n(),
        "k": c.k(),
        "generator": matrix(f, c.generator()),
        "min_distance": min_distance.or(c.known_min_distance()),
    })
}

pub fn parse_code(v: &Value) -> Result<LinearCode, CliError> {
    // `rs-encode` and `building code` wrap the code in a "code" field
    let v = match v.get("code") {
        Some(inner) if v.get("generator").is_none() => inner,
        _ => v,
    };
    let f = field_of(v)?;
    let n = get_usize(v, "n")?;
    let rows = get(v, "generator")?
        .as_array()
        .ok_or_else(|| malformed("\"generator\" is not a list".into()))?
        .iter()
        .map(|r| parse_elems(&f, r))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(malformed(format!("generator row of length {} in a code of length {n}", r.len())));
    }
    Ok(LinearCode::from_rows(&f, n, &rows))
}

pub fn stabilizer(s: &StabilizerCode, d_q: Option<usize>) -> Value {
    let f = s.field();
    let gens: Vec<Value> =
        s.generators().iter().map(|g| json!({"a": elems(f, &g.a), "b": elems(f, &g.b), "phase": g.phase})).collect();
    json!({
        "field": f.descriptor(),
        "q": f.q(),
        "n": s.n(),
        "generators": gens,
        "k": s.k(),
        "dQ": d_q.or(s.known_distance()),
    })
}

pub fn parse_stabilizer(v: &Value) -> Result<StabilizerCode, CliError> {
    let f = field_of(v)?;
    let n = get_usize(v, "n")?;
    let mut gens = Vec::new();
    for g in get(v, "generators")?.as_array().ok_or_else(|| malformed("\"generators\" is not a list".into()))? {
        let mut op = ErrorOperator::new(parse_elems(&f, get(g, "a")?)?, parse_elems(&f, get(g, "b")?)?)?;
        op.phase = g.get("phase").and_then(Value::as_u64).unwrap_or(0) as u32 % f.p();
        gens.push(op);
    }
    Ok(StabilizerCode::from_generators(&f, n, gens)?)
}
