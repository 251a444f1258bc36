//! Parsers for cone documents, rationals, permutations and integer
//! sequences, and canonical JSON output (sorted keys, integers as strings).

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::arith::{ExactInt, ExactRat, IntMatrix, ProjRat};
use crate::cone_ops::{Permutation, Report};
use crate::error::{Error, Result};
use crate::hnf::ArctanForm;
use crate::lattice::Cone;

/// A cone as read from a file: optional vertex, edges, free-form metadata.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConeDocument {
    pub vertex: Option<Vec<ExactInt>>,
    pub edges: Vec<Vec<ExactInt>>,
    pub metadata: BTreeMap<String, String>,
    /// Normal form stated alongside the edges, as in `transform` output.
    pub grid: Option<Vec<Vec<ExactInt>>>,
}

impl ConeDocument {
    pub fn to_cone(&self) -> Result<Cone> {
        match &self.vertex {
            Some(v) => Cone::new(v.clone(), self.edges.clone()),
            None => Cone::at_origin(self.edges.clone()),
        }
    }

    pub fn from_cone(c: &Cone) -> Self {
        ConeDocument {
            vertex: Some(c.vertex().to_vec()),
            edges: c.edges().to_vec(),
            metadata: BTreeMap::new(),
            grid: None,
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_int(s: &str) -> Result<ExactInt> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    BigInt::from_str(t).map_err(|_| parse_err(format!("not an integer: {s:?}")))
}

/// `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<ExactRat> {
    match s.trim().split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q.is_zero() {
                return Err(parse_err("zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Integers separated by commas and/or whitespace, optionally wrapped in
/// `()` or `[]`.
pub fn parse_sequence(s: &str) -> Result<Vec<ExactInt>> {
    let t = s.trim();
    let inner = match (t.chars().next(), t.chars().last()) {
        (Some('('), Some(')')) | (Some('['), Some(']')) if t.len() >= 2 => &t[1..t.len() - 1],
        _ => t,
    };
    let out: Vec<ExactInt> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(parse_int)
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(parse_err("empty sequence"));
    }
    Ok(out)
}

fn small_index(v: &ExactInt) -> Result<usize> {
    usize::try_from(v).map_err(|_| parse_err(format!("bad index {v}")))
}

/// Cycle notation `(1,3)(2,4)` or one-line notation `[3,2,1]`. For cycle
/// notation the size is `k` when given, else the largest entry.
pub fn parse_permutation(s: &str, k: Option<usize>) -> Result<Permutation> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Vec<usize> = parse_sequence(t)?.iter().map(small_index).collect::<Result<_>>()?;
        let p = Permutation::from_one_line(&v)?;
        if let Some(k) = k {
            if k != p.len() {
                return Err(Error::SizeMismatch { perm: p.len(), edges: k });
            }
        }
        return Ok(p);
    }
    if !t.starts_with('(') {
        return Err(parse_err(format!("expected '(' or '[' in {s:?}")));
    }
    let mut cycles = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .ok_or_else(|| parse_err(format!("unclosed cycle in {s:?}")))?;
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| parse_err(format!("expected '(' in {s:?}")))?;
        let body = &body[..body_end - 1];
        if !body.trim().is_empty() {
            let c: Vec<usize> = parse_sequence(body)?.iter().map(small_index).collect::<Result<_>>()?;
            cycles.push(c);
        }
        rest = rest[body_end + 1..].trim_start();
    }
    let largest = cycles.iter().flatten().copied().max().unwrap_or(0);
    let k = k.unwrap_or(largest);
    if k == 0 {
        return Err(parse_err("permutation of nothing"));
    }
    if largest > k {
        return Err(Error::SizeMismatch { perm: largest, edges: k });
    }
    Permutation::from_cycles(k, &cycles)
}

fn json_int(v: &Value) -> Result<ExactInt> {
    match v {
        Value::String(s) => parse_int(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_int(&n.to_string()),
        _ => Err(parse_err(format!("expected an integer, got {v}"))),
    }
}

fn json_vector(v: &Value) -> Result<Vec<ExactInt>> {
    v.as_array()
        .ok_or_else(|| parse_err("expected an array of integers"))?
        .iter()
        .map(json_int)
        .collect()
}

fn json_rows(v: &Value) -> Result<Vec<Vec<ExactInt>>> {
    v.as_array()
        .ok_or_else(|| parse_err("expected an array of arrays"))?
        .iter()
        .map(json_vector)
        .collect()
}

fn document_from_json(v: &Value) -> Result<ConeDocument> {
    let obj = v.as_object().ok_or_else(|| parse_err("expected a JSON object"))?;
    if let Some(edges) = obj.get("edges") {
        let vertex = match obj.get("vertex") {
            Some(Value::Null) | None => None,
            Some(x) => Some(json_vector(x)?),
        };
        let mut metadata = BTreeMap::new();
        if let Some(m) = obj.get("metadata") {
            let m = m.as_object().ok_or_else(|| parse_err("metadata must be an object"))?;
            for (key, val) in m {
                let text = match val {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                metadata.insert(key.clone(), text);
            }
        }
        let grid = obj.get("grid").map(json_rows).transpose()?;
        return Ok(ConeDocument {
            vertex,
            edges: json_rows(edges)?,
            metadata,
            grid,
        });
    }
    if let Some(cone) = obj.get("cone") {
        let mut d = document_from_json(cone)?;
        if let Some(g) = obj.get("grid") {
            d.grid = Some(json_rows(g)?);
        }
        return Ok(d);
    }
    if let Some(grid) = obj.get("grid") {
        let rows = json_rows(grid)?;
        let m = IntMatrix::from_rows(rows)?;
        return Ok(ConeDocument {
            vertex: None,
            edges: m.columns(),
            metadata: BTreeMap::new(),
            grid: None,
        });
    }
    Err(parse_err("JSON document needs \"edges\", \"cone\" or \"grid\""))
}

/// Plain-text matrix (rows on lines, columns are edges; `#` starts a
/// comment) or a JSON document, chosen by the first non-space byte.
pub fn parse_document(input: &str) -> Result<ConeDocument> {
    let t = input.trim_start();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| parse_err(e.to_string()))?;
        return document_from_json(&v);
    }
    let rows: Vec<Vec<ExactInt>> = input
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .filter(|l| !l.trim().is_empty())
        .map(parse_sequence)
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(parse_err("empty matrix"));
    }
    let m = IntMatrix::from_rows(rows)?;
    Ok(ConeDocument {
        vertex: None,
        edges: m.columns(),
        metadata: BTreeMap::new(),
        grid: None,
    })
}

pub fn int_value(v: &ExactInt) -> Value {
    Value::String(v.to_string())
}

pub fn vector_value(v: &[ExactInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_value(r)).collect())
}

pub fn rational_value(q: &ExactRat) -> Value {
    Value::String(q.to_string())
}

pub fn proj_value(q: &ProjRat) -> Value {
    Value::String(q.to_string())
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub fn cone_value(c: &Cone) -> Value {
    object(vec![
        ("vertex", vector_value(c.vertex())),
        ("edges", Value::Array(c.edges().iter().map(|e| vector_value(e)).collect())),
    ])
}

pub fn document_value(d: &ConeDocument) -> Value {
    let mut entries = vec![("edges", Value::Array(d.edges.iter().map(|e| vector_value(e)).collect()))];
    if let Some(v) = &d.vertex {
        entries.push(("vertex", vector_value(v)));
    }
    if !d.metadata.is_empty() {
        let m: Map<String, Value> = d
            .metadata
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        entries.push(("metadata", Value::Object(m)));
    }
    if let Some(g) = &d.grid {
        entries.push(("grid", Value::Array(g.iter().map(|r| vector_value(r)).collect())));
    }
    object(entries)
}

/// Grid, transform and the trigonometric values under `isin_i = a_{i,i}`,
/// `icos_{j,i} = a_{j,i}`, `itan_i` = column `i` truncated.
pub fn form_value(f: &ArctanForm) -> Value {
    let k = f.k();
    let g = f.grid();
    let isin: Vec<ExactInt> = (0..k).map(|i| g[(i, i)].clone()).collect();
    let mut icos = Map::new();
    for i in 0..k {
        for j in 0..i {
            icos.insert(format!("{},{}", j + 1, i + 1), int_value(&g[(j, i)]));
        }
    }
    let itan: Vec<Value> = (0..k)
        .map(|i| vector_value(&(0..=i).map(|r| g[(r, i)].clone()).collect::<Vec<_>>()))
        .collect();
    object(vec![
        ("grid", matrix_value(g)),
        ("transform", matrix_value(f.transform())),
        ("isin", vector_value(&isin)),
        ("icos", Value::Object(icos)),
        ("itan", Value::Array(itan)),
    ])
}

pub fn report_value(r: &Report) -> Value {
    let checks = r
        .checks
        .iter()
        .map(|c| {
            object(vec![
                ("name", Value::String(c.name.clone())),
                ("holds", Value::Bool(c.holds)),
                ("details", Value::String(c.details.clone())),
                ("required", Value::Bool(c.required)),
            ])
        })
        .collect();
    object(vec![("holds", Value::Bool(r.holds())), ("checks", Value::Array(checks))])
}

/// Compact JSON with sorted keys.
pub fn to_canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialise")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::hnf::arctan_form;
    use crate::lattice::point;

    const BIG3: &str = "123 13 19\n234 -347 156\n655 341 -456\n";

    #[test]
    fn text_matrix_columns_are_edges() {
        let d = parse_document(BIG3).unwrap();
        assert_eq!(d.edges[0], point(&[123, 234, 655]));
        assert_eq!(d.edges[2], point(&[19, 156, -456]));
        assert!(d.vertex.is_none());
        let commented = format!("# big3\n{BIG3}\n");
        assert_eq!(parse_document(&commented).unwrap(), d);
    }

    #[test]
    fn json_documents() {
        let d = parse_document(r#"{"edges": [[1, 0], ["5", 8]], "vertex": [2, "3"], "metadata": {"name": "x"}}"#).unwrap();
        assert_eq!(d.edges, vec![point(&[1, 0]), point(&[5, 8])]);
        assert_eq!(d.vertex, Some(point(&[2, 3])));
        assert_eq!(d.metadata["name"], "x");
        let back = parse_document(&to_canonical(&document_value(&d))).unwrap();
        assert_eq!(back, d);
        assert!(parse_document(r#"{"edges": [[1.5, 0]]}"#).is_err());
        let stated = parse_document(r#"{"cone": {"edges": [[1, 0], [0, 1]]}, "grid": [["1", "0"], ["0", "2"]]}"#).unwrap();
        assert_eq!(stated.grid, Some(vec![point(&[1, 0]), point(&[0, 2])]));
        assert_eq!(parse_document(&to_canonical(&document_value(&stated))).unwrap(), stated);
        assert!(parse_document("{").is_err());
    }

    #[test]
    fn form_output_reingests_to_same_grid() {
        let c = parse_document(BIG3).unwrap().to_cone().unwrap();
        let f = arctan_form(&c).unwrap();
        let text = to_canonical(&form_value(&f));
        assert!(text.starts_with(r#"{"grid":[["1","0","9719300"]"#));
        let again = arctan_form(&parse_document(&text).unwrap().to_cone().unwrap()).unwrap();
        assert_eq!(again.grid(), f.grid());
        assert_eq!(to_canonical(&form_value(&again)).split("\"transform\"").next(), text.split("\"transform\"").next());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("8/5").unwrap(), BigRational::new(int(8), int(5)));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), BigRational::new(int(3), int(2)));
        assert_eq!(parse_rational("-7").unwrap(), BigRational::from_integer(int(-7)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation("(1,3)", Some(3)).unwrap().one_line(), vec![3, 2, 1]);
        assert_eq!(parse_permutation("(1,2,3)", None).unwrap().one_line(), vec![2, 3, 1]);
        assert_eq!(parse_permutation("(1 2)(3 4)", None).unwrap().one_line(), vec![2, 1, 4, 3]);
        assert_eq!(parse_permutation("[3,2,1]", None).unwrap().one_line(), vec![3, 2, 1]);
        assert_eq!(parse_permutation("()", Some(2)).unwrap().one_line(), vec![1, 2]);
        assert!(parse_permutation("(1,4)", Some(3)).is_err());
        assert!(parse_permutation("(1,1)", None).is_err());
        assert!(parse_permutation("1,2", None).is_err());
        assert!(parse_permutation("[1,2]", Some(3)).is_err());
        assert!(parse_permutation("()", None).is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(parse_sequence("(1,1,1,1,1)").unwrap(), point(&[1, 1, 1, 1, 1]));
        assert_eq!(parse_sequence("[2, -1 ,3]").unwrap(), point(&[2, -1, 3]));
        assert_eq!(parse_sequence("4 5").unwrap(), point(&[4, 5]));
        assert!(parse_sequence("()").is_err());
        assert!(parse_sequence("1,,x").is_err());
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let v = object(vec![("b", int_value(&int(-3))), ("a", Value::Bool(true))]);
        assert_eq!(to_canonical(&v), r#"{"a":true,"b":"-3"}"#);
    }
}
