//! JSON and text formats.
//!
//! Hypergraph documents have the shape
//! `{"n": 4, "edges": [[0,1],...], "labels": {...}, "multiplicity": [...]}`
//! where `labels` and `multiplicity` are optional. Serialization writes the
//! canonical form with keys in that order, so parse and serialize round-trip
//! byte for byte on canonical input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Labels, Multihypergraph};
use crate::walks::{Bicoloring, Binomial, WalkVector};

/// Wire form of a hypergraph document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Labels>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<u64>>,
}

/// A parsed document: simple unless a multiplicity array was present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Simple(Hypergraph),
    Multi(Multihypergraph),
}

impl Parsed {
    /// The underlying simple hypergraph (the support, for a multihypergraph).
    pub fn hypergraph(&self) -> &Hypergraph {
        match self {
            Parsed::Simple(h) => h,
            Parsed::Multi(m) => m.base(),
        }
    }

    pub fn into_multi(self) -> Multihypergraph {
        match self {
            Parsed::Simple(h) => Multihypergraph::simple(h),
            Parsed::Multi(m) => m,
        }
    }

    pub fn to_doc(&self) -> HypergraphDoc {
        match self {
            Parsed::Simple(h) => hypergraph_doc(h),
            Parsed::Multi(m) => multihypergraph_doc(m),
        }
    }
}

pub fn parse_hypergraph(bytes: &[u8]) -> Result<Parsed> {
    let doc: HypergraphDoc =
        serde_json::from_slice(bytes).map_err(|e| Error::Parse(format!("hypergraph JSON: {e}")))?;
    from_doc(doc)
}

pub fn parse_hypergraph_value(v: Value) -> Result<Parsed> {
    let doc: HypergraphDoc = serde_json::from_value(v).map_err(|e| Error::Parse(format!("hypergraph JSON: {e}")))?;
    from_doc(doc)
}

pub fn from_doc(doc: HypergraphDoc) -> Result<Parsed> {
    let n = doc.n;
    for (i, e) in doc.edges.iter().enumerate() {
        if e.is_empty() {
            return Err(Error::Parse(format!("edges[{i}]: empty edge")));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::Parse(format!("edges[{i}] = {e:?}: vertex {v} out of range (n = {n})")));
        }
    }
    let (h, order) = match doc.labels {
        Some(labels) => Hypergraph::with_labels_permuted(n, doc.edges, labels)?,
        None => {
            let m = doc.edges.len();
            let h = Hypergraph::new(n, doc.edges.clone())?;
            // recover the permutation from the canonical edge order
            let mut order = vec![0; m];
            for (i, e) in doc.edges.iter().enumerate() {
                order[h.edge_index(e).expect("edge survives canonicalization")] = i;
            }
            (h, order)
        }
    };
    match doc.multiplicity {
        None => Ok(Parsed::Simple(h)),
        Some(mult) => {
            if mult.len() != order.len() {
                return Err(Error::Parse(format!("multiplicity has {} entries, expected {}", mult.len(), order.len())));
            }
            let mult = order.iter().map(|&i| mult[i]).collect();
            Ok(Parsed::Multi(Multihypergraph::new(h, mult)?))
        }
    }
}

pub fn hypergraph_doc(h: &Hypergraph) -> HypergraphDoc {
    HypergraphDoc { n: h.n(), edges: h.edges().to_vec(), labels: h.labels().cloned(), multiplicity: None }
}

pub fn multihypergraph_doc(m: &Multihypergraph) -> HypergraphDoc {
    HypergraphDoc { multiplicity: Some(m.multiplicity().to_vec()), ..hypergraph_doc(m.base()) }
}

/// Compact canonical JSON.
pub fn to_json(doc: &HypergraphDoc) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

/// Plain-text edge list: one edge per line, vertices separated by spaces or
/// commas. `#` starts a comment. An optional first line `n <count>` fixes the
/// vertex count; otherwise it is one more than the largest vertex. Repeated
/// edges turn the result into a multihypergraph.
pub fn parse_edge_list(text: &str) -> Result<Parsed> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n ") {
            if n.is_some() || !edges.is_empty() {
                return Err(Error::Parse(format!("line {}: vertex count must come first", lineno + 1)));
            }
            n = Some(rest.trim().parse::<usize>().map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?);
            continue;
        }
        let e = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("line {}: {t:?}: {e}", lineno + 1))))
            .collect::<Result<Vec<usize>>>()?;
        edges.push(e);
    }
    let n = n.unwrap_or_else(|| edges.iter().flatten().max().map_or(0, |&v| v + 1));
    for (i, e) in edges.iter().enumerate() {
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::Parse(format!("edge {i} = {e:?}: vertex {v} out of range (n = {n})")));
        }
    }
    let mut sorted: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.sort_unstable();
            e
        })
        .collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        Ok(Parsed::Multi(Multihypergraph::from_edge_list(n, edges)?))
    } else {
        Ok(Parsed::Simple(Hypergraph::new(n, edges)?))
    }
}

/// `{"coeffs": [...], "degree": k, "binomial": "..."}`.
pub fn walk_vector_json(w: &WalkVector) -> Value {
    serde_json::json!({
        "coeffs": w.coeffs(),
        "degree": w.degree(),
        "binomial": w.to_binomial().to_string(),
    })
}

/// `{"blue": [...], "red": [...]}` with per-edge counts.
pub fn bicoloring_json(c: &Bicoloring) -> Value {
    serde_json::json!({ "blue": c.blue(), "red": c.red() })
}

/// Reads `{"blue": [...], "red": [...]}` with one count per edge.
pub fn parse_bicoloring(h: &Hypergraph, v: &Value) -> Result<Bicoloring> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Wire {
        blue: Vec<u64>,
        red: Vec<u64>,
    }
    let w: Wire = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("bicoloring: {e}")))?;
    Bicoloring::new(h.clone(), w.blue, w.red)
}

/// Reads an integer coefficient vector with one entry per edge.
pub fn parse_vector(h: &Hypergraph, v: &Value) -> Result<Vec<i64>> {
    let u: Vec<i64> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("vector: {e}")))?;
    if u.len() != h.num_edges() {
        return Err(Error::Parse(format!("vector has {} entries, expected {}", u.len(), h.num_edges())));
    }
    Ok(u)
}

/// Parses `m1 - m2` where each monomial is `1` or a product of variables.
///
/// A variable is `t_{eK}` for the edge with index `K`, `t_{a,b,...}` for
/// the edge with those vertices, or the compact `tab` / `t_{ab}` in which
/// every character names one vertex. Vertex names are labels when the host
/// has vertex labels and indices otherwise. `*` between factors and `^k`
/// exponents are optional.
pub fn parse_binomial(h: &Hypergraph, text: &str) -> Result<Binomial> {
    let text = text.replace('\u{2212}', "-");
    let parts: Vec<&str> = text.split('-').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("binomial must have the form m1 - m2: {text:?}")));
    }
    let plus = parse_monomial(h, parts[0])?;
    let minus = parse_monomial(h, parts[1])?;
    Binomial::new(h.clone(), plus, minus)
}

fn parse_monomial(h: &Hypergraph, s: &str) -> Result<BTreeMap<usize, u64>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = BTreeMap::new();
    if chars == ['1'] {
        return Ok(out);
    }
    if chars.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut i = 0;
    let err = |msg: &str| Error::Parse(format!("monomial {:?}: {msg}", s.trim()));
    while i < chars.len() {
        if chars[i] == '*' {
            i += 1;
            continue;
        }
        if chars[i] != 't' {
            return Err(err("expected a variable t..."));
        }
        i += 1;
        if chars.get(i) == Some(&'_') {
            i += 1;
        }
        let body: String = if chars.get(i) == Some(&'{') {
            let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(|| err("unclosed brace"))? + i;
            let b = chars[i + 1..close].iter().collect();
            i = close + 1;
            b
        } else {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() && chars[i] != 't' {
                i += 1;
            }
            chars[start..i].iter().collect()
        };
        let mut exp = 1u64;
        if chars.get(i) == Some(&'^') {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            exp = digits.parse().map_err(|_| err("bad exponent"))?;
        }
        let e = resolve_variable(h, &body).map_err(|m| err(&m))?;
        *out.entry(e).or_insert(0) += exp;
    }
    Ok(out)
}

fn resolve_variable(h: &Hypergraph, body: &str) -> std::result::Result<usize, String> {
    if let Some(k) = body.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
        return if k < h.num_edges() { Ok(k) } else { Err(format!("edge index {k} out of range")) };
    }
    let names: Vec<String> = if body.contains(',') {
        body.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        body.chars().map(String::from).collect()
    };
    if names.is_empty() || names.iter().any(|t| t.is_empty()) {
        return Err("empty variable".into());
    }
    let labels = h.labels().and_then(|l| l.vertices.as_ref());
    let vertices = names
        .iter()
        .map(|t| match labels {
            Some(ls) => ls.iter().position(|l| l == t).ok_or_else(|| format!("unknown vertex label {t:?}")),
            None => t.parse::<usize>().map_err(|_| format!("bad vertex index {t:?}")),
        })
        .collect::<std::result::Result<Vec<usize>, String>>()?;
    h.edge_index(&vertices).ok_or_else(|| format!("{{{body}}} is not an edge"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::in_ideal;

    fn k5_labeled() -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push(vec![i, j]);
            }
        }
        let labels = Labels { vertices: Some((1..=5).map(|i| i.to_string()).collect()), edges: None };
        Hypergraph::with_labels(5, edges, labels).unwrap()
    }

    #[test]
    fn minimal_document() {
        let p = parse_hypergraph(br#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert!(matches!(&p, Parsed::Simple(h) if h.num_edges() == 1));
        assert_eq!(to_json(&p.to_doc()), r#"{"n":2,"edges":[[0,1]]}"#);
    }

    #[test]
    fn multiplicity_follows_edges() {
        let p = parse_hypergraph(br#"{"n":3,"edges":[[1,2],[0,1]],"multiplicity":[2,1]}"#).unwrap();
        let Parsed::Multi(m) = &p else { panic!("expected multihypergraph") };
        assert_eq!(m.base().edges(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(m.multiplicity(), &[1, 2]);
        let s = to_json(&p.to_doc());
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]],"multiplicity":[1,2]}"#);
        assert_eq!(parse_hypergraph(s.as_bytes()).unwrap(), p);
    }

    #[test]
    fn out_of_range_names_edge() {
        let e = parse_hypergraph(br#"{"n":3,"edges":[[0,1],[1,9]]}"#).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("edges[1]") && msg.contains('9'), "{msg}");
        assert!(parse_hypergraph(br#"{"n":3,"edges":[[0,1]],"extra":1}"#).is_err());
        assert!(parse_hypergraph(b"{").is_err());
    }

    #[test]
    fn labels_round_trip() {
        let s = r#"{"n":3,"edges":[[1,2],[0,1]],"labels":{"vertices":["a","b","c"],"edges":["x","y"]}}"#;
        let p = parse_hypergraph(s.as_bytes()).unwrap();
        let out = to_json(&p.to_doc());
        assert_eq!(out, r#"{"n":3,"edges":[[0,1],[1,2]],"labels":{"vertices":["a","b","c"],"edges":["y","x"]}}"#);
        assert_eq!(to_json(&parse_hypergraph(out.as_bytes()).unwrap().to_doc()), out);
    }

    #[test]
    fn edge_list_text() {
        let p = parse_edge_list("# square\n0 1\n1,2\n2 3\n3 0\n").unwrap();
        assert_eq!(p.hypergraph().num_edges(), 4);
        assert_eq!(p.hypergraph().n(), 4);
        let p = parse_edge_list("n 5\n0 1\n1 0\n").unwrap();
        let Parsed::Multi(m) = p else { panic!("expected multihypergraph") };
        assert_eq!((m.base().n(), m.multiplicity()), (5, &[2u64][..]));
        assert!(parse_edge_list("n 2\n0 4\n").is_err());
    }

    #[test]
    fn binomials() {
        let h = k5_labeled();
        let b = parse_binomial(&h, "t13t24 − t12t34").unwrap();
        assert!(in_ideal(&b));
        let b2 = parse_binomial(&h, "t_{1,3}*t_{2,4} - t_{1,2} t_{3,4}").unwrap();
        assert_eq!(b, b2);
        let round = parse_binomial(&h, &b.to_string()).unwrap();
        assert_eq!(round, b);
        assert!(!in_ideal(&parse_binomial(&h, "t12 - t34").unwrap()));
        assert!(parse_binomial(&h, "t16 - t12").is_err());
        let sq = parse_binomial(&h, "t_{e0}^2 - 1").unwrap();
        assert_eq!(sq.plus().get(&0), Some(&2));
    }
}
