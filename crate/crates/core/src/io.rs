//! Canonical file formats.
//!
//! Every document serializes deterministically: struct field order is fixed,
//! maps are ordered, edge lists are sorted with `u < v`. The canonical JSON
//! form of a graph is the hashing and golden-test currency, so writers must
//! stay byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constellation::Constellation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::InducedMinorModel;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

pub fn graph_to_doc(g: &Graph) -> GraphDoc {
    GraphDoc {
        n: g.n(),
        edges: g.edges(),
        labels: g
            .labels()
            .iter()
            .map(|(&v, l)| (v.to_string(), l.clone()))
            .collect(),
    }
}

pub fn doc_to_graph(doc: &GraphDoc) -> Result<Graph> {
    let mut g = Graph::new(doc.n);
    let mut prev: Option<(u32, u32)> = None;
    for &(u, v) in &doc.edges {
        if u >= v {
            return Err(Error::Malformed(format!(
                "edge ({u},{v}) not in u < v form"
            )));
        }
        if let Some(p) = prev {
            if p >= (u, v) {
                return Err(Error::Malformed("edge list not sorted".into()));
            }
        }
        prev = Some((u, v));
        g.add_edge(u, v)
            .map_err(|e| Error::Malformed(format!("{e}")))?;
    }
    for (k, l) in &doc.labels {
        let v: u32 = k
            .parse()
            .map_err(|_| Error::Malformed(format!("label key `{k}` is not a vertex id")))?;
        g.check_vertex(v).map_err(|e| Error::Malformed(format!("{e}")))?;
        g.set_label(v, l.clone());
    }
    Ok(g)
}

/// Canonical JSON: pretty-printed with a trailing newline, byte-stable.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable document");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(format!("{e}")))
}

pub fn graph_to_json(g: &Graph) -> String {
    to_canonical_json(&graph_to_doc(g))
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    doc_to_graph(&from_json(text)?)
}

/// DOT export for visualization; vertices carry their labels when present.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() as u32 {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{l}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Edge-list export: one `u v` pair per line, sorted.
pub fn graph_to_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Edge-list import: `n` is the largest mentioned id plus one.
pub fn graph_from_edgelist(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max = 0u32;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |s: Option<&str>| -> Result<u32> {
            s.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Malformed(format!("bad edge on line {}", lineno + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Malformed(format!(
                "trailing tokens on line {}",
                lineno + 1
            )));
        }
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    let n = if edges.is_empty() { 0 } else { max as usize + 1 };
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v).map_err(|e| Error::Malformed(format!("{e}")))?;
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Certificates, constellations, witnesses
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub host: GraphDoc,
    pub pattern: GraphDoc,
    /// pattern id -> sorted host ids, sorted by pattern id
    pub branch: Vec<(u32, Vec<u32>)>,
}

pub fn model_to_doc(m: &InducedMinorModel) -> CertificateDoc {
    CertificateDoc {
        host: graph_to_doc(&m.host),
        pattern: graph_to_doc(&m.pattern),
        branch: m
            .branch
            .iter()
            .enumerate()
            .map(|(i, set)| (i as u32, set.clone()))
            .collect(),
    }
}

pub fn doc_to_model(doc: &CertificateDoc) -> Result<InducedMinorModel> {
    let host = doc_to_graph(&doc.host)?;
    let pattern = doc_to_graph(&doc.pattern)?;
    let mut branch = vec![Vec::new(); pattern.n()];
    for (id, set) in &doc.branch {
        if *id as usize >= pattern.n() {
            return Err(Error::Malformed(format!(
                "branch key {id} exceeds the pattern size"
            )));
        }
        branch[*id as usize] = set.clone();
    }
    Ok(InducedMinorModel::new(pattern, host, branch))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstellationDoc {
    pub graph: GraphDoc,
    pub stars: Vec<u32>,
    pub paths: Vec<Vec<u32>>,
}

pub fn constellation_to_doc(c: &Constellation) -> ConstellationDoc {
    ConstellationDoc {
        graph: graph_to_doc(&c.graph),
        stars: c.stars.clone(),
        paths: c.paths.clone(),
    }
}

pub fn doc_to_constellation(doc: &ConstellationDoc) -> Result<Constellation> {
    Ok(Constellation::new(
        doc_to_graph(&doc.graph)?,
        doc.stars.clone(),
        doc.paths.clone(),
    ))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

/// Provenance hash of a graph: the digest of its canonical JSON form.
pub fn graph_hash(g: &Graph) -> String {
    sha256_hex(graph_to_json(g).as_bytes())
}
