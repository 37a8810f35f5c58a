//! DOT and JSON renderings of power graphs and quotient graphs.
//!
//! Vertices are emitted in index order with quoted numeric ids and the
//! element (or subgroup) name as label.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, LabeledDigraph};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn header(out: &mut String, keyword: &str, name: &str, names: &[String]) {
    writeln!(out, "{keyword} {} {{", quote(name)).unwrap();
    for (i, n) in names.iter().enumerate() {
        writeln!(out, "  {} [label={}];", quote(&i.to_string()), quote(n)).unwrap();
    }
}

fn check_names(vertex_count: usize, names: &[String]) -> Result<()> {
    if names.len() != vertex_count {
        return Err(Error::InvalidArgument(format!(
            "{} names for {vertex_count} vertices",
            names.len()
        )));
    }
    Ok(())
}

/// DOT text for `g`. Directed output draws each mutual pair once with
/// `dir=both`; undirected output keeps one `--` edge per symmetric pair.
pub fn to_dot(g: &Digraph, names: &[String], directed: bool, name: &str) -> Result<String> {
    check_names(g.vertex_count(), names)?;
    let mut out = String::new();
    header(
        &mut out,
        if directed { "digraph" } else { "graph" },
        name,
        names,
    );
    for (u, v) in g.edges() {
        let (a, b) = (quote(&u.to_string()), quote(&v.to_string()));
        let mutual = g.has_edge(v, u);
        if !directed {
            if u < v || !mutual {
                writeln!(out, "  {a} -- {b};").unwrap();
            }
        } else if !mutual {
            writeln!(out, "  {a} -> {b};").unwrap();
        } else if u < v {
            writeln!(out, "  {a} -> {b} [dir=both];").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT text for a labelled quotient graph; every edge carries its label.
pub fn labeled_to_dot(q: &LabeledDigraph, names: &[String], name: &str) -> Result<String> {
    check_names(q.vertex_count(), names)?;
    let mut out = String::new();
    header(&mut out, "digraph", name, names);
    for (u, v, l) in q.labeled_edges() {
        let (a, b) = (quote(&u.to_string()), quote(&v.to_string()));
        match q.label(v, u) {
            Some(back) if back == l && u < v => {
                writeln!(out, "  {a} -> {b} [label={l}, dir=both];").unwrap()
            }
            Some(back) if back == l => {}
            _ => writeln!(out, "  {a} -> {b} [label={l}];").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Structured graph document: `{vertices, edges: [[u, v, label?]], directed}`.
/// Undirected documents list each edge once with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<u64>>,
    pub directed: bool,
}

impl GraphDocument {
    pub fn from_digraph(g: &Digraph, names: &[String], directed: bool) -> Result<Self> {
        check_names(g.vertex_count(), names)?;
        if !directed && !g.is_symmetric() {
            return Err(Error::InvalidArgument(
                "undirected document needs a symmetric graph".into(),
            ));
        }
        let edges = g
            .edges()
            .filter(|&(u, v)| directed || u < v)
            .map(|(u, v)| vec![u as u64, v as u64])
            .collect();
        Ok(Self {
            vertices: names.to_vec(),
            edges,
            directed,
        })
    }

    pub fn from_labeled(q: &LabeledDigraph, names: &[String]) -> Result<Self> {
        check_names(q.vertex_count(), names)?;
        Ok(Self {
            vertices: names.to_vec(),
            edges: q
                .labeled_edges()
                .map(|(u, v, l)| vec![u as u64, v as u64, l])
                .collect(),
            directed: true,
        })
    }

    fn endpoints(&self) -> Result<Vec<(usize, usize, Option<u64>)>> {
        self.edges
            .iter()
            .map(|e| match e.as_slice() {
                [u, v] => Ok((*u as usize, *v as usize, None)),
                [u, v, l] => Ok((*u as usize, *v as usize, Some(*l))),
                _ => Err(Error::InvalidArgument(format!(
                    "edge {e:?} needs 2 or 3 entries"
                ))),
            })
            .collect()
    }

    /// The graph back; undirected documents come back symmetric.
    pub fn to_digraph(&self) -> Result<Digraph> {
        let ends = self.endpoints()?;
        let both = ends
            .iter()
            .flat_map(|&(u, v, _)| [Some((u, v)), (!self.directed).then_some((v, u))])
            .flatten();
        Digraph::from_edges(self.vertices.len(), both)
    }

    pub fn to_labeled(&self) -> Result<LabeledDigraph> {
        let ends = self.endpoints()?;
        let labeled = ends
            .into_iter()
            .map(|(u, v, l)| {
                l.map(|l| (u, v, l))
                    .ok_or_else(|| Error::InvalidArgument("edge without label".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledDigraph::from_edges(self.vertices.len(), labeled)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("graph document: {e}")))
    }
}
