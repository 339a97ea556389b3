use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

use super::{InstanceBundle, InstanceMetadata};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, content: &str, want: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != want {
        return Err(parse_err(
            line_no,
            format!("expected {want} integers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

/// Parses the instance text format: a header `n k m`, then `m` lines
/// `u v label` with 1-based ids. `#` starts a comment; blank lines are
/// ignored. Errors carry the 1-based line number.
pub fn parse_instance(text: &str) -> Result<LabeledGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        if raw.ends_with('\r') {
            return Err(parse_err(
                line_no,
                "CR line ending; the format uses LF only",
            ));
        }
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last_line = line_no;
        match header {
            None => {
                let v = numbers(line_no, content, 3)?;
                header = Some((v[0], v[1], v[2]));
            }
            Some((_, _, m)) => {
                if edges.len() == m {
                    return Err(parse_err(
                        line_no,
                        format!("more than the declared {m} edges"),
                    ));
                }
                let v = numbers(line_no, content, 3)?;
                edges.push((v[0], v[1], v[2]));
                edge_lines.push(line_no);
            }
        }
    }
    let (n, k, m) = header.ok_or_else(|| parse_err(1, "missing `n k m` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    LabeledGraph::new(n, k, &edges).map_err(|e| match e {
        Error::SelfLoop { edge, .. }
        | Error::DuplicateEdge { edge, .. }
        | Error::NodeOutOfRange { edge, .. }
        | Error::LabelOutOfRange { edge, .. } => parse_err(edge_lines[edge], e.to_string()),
        other => other,
    })
}

/// Canonical text: header, then edges sorted by `(u, v)` with `u < v`.
pub fn format_instance(g: &LabeledGraph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        g.node_count(),
        g.label_count(),
        g.edge_count()
    );
    for e in g.canonical_edges() {
        writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.label + 1).unwrap();
    }
    out
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<LabeledGraph> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn save_instance(g: &LabeledGraph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_instance(g))?;
    Ok(())
}

/// `g3.mlst` -> `g3.meta.json`.
pub fn sidecar_path(path: impl AsRef<Path>) -> PathBuf {
    path.as_ref().with_extension("meta.json")
}

/// Writes the instance file and its metadata sidecar.
pub fn save_bundle(bundle: &InstanceBundle, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    save_instance(&bundle.graph, path)?;
    let mut json = serde_json::to_string_pretty(&bundle.metadata())?;
    json.push('\n');
    fs::write(sidecar_path(path), json)?;
    Ok(())
}

/// Reads the sidecar next to `path`, if there is one.
pub fn load_metadata(path: impl AsRef<Path>) -> Result<Option<InstanceMetadata>> {
    let meta = sidecar_path(path);
    if !meta.exists() {
        return Ok(None);
    }
    Ok(Some(serde_json::from_str(&fs::read_to_string(meta)?)?))
}

/// Loads an instance together with its sidecar metadata, if present.
pub fn load_bundle(path: impl AsRef<Path>) -> Result<(LabeledGraph, Option<InstanceMetadata>)> {
    let path = path.as_ref();
    Ok((load_instance(path)?, load_metadata(path)?))
}
