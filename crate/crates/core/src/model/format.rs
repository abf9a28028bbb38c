//! Line-oriented text formats.
//!
//! Instance:
//! ```text
//! p efx <n> <m>
//! <u> <v> <w>        (m lines, w an integer or p/q)
//! ```
//! Orientation: one `<u> <v> -> <r>` line per edge.
//! Lines starting with `#` and blank lines are ignored in both.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::instance::{Instance, InstanceError, VertexId};
use super::orientation::Orientation;
use super::value::{Value, ValueError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing `p efx <n> <m>` header")]
    MissingHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("{0}")]
    Value(#[from] ValueError),
    #[error("{0}")]
    Instance(#[from] InstanceError),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("edge {0}-{1} is not in the instance")]
    UnknownEdge(VertexId, VertexId),
    #[error("edge {0}-{1} oriented twice")]
    RepeatedEdge(VertexId, VertexId),
    #[error("receiver {r} is not an endpoint of {u}-{v}")]
    BadReceiver { u: VertexId, v: VertexId, r: VertexId },
    #[error("edge {0}-{1} has no direction")]
    MissingEdge(VertexId, VertexId),
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError { line, kind: kind.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_vertex(line: usize, tok: &str) -> Result<VertexId, ParseError> {
    tok.parse()
        .map_err(|_| err(line, ParseErrorKind::Malformed(format!("bad vertex {tok:?}"))))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "efx" {
        return Err(err(hline, ParseErrorKind::MissingHeader));
    }
    let n = parse_vertex(hline, toks[2])?;
    let m: usize = parse_vertex(hline, toks[3])?;

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(err(line, ParseErrorKind::Malformed(l.to_string())));
        }
        let u = parse_vertex(line, toks[0])?;
        let v = parse_vertex(line, toks[1])?;
        let w: Value = toks[2].parse().map_err(|e: ValueError| err(line, e))?;
        for x in [u, v] {
            if x >= n {
                return Err(err(line, InstanceError::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(line, InstanceError::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, InstanceError::DuplicateEdge(u.min(v), u.max(v))));
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(err(last, ParseErrorKind::EdgeCount { declared: m, found: edges.len() }));
    }
    Instance::new(n, edges).map_err(|e| err(hline, e))
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "p efx {} {}", inst.n(), inst.m()).unwrap();
    for e in inst.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.value).unwrap();
    }
    out
}

pub fn parse_orientation(inst: &Instance, text: &str) -> Result<Orientation, ParseError> {
    let mut receiver: Vec<Option<VertexId>> = vec![None; inst.m()];
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 4 || toks[2] != "->" {
            return Err(err(line, ParseErrorKind::Malformed(l.to_string())));
        }
        let u = parse_vertex(line, toks[0])?;
        let v = parse_vertex(line, toks[1])?;
        let r = parse_vertex(line, toks[3])?;
        let e = inst
            .edge_between(u, v)
            .ok_or(err(line, ParseErrorKind::UnknownEdge(u, v)))?;
        if r != u && r != v {
            return Err(err(line, ParseErrorKind::BadReceiver { u, v, r }));
        }
        if receiver[e].replace(r).is_some() {
            return Err(err(line, ParseErrorKind::RepeatedEdge(u, v)));
        }
    }
    let mut out = Vec::with_capacity(inst.m());
    for (e, r) in receiver.into_iter().enumerate() {
        match r {
            Some(r) => out.push(r),
            None => {
                let edge = inst.edge(e);
                return Err(err(0, ParseErrorKind::MissingEdge(edge.u, edge.v)));
            }
        }
    }
    Ok(Orientation::from_receivers(inst, out).expect("receivers checked per line"))
}

pub fn serialize_orientation(inst: &Instance, o: &Orientation) -> String {
    let mut out = String::new();
    for (id, e) in inst.edges().iter().enumerate() {
        writeln!(out, "{} {} -> {}", e.u, e.v, o.receiver(id)).unwrap();
    }
    out
}
