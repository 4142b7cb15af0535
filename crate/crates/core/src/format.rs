//! Text formats.
//!
//! Hypergraphs (`.hg`):
//!
//! ```text
//! # comment
//! p hg <n> <m>
//! e <v1> <v2> ... <vk>      (m lines, 1-based vertex ids)
//! ```
//!
//! Graphs (`.gr`) use `p edge <n> <m>` and `e <u> <v>`. Writers emit sorted
//! vertices per edge and edges in id order, so parse-then-write is
//! byte-stable on writer output.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{DuplicatePolicy, Hypergraph, VertexId};

/// A parsed value together with non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

struct Header {
    n: usize,
    m: usize,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// Yields `(line number, trimmed line)` for non-blank, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number(line: usize, token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("expected a nonnegative integer, found '{token}'")))
}

fn parse_header(line: usize, tokens: &[&str], kind: &str) -> Result<Header> {
    match tokens {
        ["p", k, n, m] if *k == kind => Ok(Header {
            n: parse_number(line, n)?,
            m: parse_number(line, m)?,
        }),
        _ => Err(syntax(line, format!("expected header 'p {kind} <n> <m>'"))),
    }
}

/// An `e` line: its line number and 0-based vertices.
type Record = (usize, Vec<VertexId>);

/// Reads the header and the `e` lines, mapping each vertex to 0-based.
fn parse_records(text: &str, kind: &str) -> Result<(Header, Vec<Record>)> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| syntax(0, "missing header"))?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    let header = parse_header(line, &tokens, kind)?;
    let mut records = Vec::with_capacity(header.m);
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("e") => {}
            Some("p") => return Err(syntax(line, "repeated header")),
            Some(other) => return Err(syntax(line, format!("unknown record '{other}'"))),
            None => unreachable!("blank lines are filtered"),
        }
        let mut vertices = Vec::new();
        for token in tokens {
            let v = parse_number(line, token)?;
            if v == 0 || v > header.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: header.n });
            }
            vertices.push(v - 1);
        }
        records.push((line, vertices));
    }
    if records.len() != header.m {
        return Err(syntax(
            line,
            format!("header announces {} edges but {} were given", header.m, records.len()),
        ));
    }
    Ok((header, records))
}

/// Parses the `.hg` format. Under [`DuplicatePolicy::Reject`] a repeated
/// edge is an error; under [`DuplicatePolicy::Merge`] it is dropped with a
/// warning. Repeated vertices inside one edge always collapse with a warning.
pub fn parse_hypergraph(text: &str, policy: DuplicatePolicy) -> Result<Parsed<Hypergraph>> {
    let (header, records) = parse_records(text, "hg")?;
    let mut warnings = Vec::new();
    for (line, vertices) in &records {
        if vertices.is_empty() {
            return Err(Error::EmptyEdge { line: *line });
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            warnings.push(format!("line {line}: repeated vertex collapsed"));
        }
    }
    let lines: Vec<usize> = records.iter().map(|(l, _)| *l).collect();
    let built = Hypergraph::from_edges(header.n, records.into_iter().map(|(_, v)| v).collect(), policy).map_err(
        |e| match e {
            Error::DuplicateEdge { first, second } => Error::DuplicateEdge {
                first: lines[first],
                second: lines[second],
            },
            other => other,
        },
    )?;
    if built.merged > 0 {
        warnings.push(format!("{} duplicate edge(s) merged", built.merged));
    }
    Ok(Parsed {
        value: built.hypergraph,
        warnings,
    })
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hg {} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

/// Parses the `.gr` format with the same duplicate handling as
/// [`parse_hypergraph`].
pub fn parse_graph(text: &str, policy: DuplicatePolicy) -> Result<Parsed<Graph>> {
    let (header, records) = parse_records(text, "edge")?;
    let mut pairs = Vec::with_capacity(records.len());
    for (line, vertices) in &records {
        match vertices.as_slice() {
            [u, v] => pairs.push((*u, *v)),
            _ => return Err(syntax(*line, "graph edges have exactly two endpoints")),
        }
    }
    let (graph, merged) = Graph::from_edges(header.n, &pairs, policy).map_err(|e| match e {
        Error::DuplicateEdge { first, second } => Error::DuplicateEdge {
            first: records[first].0,
            second: records[second].0,
        },
        Error::SelfLoop { vertex } => Error::SelfLoop { vertex: vertex + 1 },
        other => other,
    })?;
    let mut warnings = Vec::new();
    if merged > 0 {
        warnings.push(format!("{merged} duplicate edge(s) merged"));
    }
    Ok(Parsed { value: graph, warnings })
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
