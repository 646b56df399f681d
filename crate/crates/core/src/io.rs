//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v w        (m lines, w is +1 or -1, vertices 0-based)
//! ```
//!
//! The writer emits LF line endings, no comments, and `+1`/`-1` weights, so
//! anything it produces parses back to the same graph and re-serializes to
//! the same bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

pub fn write_edge_list(g: &SignedGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let mut tok = header.split_whitespace();
    let n = parse_usize(tok.next(), hline, "vertex count")?;
    let m = parse_usize(tok.next(), hline, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_err(hline, "header has trailing tokens"));
    }

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let mut tok = body.split_whitespace();
        let u = parse_usize(tok.next(), line, "endpoint u")?;
        let v = parse_usize(tok.next(), line, "endpoint v")?;
        let w: Sign = tok
            .next()
            .ok_or_else(|| parse_err(line, "missing weight"))?
            .parse()
            .map_err(|msg: String| parse_err(line, msg))?;
        if tok.next().is_some() {
            return Err(parse_err(line, "edge line has trailing tokens"));
        }
        edges.push(Edge::new(u, v, w));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    SignedGraph::new(n, edges).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn read_edge_list_file(path: &Path) -> Result<SignedGraph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_edge_list_file(path: &Path, g: &SignedGraph) -> Result<()> {
    fs::write(path, write_edge_list(g))?;
    Ok(())
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}
