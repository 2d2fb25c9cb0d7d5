//! Plain-text interchange formats.
//!
//! Hypergraph (`berge-hgraph v1`):
//! ```text
//! berge-hgraph v1
//! r=3 n=7
//! 0 1 2
//! 4 5 6
//! ```
//!
//! Graph / red-blue graph (`berge-graph v1`): a `n=<n>` line followed by
//! `u v` lines, with a trailing `red`/`blue` color column for colored graphs.
//! `#` starts a comment line; duplicate edge lines are a parse error.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::redblue::RedBlueGraph;

const HGRAPH_HEADER: &str = "berge-hgraph v1";
const GRAPH_HEADER: &str = "berge-graph v1";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-blank, non-comment line with its 1-based line number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim_end_matches('\r');
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

fn parse_kv(token: &str, key: &str, line: usize) -> Result<usize> {
    let rest = token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| err(line, format!("expected `{key}=<int>`, got `{token}`")))?;
    rest.parse::<usize>()
        .map_err(|_| err(line, format!("bad integer in `{token}`")))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_content().ok_or_else(|| err(0, "empty input"))?;
    if header.trim() != HGRAPH_HEADER {
        return Err(err(ln, format!("expected header `{HGRAPH_HEADER}`")));
    }
    let (ln, params) = lines
        .next_content()
        .ok_or_else(|| err(ln, "missing `r=<r> n=<n>` line"))?;
    let tokens: Vec<&str> = params.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(ln, "expected `r=<r> n=<n>`"));
    }
    let r = parse_kv(tokens[0], "r", ln)?;
    let n = parse_kv(tokens[1], "n", ln)?;

    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    while let Some((ln, line)) = lines.next_content() {
        let mut verts = Vec::with_capacity(r);
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| err(ln, format!("bad vertex index `{tok}`")))?;
            verts.push(v);
        }
        if verts.len() != r {
            return Err(err(
                ln,
                format!("expected {r} vertex indices, got {}", verts.len()),
            ));
        }
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err(ln, "vertex indices must be strictly increasing"));
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= n) {
            return Err(err(ln, format!("vertex {v} out of range (n = {n})")));
        }
        if let Some((prev, _)) = edges.iter().find(|(_, e)| *e == verts) {
            return Err(err(
                ln,
                format!("duplicate edge line (first at line {prev})"),
            ));
        }
        edges.push((ln, verts));
    }
    Hypergraph::from_edges(n, r, edges.into_iter().map(|(_, e)| e))
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(HGRAPH_HEADER);
    out.push('\n');
    out.push_str(&format!("r={} n={}\n", h.r(), h.n()));
    for e in h.edges() {
        let row: Vec<String> = e.vertices().iter().map(|v| v.0.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

type EdgePairs = Vec<(usize, usize)>;

fn parse_graph_body(text: &str, colored: bool) -> Result<(usize, EdgePairs, EdgePairs)> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_content().ok_or_else(|| err(0, "empty input"))?;
    if header.trim() != GRAPH_HEADER {
        return Err(err(ln, format!("expected header `{GRAPH_HEADER}`")));
    }
    let (ln, params) = lines
        .next_content()
        .ok_or_else(|| err(ln, "missing `n=<n>` line"))?;
    let tokens: Vec<&str> = params.split_whitespace().collect();
    if tokens.len() != 1 {
        return Err(err(ln, "expected `n=<n>`"));
    }
    let n = parse_kv(tokens[0], "n", ln)?;

    let mut red = Vec::new();
    let mut blue = Vec::new();
    let mut seen: Vec<(usize, usize)> = Vec::new();
    while let Some((ln, line)) = lines.next_content() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let expected = if colored { 3 } else { 2 };
        if tokens.len() != expected {
            return Err(err(
                ln,
                format!("expected {expected} columns, got {}", tokens.len()),
            ));
        }
        let u: usize = tokens[0]
            .parse()
            .map_err(|_| err(ln, format!("bad vertex index `{}`", tokens[0])))?;
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| err(ln, format!("bad vertex index `{}`", tokens[1])))?;
        if u == v {
            return Err(err(ln, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(err(ln, format!("vertex out of range (n = {n})")));
        }
        let key = (u.min(v), u.max(v));
        if seen.contains(&key) {
            return Err(err(ln, format!("duplicate edge {{{}, {}}}", key.0, key.1)));
        }
        seen.push(key);
        if colored {
            match tokens[2] {
                "red" => red.push(key),
                "blue" => blue.push(key),
                other => return Err(err(ln, format!("unknown color `{other}`"))),
            }
        } else {
            blue.push(key);
        }
    }
    Ok((n, red, blue))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, _, edges) = parse_graph_body(text, false)?;
    Graph::new(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(GRAPH_HEADER);
    out.push('\n');
    out.push_str(&format!("n={}\n", g.n()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_redblue(text: &str) -> Result<RedBlueGraph> {
    let (n, red, blue) = parse_graph_body(text, true)?;
    RedBlueGraph::new(n, red, blue)
}

pub fn serialize_redblue(g: &RedBlueGraph) -> String {
    let mut out = String::new();
    out.push_str(GRAPH_HEADER);
    out.push('\n');
    out.push_str(&format!("n={}\n", g.n()));
    let mut rows: Vec<(usize, usize, &str)> = g
        .red_edges()
        .iter()
        .map(|&(u, v)| (u, v, "red"))
        .chain(g.blue_edges().iter().map(|&(u, v)| (u, v, "blue")))
        .collect();
    rows.sort();
    for (u, v, color) in rows {
        out.push_str(&format!("{u} {v} {color}\n"));
    }
    out
}
