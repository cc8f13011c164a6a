//! Edge lists, graph6 and DOT.
//!
//! Edge lists carry multigraphs: a header line `n m`, then `m` lines `u v`.
//! Blank lines and anything after `#` are ignored. graph6 is for simple
//! graphs only.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use cyclex_core::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph6 cannot encode a graph with parallel edges")]
    NotSimple,
}

fn el_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::EdgeList { line, msg: msg.into() }
}

/// Parses an edge list. Edge `i` of the result is the `i`-th edge line.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| el_err(1, "missing header `n m`"))?;
    let nums = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(el_err(line, "expected two integers"));
        }
        let p = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| el_err(line, format!("not an integer: {s}")))
        };
        Ok((p(parts[0])?, p(parts[1])?))
    };
    let (n, m) = nums(hl, header)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = nums(line, l)?;
        if u >= n || v >= n {
            return Err(el_err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(el_err(line, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v).map_err(|e| el_err(line, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(el_err(hl, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

/// Writes `g` as an edge list, relabelling to dense ids first.
pub fn to_edgelist(g: &Graph) -> String {
    let (c, _, _) = g.compact();
    let mut out = format!("{} {}\n", c.order(), c.size());
    for (_, u, v) in c.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn g6_size(bytes: &[u8]) -> Result<(usize, usize), FormatError> {
    let bad = || FormatError::Graph6(String::from("truncated size header"));
    match bytes.first() {
        None => Err(FormatError::Graph6(String::from("empty input"))),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                let digits = bytes.get(2..8).ok_or_else(bad)?;
                Ok((digits.iter().fold(0, |n, &b| (n << 6) | (b - 63) as usize), 8))
            } else {
                let digits = bytes.get(1..4).ok_or_else(bad)?;
                Ok((digits.iter().fold(0, |n, &b| (n << 6) | (b - 63) as usize), 4))
            }
        }
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

/// Parses one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("invalid character {:?}", b as char)));
    }
    let (n, start) = g6_size(bytes)?;
    let body = &bytes[start..];
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(FormatError::Graph6(format!(
            "expected {need} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("distinct in-range vertices");
            }
            k += 1;
        }
    }
    if (k..need * 6).any(bit) {
        return Err(FormatError::Graph6(String::from("nonzero padding bits")));
    }
    Ok(g)
}

/// Encodes a simple graph, relabelling to dense ids first.
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    if !g.is_simple() {
        return Err(FormatError::NotSimple);
    }
    let (c, _, _) = g.compact();
    let n = c.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | (c.multiplicity(i, j) > 0) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// Parses by content: a first line with two integers is an edge list,
/// anything else is graph6.
pub fn parse_auto(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let is_edgelist = {
        let parts: Vec<&str> = first.split_whitespace().collect();
        parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
    };
    if is_edgelist {
        parse_edgelist(text)
    } else {
        parse_graph6(first)
    }
}

/// Vertices and edges to draw in bold red.
#[derive(Clone, Debug, Default)]
pub struct Highlights {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl Highlights {
    pub fn edges(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        Highlights {
            vertices: BTreeSet::new(),
            edges: edges.into_iter().collect(),
        }
    }
}

pub fn to_dot(g: &Graph, highlights: Option<&Highlights>) -> String {
    let empty = Highlights::default();
    let h = highlights.unwrap_or(&empty);
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if h.vertices.contains(&v) {
            let _ = writeln!(out, "  {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (e, u, v) in g.edges() {
        if h.edges.contains(&e) {
            let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\", color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\"];");
        }
    }
    out.push_str("}\n");
    out
}
