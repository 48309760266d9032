//! Text formats: edge lists, DIMACS `.col`, and `vertex color` colorings.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines with
//! 1-based ids. Blank lines are ignored in every format; `#` starts a comment
//! line in edge lists and colorings.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::RawGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge ({u}, {v}) out of range for {n} vertices")]
    OutOfRange {
        line: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing header")]
    MissingHeader,
    #[error("line {line}: vertex {v} is colored twice")]
    DuplicateVertex { line: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("vertex {0} has no color")]
    MissingVertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReadOptions {
    /// Drop repeated edges with a warning instead of failing.
    pub dedup: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    /// DIMACS if the first meaningful line starts with `c` or `p`.
    #[default]
    Auto,
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(GraphFormat::Auto),
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Numbered lines that carry content.
fn content_lines(text: &str, comment: Option<char>) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && comment.is_none_or(|c| !l.starts_with(c)))
}

fn parse_fields<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], ParseError> {
    if fields.len() != N {
        return Err(syntax(
            line,
            format!("expected {N} integers, found {} fields", fields.len()),
        ));
    }
    let mut out = [0usize; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| syntax(line, format!("`{f}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

/// Collects edges, enforcing range, loop and duplicate rules.
struct EdgeSink {
    n: usize,
    dedup: bool,
    seen: HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
    listed: usize,
}

impl EdgeSink {
    fn new(n: usize, opts: ReadOptions) -> Self {
        EdgeSink {
            n,
            dedup: opts.dedup,
            seen: HashSet::new(),
            edges: Vec::new(),
            listed: 0,
        }
    }

    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        self.listed += 1;
        if u >= self.n || v >= self.n {
            return Err(ParseError::OutOfRange {
                line,
                u,
                v,
                n: self.n,
            });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, v });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            if self.dedup {
                log::warn!("line {line}: dropping duplicate edge ({u}, {v})");
                return Ok(());
            }
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, declared: usize) -> Result<RawGraph, ParseError> {
        if self.listed != declared {
            return Err(ParseError::EdgeCount {
                declared,
                found: self.listed,
            });
        }
        Ok(RawGraph::new(self.n, self.edges))
    }
}

pub fn parse_edge_list(text: &str, opts: ReadOptions) -> Result<RawGraph, ParseError> {
    let mut lines = content_lines(text, Some('#'));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = parse_fields::<2>(hline, &fields)?;
    let mut sink = EdgeSink::new(n, opts);
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = parse_fields::<2>(line, &fields)?;
        sink.push(line, u, v)?;
    }
    sink.finish(m)
}

pub fn parse_dimacs(text: &str, opts: ReadOptions) -> Result<RawGraph, ParseError> {
    let mut sink: Option<(EdgeSink, usize)> = None;
    for (line, l) in content_lines(text, None) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields[0] {
            "c" => {}
            "p" => {
                if sink.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let [n, m] = parse_fields::<2>(line, &fields[2..])?;
                sink = Some((EdgeSink::new(n, opts), m));
            }
            "e" => {
                let Some((s, _)) = sink.as_mut() else {
                    return Err(syntax(line, "edge before problem line"));
                };
                let [u, v] = parse_fields::<2>(line, &fields[1..])?;
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS vertex ids start at 1"));
                }
                s.push(line, u - 1, v - 1)?;
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (s, m) = sink.ok_or(ParseError::MissingHeader)?;
    s.finish(m)
}

pub fn parse_graph(
    text: &str,
    format: GraphFormat,
    opts: ReadOptions,
) -> Result<RawGraph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text, opts),
        GraphFormat::Dimacs => parse_dimacs(text, opts),
        GraphFormat::Auto => {
            let first = content_lines(text, Some('#')).next().map(|(_, l)| l);
            match first {
                Some(l) if l.starts_with('c') || l.starts_with('p') => parse_dimacs(text, opts),
                _ => parse_edge_list(text, opts),
            }
        }
    }
}

pub fn write_edge_list(raw: &RawGraph) -> String {
    let mut out = String::with_capacity(16 + raw.edges.len() * 12);
    writeln!(out, "{} {}", raw.n, raw.edges.len()).unwrap();
    for &(u, v) in &raw.edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dimacs(raw: &RawGraph) -> String {
    let mut out = String::with_capacity(24 + raw.edges.len() * 14);
    writeln!(out, "p edge {} {}", raw.n, raw.edges.len()).unwrap();
    for &(u, v) in &raw.edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Read `vertex color` lines. Every vertex in `0..n` must appear once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    const UNSET: usize = usize::MAX;
    let mut colors = vec![UNSET; n];
    for (line, l) in content_lines(text, Some('#')) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [v, c] = parse_fields::<2>(line, &fields)?;
        if v >= n {
            return Err(ParseError::VertexOutOfRange { line, v, n });
        }
        if c == UNSET {
            return Err(syntax(line, "color out of range"));
        }
        if colors[v] != UNSET {
            return Err(ParseError::DuplicateVertex { line, v });
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == UNSET) {
        return Err(ParseError::MissingVertex(v));
    }
    Ok(colors)
}

/// One `vertex color` line per vertex, in vertex order.
pub fn write_coloring(colors: &[usize]) -> String {
    let mut out = String::with_capacity(colors.len() * 10);
    for (v, c) in colors.iter().enumerate() {
        writeln!(out, "{v} {c}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const STRICT: ReadOptions = ReadOptions { dedup: false };

    #[test]
    fn edge_list_basic() {
        let raw = parse_edge_list("4 3\n0 1\n1 2\n\n2 3\n", STRICT).unwrap();
        assert_eq!(raw, RawGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]));
        assert_eq!(
            parse_edge_list(&write_edge_list(&raw), STRICT).unwrap(),
            raw
        );
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("", STRICT), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("3\n", STRICT),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert_eq!(
            parse_edge_list("3 1\n0 3\n", STRICT),
            Err(ParseError::OutOfRange {
                line: 2,
                u: 0,
                v: 3,
                n: 3
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n1 1\n", STRICT),
            Err(ParseError::SelfLoop { line: 2, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1\n", STRICT),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1\n1 2\n", STRICT),
            Err(ParseError::EdgeCount {
                declared: 1,
                found: 2
            })
        );
        assert!(parse_edge_list("3 1\n0 -1\n", STRICT).is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n", STRICT).is_err());
    }

    #[test]
    fn dedup_drops_reversed_duplicates() {
        let text = "3 3\n0 1\n1 0\n1 2\n";
        assert_eq!(
            parse_edge_list(text, STRICT),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 1,
                v: 0
            })
        );
        let raw = parse_edge_list(text, ReadOptions { dedup: true }).unwrap();
        assert_eq!(raw.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_basic() {
        let text = "c a path\np edge 3 2\ne 1 2\ne 2 3\n";
        let raw = parse_dimacs(text, STRICT).unwrap();
        assert_eq!(raw, RawGraph::new(3, vec![(0, 1), (1, 2)]));
        assert_eq!(parse_dimacs(&write_dimacs(&raw), STRICT).unwrap(), raw);
        assert_eq!(parse_graph(text, GraphFormat::Auto, STRICT).unwrap(), raw);
    }

    #[test]
    fn dimacs_errors() {
        assert_eq!(
            parse_dimacs("c only\n", STRICT),
            Err(ParseError::MissingHeader)
        );
        assert!(parse_dimacs("e 1 2\np edge 2 1\n", STRICT).is_err());
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n", STRICT).is_err());
        assert!(parse_dimacs("p cnf 2 1\n", STRICT).is_err());
        assert!(parse_dimacs("p edge 2 0\np edge 2 0\n", STRICT).is_err());
        assert!(parse_dimacs("p edge 2 1\nx 1 2\n", STRICT).is_err());
        assert!(matches!(
            parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n", STRICT),
            Err(ParseError::DuplicateEdge { .. })
        ));
        let raw = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n", ReadOptions { dedup: true }).unwrap();
        assert_eq!(raw.edges, vec![(0, 1)]);
    }

    #[test]
    fn auto_detects_edge_list() {
        let raw = parse_graph("# comment\n2 1\n0 1\n", GraphFormat::Auto, STRICT).unwrap();
        assert_eq!(raw, RawGraph::new(2, vec![(0, 1)]));
    }

    #[test]
    fn coloring_round_trip_and_errors() {
        let colors = vec![0, 1, 1, 2];
        let text = write_coloring(&colors);
        assert_eq!(text, "0 0\n1 1\n2 1\n3 2\n");
        assert_eq!(parse_coloring(&text, 4).unwrap(), colors);
        assert_eq!(parse_coloring("1 0\n0 1\n", 2).unwrap(), vec![1, 0]);
        assert_eq!(
            parse_coloring("0 0\n", 2),
            Err(ParseError::MissingVertex(1))
        );
        assert_eq!(
            parse_coloring("0 0\n0 1\n1 0\n", 2),
            Err(ParseError::DuplicateVertex { line: 2, v: 0 })
        );
        assert_eq!(
            parse_coloring("0 0\n5 1\n", 2),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                v: 5,
                n: 2
            })
        );
    }
}
