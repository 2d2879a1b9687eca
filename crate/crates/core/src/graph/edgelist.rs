//! Plain-text edge lists: a header line `n m`, then one edge per line as
//! space-separated vertex indices. One index is a loop, three or more a hyperedge.

use super::{Hypergraph, Multigraph};
use crate::error::{Error, Result};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("expected a nonnegative integer, found {t:?}")))
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let head = numbers(header, hl)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be exactly \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than the declared {m} edges")));
        }
        let e = numbers(line, lineno)?;
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(parse_err(lineno, format!("vertex {v} out of range for n = {n}")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

/// Parses an edge list that must not contain hyperedges.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let h = parse(text)?;
    h.to_multigraph()
        .ok_or_else(|| parse_err(1, "hyperedges are not allowed here"))
}

pub fn write(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.m());
    for e in h.edges() {
        let parts: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_multigraph(g: &Multigraph) -> String {
    write(&g.to_hypergraph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let g = parse_multigraph("2 1\n0 1\n").unwrap();
        assert_eq!(g, Multigraph::new(2, [(0, 1)]).unwrap());
        let h = parse("4 3\n0 1 2\n3\n2 3\n").unwrap();
        assert_eq!(h.max_arity(), 3);
        assert_eq!(parse(&write(&h)).unwrap(), h);
        let l = parse_multigraph("1 1\n0\n").unwrap();
        assert!(l.has_loops());
        assert_eq!(parse_multigraph("0 0").unwrap(), Multigraph::empty(0));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("2 1\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("2 1\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_multigraph("3 1\n0 1 2\n").is_err());
    }
}
