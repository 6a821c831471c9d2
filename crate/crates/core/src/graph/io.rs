//! Text formats: graph6, a plain edge list, and DOT export.

use std::fmt::Write as _;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

fn check_order(n: usize, err: impl Fn(String) -> Error) -> Result<()> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(err(format!("vertex count {n} outside 2..=64")));
    }
    Ok(())
}

/// Decode one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut s = text;
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    if let Some(rest) = s.strip_prefix(GRAPH6_HEADER) {
        s = rest;
    }
    let bad = |msg: String| Error::Graph6(msg);
    if let Some(&c) = s.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(format!("byte {c:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = match s {
        [] => return Err(bad("empty input".into())),
        [126, 126, ..] => return Err(bad("order exceeds 64".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated length prefix".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            if n < 63 {
                return Err(bad(format!("non-canonical long length prefix for n={n}")));
            }
            (n, &rest[3..])
        }
        [c, rest @ ..] => ((c - 63) as usize, rest),
    };
    check_order(n, bad)?;
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(bad(format!("expected {nbytes} data bytes for n={n}, found {}", body.len())));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..nbytes * 6).any(bit_at) {
        return Err(bad("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.set_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encode without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse `"n m"` followed by `m` lines `"u v"`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::EdgeList("no graph found".into())),
        k => Err(Error::EdgeList(format!("expected one graph, found {k}"))),
    }
}

/// Parse a concatenation of edge-list blocks.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let bad = |line: usize, msg: String| Error::EdgeList(format!("line {line}: {msg}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |lineno: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut num = || -> Result<usize> {
            it.next()
                .ok_or_else(|| bad(lineno, "expected two integers".into()))?
                .parse()
                .map_err(|e| bad(lineno, format!("{e}")))
        };
        let (a, b) = (num()?, num()?);
        if it.next().is_some() {
            return Err(bad(lineno, "trailing tokens".into()));
        }
        Ok((a, b))
    };

    let mut graphs = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let (n, m) = pair(lineno, header)?;
        check_order(n, |msg| bad(lineno, msg))?;
        let mut g = Graph::empty(n)?;
        for _ in 0..m {
            let (lineno, l) = lines.next().ok_or_else(|| bad(lineno, format!("expected {m} edge lines")))?;
            let (u, v) = pair(lineno, l)?;
            g.insert_checked(u, v).map_err(|e| bad(lineno, e.to_string()))?;
        }
        graphs.push(g);
    }
    Ok(graphs)
}

/// Canonical edge list: header, then edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for e in edges {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// DOT text: isolated vertices as bare nodes, then one line per edge.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}
