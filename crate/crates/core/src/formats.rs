//! Text encodings: the plain edge-list format and graph6.
//!
//! Edge list: first line `n`, then `n - 1` lines `u v` (0-based, LF endings).
//!
//! graph6: one size header (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte,
//! most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::tree::Tree;

pub fn to_edge_list(t: &Tree) -> String {
    let mut out = format!("{}\n", t.order());
    for &(u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize> {
            parts
                .next()
                .ok_or_else(|| Error::Parse(format!("edge line {} has fewer than 2 fields", i + 2)))?
                .parse()
                .map_err(|e| Error::Parse(format!("edge line {}: {e}", i + 2)))
        };
        let u = next()?;
        let v = next()?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("edge line {} has extra fields", i + 2)));
        }
        edges.push((u, v));
    }
    Tree::from_edges(n, &edges)
}

const MAX_GRAPH6_ORDER: usize = 258_047;

pub fn to_graph6(t: &Tree) -> String {
    let n = t.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= MAX_GRAPH6_ORDER, "graph6 short form supports n <= 258047");
        bytes.push(126);
        bytes.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | t.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(s: &str) -> Result<Tree> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let data = s.as_bytes();
    if data.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 bytes must lie in 63..=126".into()));
    }
    let (n, body) = match data {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => return Err(Error::Parse("graph6 orders above 258047 are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 size header".into())),
        [h, rest @ ..] => (*h as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed} for n={n}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Tree::from_edges(n, &edges)
}
