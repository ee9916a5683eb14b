//! The graph6 text encoding (single-byte order header only, so `n <= 62`).
//!
//! Layout: one byte `63 + n`, then the upper triangle of the adjacency matrix
//! read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits
//! per byte big-end first, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with a single header byte.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("invalid header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(Error::OrderTooLarge { order: 63, max: GRAPH6_MAX_ORDER });
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(Error::Graph6(format!(
            "truncated bit vector: expected {nbytes} data bytes, got {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(Error::Graph6(format!(
            "trailing data: expected {nbytes} data bytes, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("invalid data byte {byte:#04x}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v)?;
            }
            k += 1;
        }
    }
    for &byte in body {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6(format!("invalid data byte {byte:#04x}")));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: GRAPH6_MAX_ORDER });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Reads every graph from graph6 lines, skipping blanks and `#` comments.
/// Anything after the first whitespace on a line is ignored.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph6(l.split_whitespace().next().unwrap_or(l)))
        .collect()
}
