//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column (`(0,1),(0,2),(1,2),(0,3),…`), packed six bits
//! per byte with offset 63.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Largest order representable by graph6.
pub const GRAPH6_MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    InvalidByte { position: usize, byte: u8 },
    Truncated { expected: usize, found: usize },
    TrailingData { expected: usize, found: usize },
    UnsupportedSize(usize),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {position}")
            }
            Graph6Error::Truncated { expected, found } => {
                write!(
                    f,
                    "graph6 string truncated: expected {expected} data bytes, found {found}"
                )
            }
            Graph6Error::TrailingData { expected, found } => {
                write!(
                    f,
                    "graph6 string too long: expected {expected} data bytes, found {found}"
                )
            }
            Graph6Error::UnsupportedSize(n) => {
                write!(f, "graph order {n} not representable in graph6")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Raw graph6 bytes of `g`.
pub fn graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    assert!(n as u64 <= GRAPH6_MAX_ORDER, "graph too large for graph6");
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_order(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    out
}

pub fn graph6_encode(g: &Graph) -> String {
    // all bytes are in 63..=126, hence ASCII
    graph6_bytes(g).into_iter().map(char::from).collect()
}

fn value(text: &[u8], position: usize) -> Result<usize, Graph6Error> {
    match text.get(position) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(&b) => Err(Graph6Error::InvalidByte { position, byte: b }),
        None => Err(Graph6Error::Truncated {
            expected: position + 1,
            found: position,
        }),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text).as_bytes();
    if text.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, start) = if text[0] != 126 {
        (value(text, 0)?, 1)
    } else if text.get(1) != Some(&126) {
        let mut n = 0;
        for p in 1..4 {
            n = (n << 6) | value(text, p)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for p in 2..8 {
            n = (n << 6) | value(text, p)?;
        }
        (n, 8)
    };
    // Each order has a unique shortest header; reject over-long ones.
    if (start == 4 && n <= 62) || (start == 8 && n <= 258_047) {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let found = text.len() - start;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingData { expected, found });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = value(text, start + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if bit % 6 != 0 {
        let last = value(text, start + bit / 6)?;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(Graph6Error::InvalidByte {
                position: start + bit / 6,
                byte: text[start + bit / 6],
            });
        }
    }
    Ok(g)
}
