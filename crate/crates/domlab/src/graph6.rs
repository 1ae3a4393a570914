//! Bit-exact graph6 encoding and decoding for graphs of order `1..=62`
//! (single-byte header only; longer headers are rejected).
//!
//! The upper-triangle adjacency bits are read column-major
//! (x01, x02, x12, x03, x13, x23, ...), packed into 6-bit groups most
//! significant bit first, each group stored as `value + 63`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    BadCharacter { byte: u8, pos: usize },
    #[error("graph6 order {0} exceeds the supported range 1..=62")]
    UnsupportedOrder(usize),
    #[error("multi-byte graph6 order header (n > 62) is not supported")]
    LongHeader,
    #[error("graph6 line encodes an empty graph (n = 0)")]
    ZeroOrder,
    #[error("truncated graph6 bit stream: expected {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} data characters, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("nonzero padding bits in final graph6 character")]
    NonzeroPadding,
}

/// Decodes one graph6 line into a graph.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { byte: b, pos });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongHeader);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            expected,
            found: data.len(),
        });
    }

    let mut edges = Vec::new();
    let mut idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let group = (data[idx / 6] - 63) as u32;
            if group >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
            if idx == bits {
                break 'outer;
            }
        }
    }
    // The last group must be zero-padded.
    if !bits.is_multiple_of(6) {
        let group = (data[expected - 1] - 63) as u32;
        let pad = 6 - bits % 6;
        if group & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    // Edge endpoints are in range by construction; only `Empty` is possible
    // and n >= 1 was checked above.
    Ok(Graph::from_edge_list(n, edges).expect("decoded edges are in range"))
}

/// Encodes a graph as a graph6 line, preserving the vertex order (no
/// canonicalization).
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 62 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
