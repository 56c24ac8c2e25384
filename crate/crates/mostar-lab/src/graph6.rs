//! graph6 encoding and decoding.
//!
//! graph6 is the compact ASCII format for simple undirected graphs used
//! by the common enumeration tool chains: a header byte (or four) gives
//! the order n, then the upper triangle of the adjacency matrix is read
//! in column order (0,1), (0,2), (1,2), (0,3), ... and packed six bits
//! per byte, most significant bit first, zero-padded, with 63 added to
//! every byte to keep it printable.
//!
//! Decoding is strict: wrong length, bytes outside `63..=126`, and
//! nonzero padding bits are all rejected, so a successfully decoded
//! string is always byte-identical to the re-encoding of its graph
//! (short-form headers; the long form is accepted on input).

use crate::error::GraphError;
use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

/// Why a graph6 string failed to decode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,

    #[error("byte {byte:#04x} at position {pos} is outside the graph6 alphabet")]
    BadByte { pos: usize, byte: u8 },

    #[error("expected {expected} bytes for order {order}, found {found}")]
    BadLength {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("padding bits after the adjacency data are not zero")]
    PaddingNotZero,

    #[error("order {0} is outside the supported range 1..=64")]
    OrderUnsupported(usize),
}

impl From<Graph6Error> for GraphError {
    fn from(e: Graph6Error) -> GraphError {
        GraphError::InvalidEdge(format!("graph6: {e}"))
    }
}

/// Encodes a graph as a graph6 string, using the single-byte header for
/// orders up to 62 and the `~`-prefixed long form above that.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc: u32 = 0;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u32::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push(63 + acc as u8);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        acc <<= 6 - bits;
        out.push(63 + acc as u8);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string produced by this crate or any conforming
/// encoder. The input must be exactly one encoded graph with no
/// surrounding whitespace.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let b = s.as_bytes();
    if b.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in b.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { pos, byte });
        }
    }

    let (n, header_len) = if b[0] == b'~' {
        if b.len() >= 2 && b[1] == b'~' {
            // The 8-byte header starts at order 258048; nothing that
            // large fits in this crate.
            return Err(Graph6Error::OrderUnsupported(usize::MAX));
        }
        if b.len() < 4 {
            return Err(Graph6Error::BadLength {
                order: 0,
                expected: 4,
                found: b.len(),
            });
        }
        let n = ((b[1] - 63) as usize) << 12 | ((b[2] - 63) as usize) << 6 | (b[3] - 63) as usize;
        (n, 4)
    } else {
        ((b[0] - 63) as usize, 1)
    };

    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::OrderUnsupported(n));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = header_len + nbytes;
    if b.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            found: b.len(),
        });
    }

    let mut rows = vec![0u64; n];
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = b[header_len + idx / 6] - 63;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    // Every bit past the triangle must be zero.
    if nbits % 6 != 0 {
        let last = b[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::PaddingNotZero);
        }
    }

    Ok(Graph::from_rows(n, &rows))
}
