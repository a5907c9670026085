//! graph6 encoding and decoding.
//!
//! The standard printable 6-bit format: a size field, then the upper
//! triangle of the adjacency matrix in column-major order
//! (`x_{1,2}, x_{1,3}, x_{2,3}, x_{1,4}, ...` in 1-based terms), packed
//! big-endian into 6-bit groups, each offset by 63. Sizes up to 258047 use
//! the one- or four-byte size field; the eight-byte huge form is not
//! supported. Decoding is strict: bad size bytes, truncated or oversized
//! payloads, and nonzero padding bits are all rejected with the byte offset.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126;
const MAX_LONG: usize = 258047;

/// Encodes a graph; inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        assert!(
            n <= MAX_LONG,
            "graph too large for the supported graph6 forms"
        );
        out.push(LONG_MARKER);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 2..=n {
        for i in 1..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("all bytes are printable ASCII")
}

/// Decodes a graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse_at_byte(0, "empty graph6 string"));
    }
    let (n, payload_start) = parse_size(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let payload = &bytes[payload_start..];
    if payload.len() < needed {
        return Err(Error::parse_at_byte(
            bytes.len(),
            format!(
                "truncated payload: need {needed} data bytes for n={n}, found {}",
                payload.len()
            ),
        ));
    }
    if payload.len() > needed {
        return Err(Error::parse_at_byte(
            payload_start + needed,
            "trailing bytes after payload",
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 2..=n {
        for i in 1..j {
            let byte = payload[bit / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(Error::parse_at_byte(
                    payload_start + bit / 6,
                    format!("byte {byte} outside the graph6 alphabet"),
                ));
            }
            let value = byte - OFFSET;
            if (value >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == bit_count {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero; anything else is a malformed encoding.
    if bit_count % 6 != 0 && needed > 0 {
        let last = payload[needed - 1];
        if !(OFFSET..=126).contains(&last) {
            return Err(Error::parse_at_byte(
                payload_start + needed - 1,
                format!("byte {last} outside the graph6 alphabet"),
            ));
        }
        let pad_bits = 6 - bit_count % 6;
        if (last - OFFSET) & ((1 << pad_bits) - 1) != 0 {
            return Err(Error::parse_at_byte(
                payload_start + needed - 1,
                "nonzero padding bits",
            ));
        }
    }
    Graph::new(n, edges)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let b0 = bytes[0];
    if b0 == LONG_MARKER {
        if bytes.len() < 4 {
            return Err(Error::parse_at_byte(
                bytes.len(),
                "truncated long size field",
            ));
        }
        if bytes[1] == LONG_MARKER {
            return Err(Error::parse_at_byte(
                1,
                "huge (8-byte) size form not supported",
            ));
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::parse_at_byte(
                    1 + k,
                    format!("byte {b} outside the graph6 alphabet"),
                ));
            }
            n = (n << 6) | usize::from(b - OFFSET);
        }
        if n <= 62 {
            return Err(Error::parse_at_byte(
                1,
                "non-canonical long size for n <= 62",
            ));
        }
        Ok((n, 4))
    } else if (OFFSET..LONG_MARKER).contains(&b0) {
        Ok((usize::from(b0 - OFFSET), 1))
    } else {
        Err(Error::parse_at_byte(0, format!("invalid size byte {b0}")))
    }
}
