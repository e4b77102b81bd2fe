//! graph6 interchange format.
//!
//! Encoding: an optional `>>graph6<<` header, then N(n), then the upper
//! triangle of the adjacency matrix in column order
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
//! each group stored as one printable byte `value + 63`. Padding bits are
//! zero. N(n) is a single byte `n + 63` for n <= 62 and `~` followed by
//! three bytes (18 bits, big-endian) for larger n.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Encode a graph as a graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 63 <= n <= 258047: '~' then 18 bits.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut bits = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = group << 1 | u8::from(g.has_edge(row, col));
            bits += 1;
            if bits == 6 {
                out.push(group + 63);
                group = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((group << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 line. Leading `>>graph6<<` headers and surrounding
/// whitespace are accepted; anything else malformed is rejected.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!(
                "graph6 byte {b:#04x} outside the printable range 63..=126"
            )));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte size form for n > 258047; far beyond the 64-vertex cap.
            return Err(Error::TooLarge {
                n: usize::MAX,
                max: MAX_VERTICES,
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {nbytes} for n={n}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut group = 0u8;
    let mut bits = 0u8;
    for col in 1..n {
        for row in 0..col {
            if bits == 0 {
                group = bytes[pos] - 63;
                pos += 1;
                bits = 6;
            }
            if group & 0x20 != 0 {
                g.add_edge(row, col);
            }
            group <<= 1;
            bits -= 1;
        }
    }
    // Remaining bits of the last group are padding and must be zero. After
    // consuming 6 - bits bits the untested ones sit at positions 5..(6-bits).
    if bits > 0 {
        let mask = ((1u8 << bits) - 1) << (6 - bits);
        if group & mask != 0 {
            return Err(Error::Parse("nonzero padding bits in graph6 body".into()));
        }
    }
    Ok(g)
}
