//! graph6 text codec for simple undirected graphs.
//!
//! Strict decoding: every byte must be printable-range data, the payload
//! length must match the vertex count exactly, and padding bits must be
//! zero. Errors carry the byte offset into the given string.

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

/// Decodes a graph6 string (optionally prefixed with the standard header,
/// surrounding ASCII whitespace ignored). Rejects graphs with more than
/// max_n vertices before reading any edge data.
pub fn decode(input: &str, max_n: usize) -> Result<Graph, GraphError> {
    let bytes = input.as_bytes();
    let mut start = 0;
    let mut end = bytes.len();
    while start < end && bytes[start].is_ascii_whitespace() {
        start += 1;
    }
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    if bytes[start..end].starts_with(HEADER.as_bytes()) {
        start += HEADER.len();
    }
    let err = |offset: usize, message: &str| GraphError::Graph6 {
        offset,
        message: message.to_string(),
    };
    let data = &bytes[start..end];
    if data.is_empty() {
        return Err(err(start, "empty graph6 string"));
    }
    let value = |i: usize| -> Result<u64, GraphError> {
        match data.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(_) => Err(err(start + i, "byte outside the graph6 range 63..=126")),
            None => Err(err(start + i, "unexpected end of graph6 string")),
        }
    };

    // Vertex count: one byte for n <= 62, '~' + 3 bytes for n <= 258047.
    let (n, mut pos) = if data[0] == b'~' {
        if data.get(1) == Some(&b'~') {
            return Err(err(start, "8-byte vertex counts are not supported"));
        }
        let n = (value(1)? << 12) | (value(2)? << 6) | value(3)?;
        (n, 4)
    } else {
        (value(0)?, 1)
    };
    let n = usize::try_from(n).unwrap();
    if n > max_n {
        return Err(GraphError::TooLarge { n, max: max_n });
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if data.len() - pos > byte_count {
        return Err(err(
            start + pos + byte_count,
            "trailing bytes after the edge data",
        ));
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    // Bits run through the upper triangle column by column: (0,1), (0,2),
    // (1,2), (0,3), ... with the most significant of each 6-bit group first.
    let mut col = 1usize;
    let mut row = 0usize;
    for _ in 0..byte_count {
        let group = value(pos)?;
        for k in (0..6).rev() {
            let set = (group >> k) & 1 == 1;
            if bit < bit_count {
                if set {
                    g.add_edge(row, col).expect("triangle positions are valid");
                }
                row += 1;
                if row == col {
                    col += 1;
                    row = 0;
                }
            } else if set {
                return Err(err(start + pos, "nonzero padding bits"));
            }
            bit += 1;
        }
        pos += 1;
    }
    Ok(g)
}

/// Encodes a graph as a graph6 string (no header).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 258047, "graph too large for 4-byte graph6 counts");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
