//! The graph6 text encoding: 6-bit chunks offset by 63, upper-triangle
//! adjacency bits in column order.

use crate::error::Error;
use crate::graph::{LabeledGraph, MAX_VERTICES};

/// Decodes one graph6 line into a graph labeled 1..n in decode order.
pub fn parse_graph6(line: &str) -> Result<LabeledGraph, Error> {
    let bytes = line.trim_end().as_bytes();
    let err = |offset: usize, message: &str| Error::Graph6 {
        offset,
        message: message.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty line"));
    }
    // Header: n < 63 in one byte, or '~' then three bytes for n < 2^18.
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(err(0, "truncated extended size header"));
        }
        if bytes[1] == b'~' {
            return Err(err(1, "graphs beyond 2^18 vertices are not supported"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(i + 1, "size byte out of printable range"));
            }
            n = n << 6 | (b - 63) as usize;
        }
        (n, &bytes[4..])
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(err(0, "size byte out of printable range"));
        }
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(err(0, "graph too large for this implementation"));
    }
    let nbits = n * (n.max(1) - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(err(
            bytes.len().min(bytes.len() - body.len()),
            "adjacency section has wrong length",
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(bytes.len() - body.len() + i, "byte out of printable range"));
        }
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bit(k) {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Ok(LabeledGraph::from_edges(n, &edges).expect("labels in range by construction"))
}

/// Encodes a graph in canonical short-form graph6 (n ≤ 62).
pub fn encode_graph6(g: &LabeledGraph) -> Result<String, Error> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::Graph6 {
            offset: 0,
            message: "short-form encoding limited to 62 vertices".into(),
        });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i + 1, j + 1) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable by construction"))
}
