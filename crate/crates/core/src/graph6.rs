//! graph6 encoding and decoding.
//!
//! Layout: the vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian into 6-bit groups, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Optional header line that some tools prepend to graph6 files.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes `g` as graph6 bytes (no trailing newline).
pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    encode_n(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

pub fn to_graph6_string(g: &Graph) -> String {
    // graph6 bytes are printable ASCII by construction.
    String::from_utf8(to_graph6(g)).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32> {
    match bytes.get(offset) {
        None => Err(Error::parse(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as u32),
        Some(&b) => Err(Error::parse(offset, format!("byte 0x{b:02x} outside the graph6 range 63..=126"))),
    }
}

/// Decodes a single graph6 record. A leading `>>graph6<<` header and
/// surrounding ASCII whitespace are ignored.
pub fn from_graph6(input: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if input.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = input.len();
    while end > start && input[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    while start < end && input[start].is_ascii_whitespace() {
        start += 1;
    }
    let bytes = &input[..end];
    let mut pos = start;

    match bytes.get(pos) {
        None => return Err(Error::parse(pos, "empty input")),
        Some(b':') => return Err(Error::parse(pos, "sparse6 input is not supported")),
        Some(b'&') => return Err(Error::parse(pos, "digraph6 input is not supported")),
        _ => {}
    }

    let n = if bytes[pos] != 126 {
        pos += 1;
        sextet(bytes, pos - 1)? as usize
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut n = 0usize;
        for k in 1..=3 {
            n = (n << 6) | sextet(bytes, pos + k)? as usize;
        }
        pos += 4;
        n
    } else {
        let mut n = 0usize;
        for k in 2..=7 {
            n = (n << 6) | sextet(bytes, pos + k)? as usize;
        }
        pos += 8;
        n
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(start, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != nbytes {
        return Err(Error::parse(
            pos + body.len().min(nbytes),
            format!("expected {nbytes} data bytes for n={n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let off = pos + bit / 6;
            let val = sextet(bytes, off)?;
            if val >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let off = pos + nbytes - 1;
        let val = sextet(bytes, off)?;
        let pad = 6 - nbits % 6;
        if val & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(off, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn from_graph6_str(s: &str) -> Result<Graph> {
    from_graph6(s.as_bytes())
}

/// Parses one graph per non-empty line, skipping header-only lines.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut base = 0usize;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && trimmed != HEADER {
            out.push(from_graph6(line.as_bytes()).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: base + offset,
                    message,
                },
                other => other,
            })?);
        }
        base += line.len();
    }
    Ok(out)
}
