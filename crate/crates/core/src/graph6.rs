//! graph6 encoding (McKay's format) for graphs on up to 64 vertices.
//!
//! Layout: a size field followed by the upper triangle of the adjacency
//! matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset
//! by 63. The size field is one byte `n + 63` for `n <= 62`, otherwise the
//! byte 126 followed by three bytes carrying `n` as 18 bits. The final
//! payload byte is padded with zero bits.

use crate::error::Graph6Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    String::from_utf8(emit_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn emit_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let adj = g.adjacency();
    let mut acc = 0u8;
    let mut filled = 0;
    for (j, &row) in adj.iter().enumerate().skip(1) {
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}

/// Decodes one graph6 line. Surrounding ASCII whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|&(_, &b)| !(OFFSET..=126).contains(&b))
    {
        return Err(Graph6Error::OutOfRange { position, byte });
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::Header(
                "8-byte size fields describe more than 64 vertices".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Header("truncated 4-byte size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |n, &b| (n << 6) | (b - OFFSET) as usize);
        if n <= 62 {
            return Err(Graph6Error::Header(format!(
                "size {n} must use the one-byte form"
            )));
        }
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(Graph6Error::Header("zero vertices".into()));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(crate::error::GraphError::TooManyVertices(n).into());
    }

    let expected = payload_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    let nbits = n * (n - 1) / 2;
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        let last = body[expected - 1] - OFFSET;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = ((body[k / 6] - OFFSET) >> (5 - k % 6)) & 1;
            if bit == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}
