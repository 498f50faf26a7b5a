//! graph6 text encoding, short form only (`n <= 62`).
//!
//! A line is the byte `n + 63` followed by the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per
//! byte (most significant first), zero-padded, each byte offset by 63.

use super::{bit, Graph};
use crate::error::Graph6Error;

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(BIAS..=126).contains(&head) {
        return Err(Graph6Error::OutOfRange { offset: 0, byte: head });
    }
    let n = (head - BIAS) as usize;
    if n > MAX_SHORT {
        return Err(Graph6Error::Header { offset: 0, byte: head });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(BIAS..=126).contains(&b)) {
        return Err(Graph6Error::OutOfRange { offset: i + 1, byte: b });
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: 1 + body.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing { offset: 1 + expected });
    }

    let mut masks = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                masks[i] |= bit(j);
                masks[j] |= bit(i);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: expected });
        }
    }
    Ok(Graph::from_masks(masks))
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adj(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
