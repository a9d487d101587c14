//! graph6 encoding: printable bytes offset by 63, a size header, then the
//! upper triangle of the adjacency matrix in column order packed six bits
//! per byte and zero padded.

use thiserror::Error;

use crate::graphcore::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes at offset {offset}, expected {expected}")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph with {0} vertices exceeds the supported limit")]
    TooLarge(usize),
}

pub fn emit(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::OutOfRange { offset, byte });
    }
    Ok(byte - 63)
}

/// Decode one graph6 string. A single trailing newline is tolerated, as is
/// the optional `>>graph6<<` header.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |e: Graph6Error| match e {
        Graph6Error::OutOfRange { offset, byte } => Graph6Error::OutOfRange {
            offset: offset + base,
            byte,
        },
        other => other,
    };
    let first = sixbits(bytes, 0).map_err(at)?;
    let (n, header) = if first < 63 {
        (first as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                offset: base + 1,
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        if bytes[1] == 126 {
            // 8-byte header: far beyond anything we can hold
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        let mut n = 0usize;
        for k in 1..4 {
            n = n << 6 | sixbits(bytes, k).map_err(at)? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < expected {
        return Err(Graph6Error::BadLength {
            offset: base + header,
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: base + header + expected,
        });
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let offset = header + k / 6;
            let chunk = sixbits(bytes, offset).map_err(at)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let offset = header + expected - 1;
        let chunk = sixbits(bytes, offset).map_err(at)?;
        if chunk & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: base + offset });
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // matches the reference encoder in petgraph's test-suite
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(emit(&g), "DQc");
        assert_eq!(emit(&Graph::complete(5)), "D~{");
        assert_eq!(emit(&Graph::new(0)), "?");
        assert_eq!(emit(&Graph::new(1)), "@");
    }

    #[test]
    fn d_tilde_family_round_trips() {
        for s in ["D~{", "D??", "DQc", "D~w", "D]w"] {
            assert_eq!(emit(&parse(s).unwrap()), s, "{s}");
        }
    }

    #[test]
    fn long_header() {
        let g = Graph::from_edges(63, &[(0, 62), (10, 11)]);
        let s = emit(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse("D~ "),
            Err(Graph6Error::OutOfRange { offset: 2, byte: b' ' })
        );
        assert_eq!(
            parse("D~"),
            Err(Graph6Error::BadLength { offset: 1, expected: 2, found: 1 })
        );
        assert_eq!(parse("D~{?"), Err(Graph6Error::TrailingGarbage { offset: 3 }));
        // n=3 uses 3 of 6 bits; the low bits must be zero
        assert_eq!(parse("B@"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(parse(">>graph6<<D~{\n").unwrap(), Graph::complete(5));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |flags| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if flags[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_emit(g in arb_graph()) {
            let s = emit(&g);
            prop_assert_eq!(parse(&s).unwrap(), g);
            prop_assert_eq!(emit(&parse(&s).unwrap()), s);
        }
    }
}
