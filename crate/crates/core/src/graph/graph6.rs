//! Header-less graph6 encoding.
//!
//! Upper-triangle bits are taken column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed six to a byte, most significant bit first, and offset by 63.

use super::{Graph, GraphError};

const BIAS: u8 = 63;
const MAX_ORDER: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sixes(bytes: &[u8], start: usize, count: usize) -> Result<usize, GraphError> {
    let mut value = 0usize;
    for i in 0..count {
        let off = start + i;
        let b = *bytes
            .get(off)
            .ok_or_else(|| err(off, "truncated vertex count"))?;
        if !(BIAS..=126).contains(&b) {
            return Err(err(off, format!("byte {b} outside 63..=126")));
        }
        value = (value << 6) | (b - BIAS) as usize;
    }
    Ok(value)
}

/// Parses one graph6 line (trailing newline and surrounding whitespace are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim().as_bytes();
    if bytes.first() == Some(&b'>') {
        return Err(err(0, "graph6 header is not accepted"));
    }
    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(BIAS..=126).contains(&first) {
        return Err(err(0, format!("byte {first} outside 63..=126")));
    }
    let (n, mut pos) = if first < 126 {
        ((first - BIAS) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "eight-byte vertex counts are not supported"));
        }
        let n = sixes(bytes, 1, 3)?;
        if n <= 62 {
            return Err(err(0, "long length form used for n <= 62"));
        }
        (n, 4)
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let need = bit_count.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(err(
            bytes.len().min(pos + need),
            format!("expected {} data bytes for n = {n}, found {}", need, bytes.len() - pos),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6];
            if !(BIAS..=126).contains(&byte) {
                return Err(err(pos + k / 6, format!("byte {byte} outside 63..=126")));
            }
            if ((byte - BIAS) >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if bit_count % 6 != 0 {
        let last = pos + need - 1;
        let byte = bytes[last];
        if !(BIAS..=126).contains(&byte) {
            return Err(err(last, format!("byte {byte} outside 63..=126")));
        }
        let pad = 6 - bit_count % 6;
        if (byte - BIAS) & ((1u8 << pad) - 1) != 0 {
            return Err(err(last, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Encodes `g` as graph6 without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for graph6");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn empty_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g, complete(4));
        assert_eq!(to_graph6(&complete(4)), "C~");
    }

    #[test]
    fn k5_from_generator_output() {
        // `geng -d4D4 5` prints this line
        assert_eq!(parse_graph6("D~{").unwrap(), complete(5));
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("D?") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x7f") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // n = 4 has 6 bits, no padding; n = 5 has 10 bits, two padding bits
        match parse_graph6("D?@") {
            Err(GraphError::Graph6 { offset, reason }) => {
                assert_eq!(offset, 2);
                assert!(reason.contains("padding"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6(" ").is_err());
        assert!(parse_graph6("\u{1}").is_err());
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn seeded_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let n = rng.random_range(0..=62);
            let p: f64 = rng.random();
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.random::<f64>() < p {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let back = parse_graph6(&to_graph6(&g)).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }
    }

    proptest! {
        #[test]
        fn arbitrary_lines_never_panic(s in "[?-~]{0,12}") {
            let _ = parse_graph6(&s);
        }
    }
}
