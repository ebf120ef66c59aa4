//! graph6 encoding for graphs on at most 64 vertices.
//!
//! Header is one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! 6-bit groups. The payload lists the upper triangle column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, MSB first.

use super::{Graph, MAX_VERTICES};
use crate::error::GraphError;

const BIAS: u8 = 63;

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(GraphError::Graph6InvalidByte(b));
    }
    let (n, payload) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(GraphError::Graph6TooLarge(1 << 18));
        }
        if bytes.len() < 4 {
            return Err(GraphError::Graph6Header(format!(
                "long-form header needs 4 bytes, found {}",
                bytes.len()
            )));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        if n <= 62 {
            return Err(GraphError::Graph6Header(format!(
                "long-form header used for n = {n}"
            )));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::Graph6TooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if payload.len() < expected {
        return Err(GraphError::Graph6Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(GraphError::Graph6Trailing(payload.len() - expected));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    let spare = expected * 6 - pairs;
    if spare > 0 && (payload[expected - 1] - BIAS) & ((1 << spare) - 1) != 0 {
        return Err(GraphError::Graph6Padding);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_strings() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::empty(3)), "B?");
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn known_string_from_reference_encoder() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn empty_and_single_vertex() {
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn long_form_header_round_trips() {
        for n in [63, 64] {
            let g = Graph::cycle(n);
            let s = write_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6(""), Err(GraphError::Graph6Empty));
        assert!(matches!(parse_graph6("~?"), Err(GraphError::Graph6Header(_))));
        assert!(matches!(parse_graph6("C"), Err(GraphError::Graph6Truncated { expected: 1, found: 0 })));
        assert!(matches!(parse_graph6("~?@@"), Err(GraphError::Graph6TooLarge(65))));
        assert!(matches!(parse_graph6("A a"), Err(GraphError::Graph6InvalidByte(b' '))));
        assert!(matches!(parse_graph6("A__"), Err(GraphError::Graph6Trailing(1))));
        assert!(matches!(parse_graph6("A`"), Err(GraphError::Graph6Padding)));
    }
}
