//! graph6 encoding: size header, then the upper triangle of the adjacency
//! matrix in column-major order `(0,1),(0,2),(1,2),(0,3),...`, packed six bits
//! per byte, each byte offset by 63.

use super::{Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(n as u8 + OFFSET);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
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
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let err = |m: &str| GraphError::Graph6(m.to_string());
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(err(&format!("byte {b:#04x} outside the printable range 63..=126")));
        }
        let (n, body) = match bytes {
            [] => return Err(err("empty input")),
            [126, 126, ..] => return Err(err("8-byte size header: vertex count too large")),
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(err("truncated 4-byte size header"));
                }
                let n = rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
                if n <= 62 {
                    return Err(err("4-byte size header used for n <= 62"));
                }
                (n, &rest[3..])
            }
            [first, rest @ ..] => ((first - OFFSET) as usize, rest),
        };
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() != expected {
            return Err(err(&format!(
                "expected {expected} data bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
        if (nbits..expected * 6).any(bit) {
            return Err(err("nonzero padding bits"));
        }
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(complete(1).to_graph6(), "@");
        assert_eq!(Graph::empty(0).unwrap().to_graph6(), "?");
        // K2: one bit set, padded: 100000 -> 32 + 63
        assert_eq!(complete(2).to_graph6(), "A_");
        // The documented 5-vertex example: edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn round_trips() {
        for g in [cycle(4), petersen(), dodecahedron(), complete(63), complete(64)] {
            assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
        assert!(complete(63).to_graph6().starts_with('~'));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("A").is_err(), "missing data byte");
        assert!(Graph::from_graph6("A_?").is_err(), "extra data byte");
        assert!(Graph::from_graph6("A`").is_err(), "padding bit set");
        assert!(Graph::from_graph6("A\x20").is_err());
        assert!(matches!(
            Graph::from_graph6("~?@@"),
            Err(GraphError::TooManyVertices(65))
        ));
        assert!(Graph::from_graph6("~??@").is_err(), "long header for small n");
    }
}
