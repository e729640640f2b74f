//! Plain-text edge lists for hand-written fixtures:
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use super::{Graph, GraphError};

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, message: String| GraphError::EdgeList { line, message };
        let (hline, header) = lines.next().ok_or_else(|| bad(0, "missing header".into()))?;
        let (n, m) = parse_pair(header).ok_or_else(|| bad(hline, format!("bad header {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let e = parse_pair(l).ok_or_else(|| bad(line, format!("bad edge {l:?}")))?;
            edges.push((line, e));
        }
        if edges.len() != m {
            return Err(bad(hline, format!("header declares {m} edges, found {}", edges.len())));
        }
        let mut g = Graph::empty(n)?;
        for (line, (u, v)) in edges {
            g.add_edge(u, v).map_err(|e| bad(line, e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}
