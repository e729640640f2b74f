//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Each adjacency row is a single machine word, so
//! neighbourhood algebra (`N(S)`, `N[S]`, domination, components) is a few
//! bit operations.

mod edge_list;
pub mod families;
mod graph6;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use vertex_set::{Iter as VertexSetIter, VertexSet};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list (line {line}): {message}")]
    EdgeList { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.debug_check();
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::EdgeList {
                        line: 0,
                        message: format!("asymmetric adjacency between {v} and {u}"),
                    });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn debug_check(&self) {
        debug_assert!(self.check_invariants().is_ok());
    }

    /// Symmetry, irreflexivity, and range of every adjacency row.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        Graph::from_rows(self.adj.clone()).map(|_| ())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    /// `N(v)`. Panics when `v` is out of range; see [`Graph::try_neighbors`].
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn try_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v).map(|_| self.neighbors(v))
    }

    pub fn try_closed_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v).map(|_| self.closed_neighbors(v))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `N[S] = S ∪ ⋃ N(v)`.
    pub fn closed_set_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(s, |acc, v| acc | VertexSet::from_bits(self.adj[v]))
    }

    /// `N(S) = N[S] \ S`.
    pub fn set_neighbors(&self, s: VertexSet) -> VertexSet {
        self.closed_set_neighbors(s) - s
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// The vertices of `S` reachable from `v` inside `G[S]`.
    pub fn component_of(&self, v: usize, s: VertexSet) -> VertexSet {
        if !s.contains(v) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.set_neighbors(frontier) & s;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of `G[S]`, ordered by least vertex.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0, self.vertices()) == self.vertices()
    }

    pub fn is_dominating(&self, d: VertexSet) -> bool {
        self.closed_set_neighbors(d) & self.vertices() == self.vertices()
    }

    /// BFS distance from `u` to the nearest vertex of `S`; `None` when `S` is
    /// unreachable (including `S = ∅`).
    pub fn distance(&self, u: usize, s: VertexSet) -> Option<usize> {
        if s.contains(u) {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            frontier = self.set_neighbors(frontier) - seen;
            if frontier.intersects(s) {
                return Some(d);
            }
            seen |= frontier;
        }
        None
    }

    /// BFS distances from `u` to every vertex.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `G[S]` relabelled to `0..|S|` in increasing order of original index.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts = (s & self.vertices()).to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                (self.neighbors(v) & s)
                    .iter()
                    .fold(0u64, |row, w| row | 1 << pos[w])
            })
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// `G - S`.
    pub fn remove(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices() - s)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| (full - self.neighbors(v)).without(v).bits())
            .collect();
        Graph { n: self.n, adj }
    }

    /// Whether `S` is a clique.
    pub fn is_complete(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    /// The partite sets when `G` is complete multipartite: the components of
    /// the complement, each of which must be a clique of the complement.
    pub fn is_complete_multipartite(&self) -> Option<Vec<VertexSet>> {
        let co = self.complement();
        let parts = co.components(co.vertices());
        if parts.iter().all(|&p| co.is_complete(p)) {
            Some(parts)
        } else {
            None
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in self.neighbors(v) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn neighbourhoods() {
        assert_eq!(complete(3).closed_neighbors(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(path(5).neighbors(2).to_vec(), vec![1, 3]);
        assert_eq!(paw().neighbors(0).to_vec(), vec![1]);
        assert!(matches!(
            path(3).try_neighbors(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_k2.components(two_k2.vertices()),
            vec![VertexSet::from_bits(0b0011), VertexSet::from_bits(0b1100)]
        );
        let c5 = cycle(5);
        let rest = c5.vertices() - c5.closed_neighbors(0);
        assert_eq!(c5.components(rest), vec![VertexSet::from_bits(0b01100)]);
        let p = paw();
        assert!(p.components(p.vertices() - p.closed_neighbors(1)).is_empty());
    }

    #[test]
    fn domination() {
        assert!(paw().is_dominating(VertexSet::singleton(1)));
        assert!(!cycle(5).is_dominating(VertexSet::singleton(0)));
    }

    #[test]
    fn distances() {
        let p5 = path(5);
        assert_eq!(p5.distance(0, VertexSet::singleton(4)), Some(4));
        assert_eq!(p5.distance(0, VertexSet::EMPTY), None);
        // co-banner with a1 = 4: edges a1v1, v1v2, v2v3, v3v4, v4v2
        let cobanner = Graph::from_edges(5, &[(4, 0), (0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let rim: VertexSet = [2, 3].iter().collect();
        assert_eq!(cobanner.distance(4, rim), Some(3));
        let two_k1 = Graph::empty(2).unwrap();
        assert_eq!(two_k1.distance(0, VertexSet::singleton(1)), None);
    }

    #[test]
    fn multipartite() {
        assert_eq!(
            cycle(4).is_complete_multipartite(),
            Some(vec![VertexSet::from_bits(0b0101), VertexSet::from_bits(0b1010)])
        );
        assert_eq!(path(4).is_complete_multipartite(), None);
        // K1 ∪ K2 is not complete multipartite, and its complement is P3.
        let k1k2 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(k1k2.is_complete_multipartite(), None);
        assert_eq!(k1k2.complement(), Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
    }

    #[test]
    fn induced_preserves_sorted_order() {
        let c5 = cycle(5);
        let s: VertexSet = [0, 1, 3].iter().collect();
        let h = c5.induced(s);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(c5.remove(VertexSet::singleton(0)), path(4));
    }
}
