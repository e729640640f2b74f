//! Retractions onto induced subgraphs and the reduction rules that find
//! them.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RetractionError {
    #[error("map has length {got}, graph has {n} vertices")]
    Length { got: usize, n: usize },
    #[error("image vertex {0} is not fixed")]
    NotIdentity(usize),
    #[error("vertex {v} maps to {image}, outside the image")]
    OutsideImage { v: usize, image: usize },
    #[error("edge {x}-{y} maps to non-adjacent {fx}, {fy}")]
    NotHomomorphism { x: usize, y: usize, fx: usize, fy: usize },
    #[error("image is empty")]
    EmptyImage,
}

/// A map `φ: V → H` fixing every vertex of `H` and sending edges to edges
/// or single vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Retraction {
    #[serde(skip)]
    host: Graph,
    image: VertexSet,
    map: Vec<usize>,
}

impl Retraction {
    pub fn new(host: &Graph, image: VertexSet, map: Vec<usize>) -> Result<Retraction, RetractionError> {
        let n = host.n();
        if map.len() != n {
            return Err(RetractionError::Length { got: map.len(), n });
        }
        if image.is_empty() {
            return Err(RetractionError::EmptyImage);
        }
        for v in host.vertices() {
            if !image.contains(map[v]) {
                return Err(RetractionError::OutsideImage { v, image: map[v] });
            }
            if image.contains(v) && map[v] != v {
                return Err(RetractionError::NotIdentity(v));
            }
        }
        for (x, y) in host.edges() {
            let (fx, fy) = (map[x], map[y]);
            if fx != fy && !host.has_edge(fx, fy) {
                return Err(RetractionError::NotHomomorphism { x, y, fx, fy });
            }
        }
        Ok(Retraction {
            host: host.clone(),
            image,
            map,
        })
    }

    pub fn identity(host: &Graph) -> Retraction {
        Retraction {
            host: host.clone(),
            image: host.vertices(),
            map: (0..host.n()).collect(),
        }
    }

    /// Send every vertex of `s` to `target`.
    pub fn collapse(host: &Graph, s: VertexSet, target: usize) -> Result<Retraction, RetractionError> {
        let map = (0..host.n()).map(|v| if s.contains(v) { target } else { v }).collect();
        Retraction::new(host, host.vertices() - s, map)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn image(&self) -> VertexSet {
        self.image
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Components of `G - H`.
    pub fn residual(&self) -> Vec<VertexSet> {
        self.host.components(self.host.vertices() - self.image)
    }

    /// Whether every component of `G - H` is a clique, which the shadow
    /// strategy needs for its final sweep.
    pub fn residual_complete(&self) -> bool {
        self.residual().into_iter().all(|c| self.host.is_complete(c))
    }

    /// `G[H]`, relabelled in increasing vertex order.
    pub fn image_graph(&self) -> Graph {
        self.host.induced(self.image)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionMode {
    Diamond,
    TwoK1K2,
}

/// The first applicable reduction rule, or `None` when `g` is irreducible
/// for `mode`. Every returned retraction has been validated and removes at
/// least one vertex.
pub fn find_reduction(g: &Graph, mode: ReductionMode) -> Option<Retraction> {
    match mode {
        ReductionMode::Diamond => diamond_reduction(g),
        ReductionMode::TwoK1K2 => two_k1_k2_reduction(g),
    }
}

fn diamond_reduction(g: &Graph) -> Option<Retraction> {
    if g.n() < 2 {
        return None;
    }
    let all = g.vertices();
    // a vertex whose neighbourhood is connected (hence a clique)
    for u in all {
        let nu = g.neighbors(u);
        if !nu.is_empty() && g.component_of(nu.first().unwrap(), nu) == nu {
            if let Ok(r) = Retraction::collapse(g, VertexSet::singleton(u), nu.first().unwrap()) {
                return Some(r);
            }
        }
    }
    // a vertex dominated by another
    for u in all {
        for v in all.without(u) {
            if g.neighbors(v).is_subset(g.closed_neighbors(u)) {
                if let Ok(r) = Retraction::collapse(g, VertexSet::singleton(v), u) {
                    return Some(r);
                }
            }
        }
    }
    // a clique hanging off N(v) \ N[u] whose attachments all lie in N[u]
    for u in all {
        for v in g.neighbors(u) {
            let rest = g.neighbors(v) - g.closed_neighbors(u);
            for c in g.components(rest) {
                if g.is_complete(c) && g.set_neighbors(c).is_subset(g.closed_neighbors(u)) {
                    if let Ok(r) = Retraction::collapse(g, c, u) {
                        return Some(r);
                    }
                }
            }
        }
    }
    None
}

fn two_k1_k2_reduction(g: &Graph) -> Option<Retraction> {
    for u in g.vertices() {
        let nu = g.neighbors(u);
        for z in g.vertices() - g.closed_neighbors(u) {
            if nu.is_subset(g.neighbors(z)) {
                if let Ok(r) = Retraction::collapse(g, VertexSet::singleton(u), z) {
                    return Some(r);
                }
            }
        }
    }
    None
}
