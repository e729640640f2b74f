use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// `vertex` was removed because its closed neighbourhood, within the
/// vertices still present, lies inside that of `dominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub vertex: usize,
    pub dominator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dismantling {
    pub order: Vec<Corner>,
    pub remaining: VertexSet,
}

impl Dismantling {
    pub fn complete(&self) -> bool {
        self.remaining.len() == 1
    }
}

/// Greedy corner elimination, always removing the least corner and
/// reporting its least dominator.
///
/// Deleting a corner leaves a retract, and retracts of cop-win graphs are
/// cop-win, so the greedy order never gets stuck on a dismantlable graph.
pub fn dismantle(g: &Graph) -> Dismantling {
    let mut alive = g.vertices();
    let mut order = Vec::new();
    'outer: while alive.len() > 1 {
        for u in alive {
            let nu = g.closed_neighbors(u) & alive;
            for v in nu.without(u) {
                if nu.is_subset(g.closed_neighbors(v)) {
                    order.push(Corner {
                        vertex: u,
                        dominator: v,
                    });
                    alive.remove(u);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Dismantling {
        order,
        remaining: alive,
    }
}

pub fn is_dismantlable(g: &Graph) -> bool {
    dismantle(g).complete()
}
