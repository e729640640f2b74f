use std::sync::Arc;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

use super::WinTable;
use crate::graph::{Graph, VertexSet};

/// A robber policy.
pub trait Adversary: Send {
    fn name(&self) -> &str;

    fn place(&mut self, cops: &[usize]) -> usize;

    /// Called after the cops have moved.
    fn respond(&mut self, cops: &[usize], robber: usize) -> usize;

    /// `false` when the policy carries hidden state (a random stream), in
    /// which case a repeated position does not imply a repeated future.
    fn is_positional(&self) -> bool {
        true
    }
}

/// Plays from a solved table: survives whenever the table says it can,
/// otherwise delays capture as long as possible. Ties go to the least
/// vertex.
#[derive(Clone, Debug)]
pub struct OptimalRobber {
    table: Arc<WinTable>,
}

impl OptimalRobber {
    pub fn new(table: Arc<WinTable>) -> Self {
        OptimalRobber { table }
    }

    fn best(&self, cops: &[usize], options: impl Iterator<Item = usize>) -> usize {
        let id = self.table.config_index(cops);
        // rank None (robber survives) beats every finite rank
        options
            .map(|r| (self.table.cop_rank_by_id(id, r).map_or(u64::MAX, u64::from), r))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, r)| r)
            .expect("a robber always has a move")
    }
}

impl Adversary for OptimalRobber {
    fn name(&self) -> &str {
        "optimal"
    }

    fn place(&mut self, cops: &[usize]) -> usize {
        self.best(cops, self.table.graph().vertices().iter())
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> usize {
        self.best(cops, self.table.graph().closed_neighbors(robber).iter())
    }
}

/// Uniform random placement and moves from a seeded xoshiro256++ stream,
/// drawn from the options outside the cops' closed neighbourhoods when
/// there are any, else from those not on a cop.
#[derive(Clone, Debug)]
pub struct RandomRobber {
    graph: Graph,
    rng: Xoshiro256PlusPlus,
}

impl RandomRobber {
    pub fn new(graph: Graph, seed: u64) -> Self {
        RandomRobber {
            graph,
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }
}

impl RandomRobber {
    fn pick(&mut self, cops: &[usize], options: VertexSet) -> usize {
        let on: VertexSet = cops.iter().collect();
        let near = self.graph.closed_set_neighbors(on);
        let pool = [options - near, options - on, options]
            .into_iter()
            .find(|s| !s.is_empty())
            .unwrap_or(options);
        pool.iter().choose(&mut self.rng).unwrap_or(0)
    }
}

impl Adversary for RandomRobber {
    fn name(&self) -> &str {
        "random"
    }

    fn place(&mut self, cops: &[usize]) -> usize {
        self.pick(cops, self.graph.vertices())
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> usize {
        self.pick(cops, self.graph.closed_neighbors(robber))
    }

    fn is_positional(&self) -> bool {
        false
    }
}

/// Maximises the distance to the nearest cop, ties to the least vertex.
#[derive(Clone, Debug)]
pub struct GreedyFarRobber {
    graph: Graph,
}

impl GreedyFarRobber {
    pub fn new(graph: Graph) -> Self {
        GreedyFarRobber { graph }
    }

    fn best(&self, cops: &[usize], options: impl Iterator<Item = usize>) -> usize {
        let set = cops.iter().collect();
        options
            .map(|r| (self.graph.distance(r, set).unwrap_or(usize::MAX), r))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, r)| r)
            .expect("a robber always has a move")
    }
}

impl Adversary for GreedyFarRobber {
    fn name(&self) -> &str {
        "greedy-far"
    }

    fn place(&mut self, cops: &[usize]) -> usize {
        self.best(cops, self.graph.vertices().iter())
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> usize {
        self.best(cops, self.graph.closed_neighbors(robber).iter())
    }
}
