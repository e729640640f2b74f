//! Backward induction over `(cop configuration, robber, turn)`.
//!
//! Cop tuples are stored as sorted multisets since the rules are symmetric
//! under permuting cops. Ranks count cop moves until capture: 0 when the
//! robber already shares a vertex with a cop, `1 + min` over cop successors,
//! and `max` over robber successors.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub const UNRANKED: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("k = {0} cops is not supported (1 <= k <= 3)")]
    UnsupportedK(usize),
    #[error("state budget exceeded: n = {n} is above the limit {limit} for k = {k}")]
    Budget { n: usize, k: usize, limit: usize },
}

/// Largest vertex count `solve` accepts for `k` cops.
pub fn vertex_limit(k: usize) -> Option<usize> {
    match k {
        1 => Some(64),
        2 => Some(24),
        3 => Some(20),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct WinTable {
    graph: Graph,
    k: usize,
    configs: Vec<Vec<usize>>,
    /// Dense index from `sum c_i n^i` of a sorted tuple to its config id.
    lookup: Vec<u32>,
    succ: Vec<Vec<u32>>,
    cop_rank: Vec<u32>,
    rob_rank: Vec<u32>,
}

fn sorted_configs(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

impl WinTable {
    fn skeleton(g: &Graph, k: usize) -> Result<WinTable, SolverError> {
        let limit = vertex_limit(k).ok_or(SolverError::UnsupportedK(k))?;
        let n = g.n();
        if n > limit {
            return Err(SolverError::Budget { n, k, limit });
        }
        let configs = sorted_configs(n, k);
        let mut lookup = vec![u32::MAX; n.pow(k as u32)];
        let key = |c: &[usize]| c.iter().rev().fold(0, |acc, &v| acc * n + v);
        for (i, c) in configs.iter().enumerate() {
            lookup[key(c)] = i as u32;
        }
        let succ = configs
            .iter()
            .map(|c| {
                let mut out: Vec<u32> = Vec::new();
                super::for_each_joint_move(g, c, &mut |t| {
                    let mut s = t.to_vec();
                    s.sort_unstable();
                    out.push(lookup[key(&s)]);
                });
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        let size = configs.len() * n;
        Ok(WinTable {
            graph: g.clone(),
            k,
            configs,
            lookup,
            succ,
            cop_rank: vec![UNRANKED; size],
            rob_rank: vec![UNRANKED; size],
        })
    }

    /// Assemble a table from previously computed ranks, e.g. a cache file.
    pub(crate) fn from_ranks(
        g: &Graph,
        k: usize,
        cop_rank: Vec<u32>,
        rob_rank: Vec<u32>,
    ) -> Result<WinTable, SolverError> {
        let mut t = Self::skeleton(g, k)?;
        if cop_rank.len() != t.cop_rank.len() || rob_rank.len() != t.rob_rank.len() {
            return Err(SolverError::UnsupportedK(k));
        }
        t.cop_rank = cop_rank;
        t.rob_rank = rob_rank;
        Ok(t)
    }

    pub(crate) fn raw_ranks(&self) -> (&[u32], &[u32]) {
        (&self.cop_rank, &self.rob_rank)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn config_count(&self) -> usize {
        self.configs.len()
    }

    pub fn config(&self, id: usize) -> &[usize] {
        &self.configs[id]
    }

    /// Config id of any ordering of a cop tuple.
    pub fn config_index(&self, cops: &[usize]) -> usize {
        assert_eq!(cops.len(), self.k, "cop tuple of the wrong size");
        let n = self.graph.n();
        let mut s = cops.to_vec();
        s.sort_unstable();
        let key = s.iter().rev().fold(0, |acc, &v| acc * n + v);
        self.lookup[key] as usize
    }

    pub fn successors(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[id].iter().map(|&c| c as usize)
    }

    fn idx(&self, cops: &[usize], robber: usize) -> usize {
        self.config_index(cops) * self.graph.n() + robber
    }

    /// Cop moves to capture from `(cops, robber)` with the cops to move,
    /// or `None` when the robber survives.
    pub fn cop_rank(&self, cops: &[usize], robber: usize) -> Option<u32> {
        let r = self.cop_rank[self.idx(cops, robber)];
        (r != UNRANKED).then_some(r)
    }

    /// Same, with the robber to move.
    pub fn rob_rank(&self, cops: &[usize], robber: usize) -> Option<u32> {
        let r = self.rob_rank[self.idx(cops, robber)];
        (r != UNRANKED).then_some(r)
    }

    pub fn cop_rank_by_id(&self, id: usize, robber: usize) -> Option<u32> {
        let r = self.cop_rank[id * self.graph.n() + robber];
        (r != UNRANKED).then_some(r)
    }

    pub fn rob_rank_by_id(&self, id: usize, robber: usize) -> Option<u32> {
        let r = self.rob_rank[id * self.graph.n() + robber];
        (r != UNRANKED).then_some(r)
    }

    /// Worst case over robber placements against the config `id`.
    pub fn placement_value(&self, id: usize) -> Option<u32> {
        (0..self.graph.n())
            .map(|r| self.cop_rank_by_id(id, r))
            .try_fold(0, |acc, r| r.map(|r| acc.max(r)))
    }

    /// The placement with the smallest worst-case capture time (ties go
    /// to the least config), or `None` when no placement wins.
    pub fn opening(&self) -> Option<(Vec<usize>, u32)> {
        (0..self.configs.len())
            .filter_map(|id| self.placement_value(id).map(|v| (v, id)))
            .min()
            .map(|(v, id)| (self.configs[id].clone(), v))
    }

    pub fn cops_win(&self) -> bool {
        self.graph.n() == 0 || self.opening().is_some()
    }

    /// Checks the fixed-point equations on every state; returns the first
    /// violated state as a message.
    pub fn verify(&self) -> Result<(), String> {
        let n = self.graph.n();
        for id in 0..self.configs.len() {
            let c = &self.configs[id];
            for r in 0..n {
                let caught = c.contains(&r);
                let cr = self.cop_rank_by_id(id, r);
                let rr = self.rob_rank_by_id(id, r);
                if caught {
                    if cr != Some(0) || rr != Some(0) {
                        return Err(format!("capture state {c:?},{r} not ranked 0"));
                    }
                    continue;
                }
                let best = self
                    .successors(id)
                    .filter_map(|s| self.rob_rank_by_id(s, r))
                    .min();
                if cr != best.map(|b| b + 1) {
                    return Err(format!("cop state {c:?},{r}: rank {cr:?} vs best {best:?}"));
                }
                let worst = self
                    .graph
                    .closed_neighbors(r)
                    .iter()
                    .map(|s| self.cop_rank_by_id(id, s))
                    .try_fold(0, |acc, x| x.map(|x| acc.max(x)));
                if rr != worst {
                    return Err(format!("robber state {c:?},{r}: rank {rr:?} vs {worst:?}"));
                }
            }
        }
        Ok(())
    }
}

/// Solve the `k`-cop game on `g`.
pub fn solve(g: &Graph, k: usize) -> Result<WinTable, SolverError> {
    let mut t = WinTable::skeleton(g, k)?;
    let n = g.n();
    let nc = t.configs.len();
    // Ranked robber positions per config, one bitset per turn.
    let mut cop_set = vec![VertexSet::EMPTY; nc];
    let mut rob_set = vec![VertexSet::EMPTY; nc];
    for (id, c) in t.configs.iter().enumerate() {
        for &v in c {
            cop_set[id].insert(v);
            rob_set[id].insert(v);
            t.cop_rank[id * n + v] = 0;
            t.rob_rank[id * n + v] = 0;
        }
    }
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let mut level = 0u32;
    loop {
        level += 1;
        let fresh: Vec<VertexSet> = (0..nc)
            .map(|id| {
                let reach = t.succ[id]
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, &s| acc | rob_set[s as usize]);
                reach - cop_set[id]
            })
            .collect();
        if fresh.iter().all(|s| s.is_empty()) {
            break;
        }
        for id in 0..nc {
            for r in fresh[id] {
                t.cop_rank[id * n + r] = level;
            }
            cop_set[id] |= fresh[id];
        }
        for id in 0..nc {
            for r in g.vertices() - rob_set[id] {
                if closed[r].is_subset(cop_set[id]) {
                    rob_set[id].insert(r);
                    t.rob_rank[id * n + r] = level;
                }
            }
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CopNumber {
    Exactly(usize),
    /// More than this many cops are needed.
    Exceeds(usize),
}

impl CopNumber {
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, CopNumber::Exactly(c) if c <= k)
    }

    fn add(self, other: CopNumber) -> CopNumber {
        use CopNumber::*;
        match (self, other) {
            (Exactly(a), Exactly(b)) => Exactly(a + b),
            (Exactly(a) | Exceeds(a), Exactly(b) | Exceeds(b)) => Exceeds(a + b),
        }
    }

    fn max(self, other: CopNumber) -> CopNumber {
        use CopNumber::*;
        match (self, other) {
            (Exactly(a), Exactly(b)) => Exactly(a.max(b)),
            (Exceeds(a), Exceeds(b)) => Exceeds(a.max(b)),
            (Exceeds(a), Exactly(b)) | (Exactly(b), Exceeds(a)) => {
                if b > a {
                    Exactly(b)
                } else {
                    Exceeds(a)
                }
            }
        }
    }
}

impl fmt::Display for CopNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CopNumber::Exactly(k) => write!(f, "{k}"),
            CopNumber::Exceeds(k) => write!(f, ">{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CopNumberReport {
    /// Sum over components: the cops must win in every component at once.
    pub total: CopNumber,
    /// Largest single-component value.
    pub max_component: CopNumber,
    pub components: Vec<(Vec<usize>, CopNumber)>,
}

fn connected_cop_number(g: &Graph, k_max: usize) -> Result<CopNumber, SolverError> {
    if g.n() <= 1 {
        return Ok(CopNumber::Exactly(g.n()));
    }
    if super::is_dismantlable(g) {
        return Ok(CopNumber::Exactly(1));
    }
    for k in 2..=k_max {
        if solve(g, k)?.cops_win() {
            return Ok(CopNumber::Exactly(k));
        }
    }
    Ok(CopNumber::Exceeds(k_max.max(1)))
}

/// Cop number of every component of `g`, trying `k = 1..=k_max`.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<CopNumberReport, SolverError> {
    if k_max == 0 || k_max > 3 {
        return Err(SolverError::UnsupportedK(k_max));
    }
    let mut total = CopNumber::Exactly(0);
    let mut max_component = CopNumber::Exactly(0);
    let mut components = Vec::new();
    for comp in g.components(g.vertices()) {
        let c = connected_cop_number(&g.induced(comp), k_max)?;
        total = total.add(c);
        max_component = max_component.max(c);
        components.push((comp.to_vec(), c));
    }
    Ok(CopNumberReport {
        total,
        max_component,
        components,
    })
}
