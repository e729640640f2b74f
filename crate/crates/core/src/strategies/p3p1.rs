//! `P3 ∪ P1`-free graphs: one cop holds `v`, the robber is stuck in a
//! complete component of `G - N[v]`, and the other cop walks in.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{GraphClass, PatternId};

use super::common::{capture_move, ensure, guard, hash_of, min_of};
use super::GuardError;

#[derive(Clone, Debug, Hash)]
enum Phase {
    Start,
    /// Cop 2 is on its way into the component `c`.
    Walk { c: VertexSet },
}

#[derive(Clone, Debug)]
pub struct P3P1 {
    g: Graph,
    v: usize,
    phase: Phase,
}

impl P3P1 {
    pub fn new(g: &Graph) -> Result<P3P1, GuardError> {
        guard(g, &GraphClass::free_of(&[PatternId::P3P1]))?;
        Ok(P3P1 {
            g: g.clone(),
            v: 0,
            phase: Phase::Start,
        })
    }
}

impl Strategy for P3P1 {
    fn name(&self) -> &str {
        "p3p1"
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        Ok(Decision::new(vec![self.v, self.v], "p3p1: both cops on v"))
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = &self.g;
        if let Some(d) = capture_move(g, cops, robber) {
            return Ok(d);
        }
        let v = self.v;
        let (hold, walker) = if cops[0] == v { (0, 1) } else { (1, 0) };
        ensure(cops[hold] == v, "p3p1.hold-v", || {
            format!("no cop on v = {v}: {cops:?}")
        })?;
        let outside = g.vertices() - g.closed_neighbors(v);
        let mut next = cops.to_vec();
        match self.phase.clone() {
            Phase::Start => {
                let c = g.component_of(robber, outside);
                ensure(g.is_complete(c), "p3p1.component-complete", || {
                    format!("component {c} of G - N[v] is not complete")
                })?;
                let r = min_of(
                    g.neighbors(v) & g.set_neighbors(c),
                    "p3p1.connected",
                    "N(C) ∩ N(v)",
                )?;
                next[walker] = r;
                self.phase = Phase::Walk { c };
                Ok(Decision::new(next, format!("p3p1: cop 2 to r = {r} next to C = {c}")))
            }
            Phase::Walk { c } => {
                ensure(c.contains(robber), "p3p1.confined", || {
                    format!("robber at {robber} left C = {c}")
                })?;
                let step = min_of(
                    g.neighbors(cops[walker]) & c,
                    "p3p1.walk",
                    "neighbours of cop 2 in C",
                )?;
                next[walker] = step;
                Ok(Decision::new(next, "p3p1: cop 2 enters C"))
            }
        }
    }

    fn fingerprint(&self) -> u64 {
        hash_of(&self.phase)
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

pub fn strategy_p3p1(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    Ok(Box::new(P3P1::new(g)?))
}
