//! `(P5, diamond)`-free and `(P5, 2K1 ∪ K2)`-free graphs: retract until
//! irreducible, solve the base, and lift the base strategy back up through
//! shadow layers.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{contains, GraphClass, PatternId};

use super::common::{assign, capture_move, ensure, guard, hash_of, min_of, Domination, Refuted};
use super::p5k4::p5k4_unchecked;
use super::retract::{find_reduction, ReductionMode, Retraction};
use super::shadow::Shadow;
use super::GuardError;

/// The retractions applied in order, each on the image graph of the
/// previous one, and the irreducible base.
pub fn reduction_chain(g: &Graph, mode: ReductionMode) -> (Vec<Retraction>, Graph) {
    let mut chain = Vec::new();
    let mut cur = g.clone();
    while let Some(r) = find_reduction(&cur, mode) {
        debug_assert!(r.image().len() < cur.n());
        let next = r.image_graph();
        chain.push(r);
        cur = next;
    }
    (chain, cur)
}

fn lift(chain: Vec<Retraction>, base: Box<dyn Strategy>) -> Box<dyn Strategy> {
    chain
        .into_iter()
        .rev()
        .fold(base, |inner, r| Box::new(Shadow::new(r, inner)))
}

pub fn strategy_diamond(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    guard(g, &GraphClass::p5_and(PatternId::Diamond))?;
    let (chain, base) = reduction_chain(g, ReductionMode::Diamond);
    let base_strategy: Box<dyn Strategy> = if contains(&base, PatternId::K4) {
        Box::new(Refuted {
            name: "diamond".into(),
            contradiction: Contradiction::new(
                "diamond.base-k4-free",
                "irreducible graph contains K4",
            ),
        })
    } else {
        p5k4_unchecked(&base)
    };
    Ok(lift(chain, base_strategy))
}

pub fn strategy_2k1k2(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    guard(g, &GraphClass::p5_and(PatternId::TwoK1K2))?;
    let (chain, base) = reduction_chain(g, ReductionMode::TwoK1K2);
    Ok(lift(chain, endgame(&base)))
}

/// The irreducible `2K1 ∪ K2`-free case. Outside `N[u]` the graph is
/// complete multipartite.
fn endgame(g: &Graph) -> Box<dyn Strategy> {
    let u = 0;
    let r = g.vertices() - g.closed_neighbors(u);
    if r.is_empty() {
        return Box::new(Domination::new(g, "2k1k2/dominating", vec![u, u], "2k1k2.dominating"));
    }
    let parts = match g.induced(r).is_complete_multipartite() {
        Some(p) => p
            .into_iter()
            .map(|p| p.iter().map(|i| r.to_vec()[i]).collect::<VertexSet>())
            .collect::<Vec<_>>(),
        None => {
            return Box::new(Refuted {
                name: "2k1k2".into(),
                contradiction: Contradiction::new(
                    "2k1k2.multipartite",
                    format!("G - N[{u}] is not complete multipartite"),
                ),
            })
        }
    };
    if parts.len() >= 2 {
        if let Some(s) = parts.iter().find(|p| p.len() == 1) {
            return Box::new(Domination::new(
                g,
                "2k1k2/singleton-part",
                vec![u, s.first().unwrap()],
                "2k1k2.singleton-part",
            ));
        }
    }
    Box::new(Endgame {
        g: g.clone(),
        u,
        parts,
        phase: EndPhase::Start,
    })
}

#[derive(Clone, Debug, Hash)]
enum EndPhase {
    Start,
    Doomed(&'static str),
}

#[derive(Clone, Debug)]
struct Endgame {
    g: Graph,
    u: usize,
    /// Partite sets of `G - N[u]`.
    parts: Vec<VertexSet>,
    phase: EndPhase,
}

impl Endgame {
    fn v(&self) -> usize {
        self.g.neighbors(self.u).first().unwrap_or(self.u)
    }
}

impl Strategy for Endgame {
    fn name(&self) -> &str {
        "2k1k2"
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        if self.parts.len() == 1 {
            Ok(Decision::new(vec![self.u, self.u], "2k1k2: independent remainder; both cops on u"))
        } else {
            Ok(Decision::new(vec![self.u, self.v()], "2k1k2: cops on u and v"))
        }
    }

    fn respond(&mut self, cops: &[usize], x: usize) -> Result<Decision, Contradiction> {
        let g = self.g.clone();
        if let Some(d) = capture_move(&g, cops, x) {
            return Ok(d);
        }
        let u = self.u;
        match self.phase {
            EndPhase::Doomed(claim) => Err(Contradiction::new(
                claim,
                format!("robber escaped to {x} with cops at {cops:?}"),
            )),
            EndPhase::Start if self.parts.len() == 1 => {
                let y = min_of(g.neighbors(u) & g.neighbors(x), "2k1k2.connected", "N(u) ∩ N(x)")?;
                let next = assign(&g, cops, [u, y], "2k1k2.independent")?;
                self.phase = EndPhase::Doomed("2k1k2.independent");
                Ok(Decision::new(next, "2k1k2: cop 2 next to the robber"))
            }
            EndPhase::Start => {
                let v = self.v();
                let rest: VertexSet = self.parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p);
                let missed = rest - g.neighbors(v);
                ensure(missed.len() <= 1, "2k1k2.v-one-non-neighbour", || {
                    format!("v = {v} misses {missed}")
                })?;
                ensure(missed.contains(x), "2k1k2.robber-at-x", || {
                    format!("robber at {x}, non-neighbours of v: {missed}")
                })?;
                let part = *self.parts.iter().find(|p| p.contains(x)).unwrap();
                let x2 = min_of(part.without(x), "2k1k2.part-size", "partite set of x minus x")?;
                let r = min_of(
                    g.neighbors(u) - g.neighbors(x2),
                    "2k1k2.z-non-neighbour",
                    "N(u) minus N(x')",
                )?;
                ensure(g.has_edge(r, x), "2k1k2.r-sees-x", || format!("{r} is not adjacent to {x}"))?;
                let next = assign(&g, cops, [r, u], "2k1k2.final")?;
                self.phase = EndPhase::Doomed("2k1k2.final");
                Ok(Decision::new(next, format!("2k1k2: x' = {x2}, cops to r = {r} and u")))
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
