//! The induced-path argument for `(P5, H)`-free graphs with
//! `H` in {C3, C4, C5, claw, banner}, and the paw-free case built on it.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{find_induced, is_free, GraphClass, PatternId};

use super::common::{assign, capture_move, ensure, guard, hash_of, min_of, Domination};
use super::GuardError;

pub const GYARFAS_PATTERNS: [PatternId; 5] = [
    PatternId::C3,
    PatternId::C4,
    PatternId::C5,
    PatternId::Claw,
    PatternId::Banner,
];

#[derive(Clone, Debug, Hash)]
enum Phase {
    /// Both cops on `v1`, robber just placed.
    Start,
    /// Cop 2 has reached `v2`, next to the robber's component.
    Approach { v2: usize },
    /// Both `S` and `T` are nonempty; the robber must have entered `T`.
    Triangle { v2: usize, v3: usize, t: VertexSet },
    Doomed(&'static str),
}

#[derive(Clone, Debug)]
pub struct Gyarfas {
    g: Graph,
    name: String,
    v1: usize,
    phase: Phase,
}

impl Gyarfas {
    pub fn new(g: &Graph, h: PatternId) -> Result<Gyarfas, GuardError> {
        if !GYARFAS_PATTERNS.contains(&h) {
            return Err(GuardError::UnsupportedPattern(h));
        }
        guard(g, &GraphClass::p5_and(h))?;
        Ok(Self::unchecked(g, &format!("gyarfas-{}", h.name().to_ascii_lowercase())))
    }

    pub(crate) fn unchecked(g: &Graph, name: &str) -> Gyarfas {
        Gyarfas {
            g: g.clone(),
            name: name.to_string(),
            v1: 0,
            phase: Phase::Start,
        }
    }

    fn step(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = &self.g;
        let v1 = self.v1;
        let outside = g.vertices() - g.closed_neighbors(v1);
        match self.phase.clone() {
            Phase::Start => {
                ensure(outside.contains(robber), "gyarfas.start", || {
                    format!("robber at {robber} should avoid N[v1]")
                })?;
                let x = g.component_of(robber, outside);
                let v2 = min_of(
                    g.neighbors(v1) & g.set_neighbors(x),
                    "gyarfas.connected",
                    "N(v1) ∩ N(X)",
                )?;
                self.phase = Phase::Approach { v2 };
                let next = assign(g, cops, [v1, v2], "gyarfas.approach")?;
                Ok(Decision::new(next, "gyarfas: cop 2 to v2 next to the robber's component"))
            }
            Phase::Approach { v2 } => {
                let x = robber;
                ensure(outside.contains(x), "gyarfas.stay-in-X", || {
                    format!("robber at {x} left the component")
                })?;
                let v3 = min_of(
                    g.neighbors(v2) & g.neighbors(x) & outside,
                    "gyarfas.p4",
                    "common neighbour of v2 and x outside N[v1]",
                )?;
                let q: VertexSet = [v1, v2, v3, x].iter().collect();
                let trace = |pair: &[usize]| -> VertexSet {
                    let want: VertexSet = pair.iter().collect();
                    g.vertices()
                        .iter()
                        .filter(|&u| g.neighbors(u) & q == want)
                        .collect()
                };
                let s = trace(&[v1, x]);
                let t = trace(&[v2, x]).without(v3);
                if s.is_empty() {
                    self.phase = Phase::Doomed("gyarfas.s-empty");
                    let next = assign(g, cops, [v2, v3], "gyarfas.s-empty")?;
                    Ok(Decision::new(next, format!("gyarfas: S empty, cops to v2={v2}, v3={v3}")))
                } else if t.is_empty() {
                    self.phase = Phase::Doomed("gyarfas.t-empty");
                    let next = assign(g, cops, [v1, v3], "gyarfas.t-empty")?;
                    Ok(Decision::new(next, format!("gyarfas: T empty, cops to v1={v1}, v3={v3}")))
                } else {
                    self.phase = Phase::Triangle { v2, v3, t };
                    let next = assign(g, cops, [v1, v3], "gyarfas.triangle")?;
                    Ok(Decision::new(next, "gyarfas: S and T nonempty, cops to v1, v3"))
                }
            }
            Phase::Triangle { v2, v3, t } => {
                ensure(t.contains(robber), "gyarfas.triangle.r-in-T", || {
                    format!("robber at {robber} is outside T = {t}")
                })?;
                self.phase = Phase::Doomed("gyarfas.triangle.r-trapped");
                let next = assign(g, cops, [v2, v3], "gyarfas.triangle")?;
                Ok(Decision::new(next, "gyarfas: robber in T, cops to v2, v3"))
            }
            Phase::Doomed(claim) => Err(Contradiction::new(
                claim,
                format!("robber escaped to {robber} with cops at {cops:?}"),
            )),
        }
    }
}

impl Strategy for Gyarfas {
    fn name(&self) -> &str {
        &self.name
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        Ok(Decision::new(vec![self.v1, self.v1], "gyarfas: both cops on v1"))
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        if let Some(d) = capture_move(&self.g, cops, robber) {
            return Ok(d);
        }
        self.step(cops, robber)
    }

    fn fingerprint(&self) -> u64 {
        hash_of(&self.phase)
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

pub fn strategy_gyarfas(g: &Graph, h: PatternId) -> Result<Box<dyn Strategy>, GuardError> {
    Ok(Box::new(Gyarfas::new(g, h)?))
}

/// Triangle-free: the induced-path argument. Otherwise two vertices of
/// the least triangle dominate the graph.
pub fn strategy_paw_free(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    guard(g, &GraphClass::p5_and(PatternId::Paw))?;
    Ok(paw_free_unchecked(g))
}

pub(crate) fn paw_free_unchecked(g: &Graph) -> Box<dyn Strategy> {
    match find_induced(g, PatternId::C3.graph()) {
        None => Box::new(Gyarfas::unchecked(g, "paw-free/gyarfas-c3")),
        Some(tri) => Box::new(Domination::new(
            g,
            "paw-free/triangle",
            vec![tri.map[0], tri.map[1]],
            "paw.triangle-dominates",
        )),
    }
}

pub(crate) fn is_paw_free(g: &Graph) -> bool {
    is_free(g, &[PatternId::Paw])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn guards() {
        assert!(Gyarfas::new(&cycle(6), PatternId::C4).is_err());
        assert!(Gyarfas::new(&cycle(5), PatternId::C4).is_ok());
        assert!(Gyarfas::new(&cycle(5), PatternId::P4).is_err());
        assert!(strategy_paw_free(&complete_multipartite(&[2, 2, 2])).is_ok());
    }
}
