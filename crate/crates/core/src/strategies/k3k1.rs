//! `(P5, K3 ∪ K1)`-free graphs. Every triangle dominates, so around any
//! paw the cell `X` is empty and the robber can only hide in a handful of
//! cells.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::Graph;
use crate::patterns::{find_induced, GraphClass, PatternId, PawPartition};

use super::common::{assign, capture_move, ensure, guard, hash_of};
use super::gyarfas::{is_paw_free, paw_free_unchecked};
use super::GuardError;

#[derive(Clone, Debug, Hash)]
enum Phase {
    Start,
    /// Cops on `v2, v4`; the robber must stay in `A3`.
    Hold,
    /// Cops on `v3, v4`, robber left `x` for `A2`.
    Chase { x: usize },
    /// Cops on `x, v3`; the robber must be in `A4`.
    Trap { r: usize },
    Doomed(&'static str),
}

#[derive(Clone, Debug)]
pub struct K3K1 {
    g: Graph,
    p: PawPartition,
    phase: Phase,
}

impl K3K1 {
    fn checked(g: &Graph, paw: [usize; 4]) -> Result<K3K1, Contradiction> {
        let p = PawPartition::new(g, paw).map_err(|e| Contradiction::new("k3k1.paw", e.to_string()))?;
        ensure(p.x().is_empty(), "k3k1.x-empty", || format!("X = {}", p.x()))?;
        ensure(p.a(1).is_empty(), "k3k1.a1-empty", || format!("A1 = {}", p.a(1)))?;
        ensure(p.b(3, 4).is_empty(), "k3k1.b34-empty", || format!("B34 = {}", p.b(3, 4)))?;
        if !p.b(1, 2).is_empty() {
            let rest = p.a(3) | p.a(4) | p.b(1, 4) | p.t(3);
            ensure(rest.is_empty(), "k3k1.b12.cells", || {
                format!("A3 ∪ A4 ∪ B14 ∪ T3 = {rest}")
            })?;
        }
        Ok(K3K1 {
            g: g.clone(),
            p,
            phase: Phase::Start,
        })
    }

    fn go(&mut self, cops: &[usize], t: [usize; 2], claim: &'static str, phase: Phase, label: &str) -> Result<Decision, Contradiction> {
        let next = assign(&self.g, cops, t, claim)?;
        self.phase = phase;
        Ok(Decision::new(next, label))
    }

    fn cell(&self, u: usize) -> String {
        self.p.cell_name(u)
    }
}

impl Strategy for K3K1 {
    fn name(&self) -> &str {
        "k3k1"
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        let p = &self.p;
        if p.b(1, 2).is_empty() {
            Ok(Decision::new(vec![p.v(1), p.v(2)], "k3k1: B12 empty; cops on v1, v2"))
        } else {
            Ok(Decision::new(vec![p.v(3), p.v(4)], "k3k1: B12 nonempty; cops on v3, v4"))
        }
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        if let Some(d) = capture_move(&self.g, cops, robber) {
            return Ok(d);
        }
        let p = self.p.clone();
        let x = robber;
        match self.phase.clone() {
            Phase::Start if !p.b(1, 2).is_empty() => {
                ensure(x == p.v(1) || (p.a(2) | p.b(1, 2)).contains(x), "k3k1.b12.placement", || {
                    format!("robber at {x} in {}", self.cell(x))
                })?;
                self.go(cops, [p.v(3), p.v(2)], "k3k1.b12", Phase::Doomed("k3k1.b12"),
                    "k3k1: cops to v3, v2")
            }
            Phase::Start => {
                if p.a(4).contains(x) {
                    self.p = p.swapped(&self.g);
                } else {
                    ensure(p.a(3).contains(x), "k3k1.placement", || {
                        format!("robber at {x} in {}", self.cell(x))
                    })?;
                }
                let p = self.p.clone();
                self.go(cops, [p.v(2), p.v(4)], "k3k1.hold", Phase::Hold, "k3k1: robber in A3; cops to v2, v4")
            }
            Phase::Hold => {
                ensure(p.a(3).contains(x), "k3k1.hold.r-in-A3", || {
                    format!("robber at {x} in {}", self.cell(x))
                })?;
                self.go(cops, [p.v(3), p.v(4)], "k3k1.chase", Phase::Chase { x }, "k3k1: cops to v3, v4")
            }
            Phase::Chase { x: prev } => {
                ensure(p.a(2).contains(x), "k3k1.chase.r-in-A2", || {
                    format!("robber at {x} in {}", self.cell(x))
                })?;
                self.go(cops, [prev, p.v(3)], "k3k1.trap", Phase::Trap { r: x }, "k3k1: cops to x, v3")
            }
            Phase::Trap { r } => {
                ensure(p.a(4).contains(x), "k3k1.trap.r-in-A4", || {
                    format!("robber at {x} in {}", self.cell(x))
                })?;
                self.go(cops, [r, p.v(2)], "k3k1.final", Phase::Doomed("k3k1.final"), "k3k1: cops to r, v2")
            }
            Phase::Doomed(claim) => Err(Contradiction::new(
                claim,
                format!("robber escaped to {x} with cops at {cops:?}"),
            )),
        }
    }

    fn fingerprint(&self) -> u64 {
        hash_of(&(&self.phase, self.p.paw))
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

pub fn strategy_k3k1(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    guard(g, &GraphClass::p5_and(PatternId::K3K1))?;
    if is_paw_free(g) {
        return Ok(paw_free_unchecked(g));
    }
    let e = find_induced(g, PatternId::Paw.graph()).expect("graph has a paw");
    let paw = [e.map[0], e.map[1], e.map[2], e.map[3]];
    Ok(match K3K1::checked(g, paw) {
        Ok(s) => Box::new(s),
        Err(c) => Box::new(super::common::Refuted {
            name: "k3k1".into(),
            contradiction: c,
        }),
    })
}
