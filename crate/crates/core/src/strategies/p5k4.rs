//! `(P5, K4)`-free graphs.
//!
//! Paw-free graphs go to the paw-free strategy. Otherwise the cops anchor
//! on an induced paw `P = [v1, v2, v3, v4]` (pendant, hub, rim, rim): the
//! paw of an induced co-banner if there is one, else of an induced
//! butterfly, else any paw. Each phase below is one step of the case
//! analysis around that paw; the `claim` strings name the step whose
//! assertion failed.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::Graph;
use crate::patterns::{find_induced, GraphClass, PatternId, PawPartition};

use super::common::{assign, capture_move, ensure, guard, hash_of, min_of};
use super::gyarfas::{is_paw_free, paw_free_unchecked};
use super::GuardError;

type Paw = [usize; 4];

#[derive(Clone, Copy, Debug, Hash, PartialEq, Eq)]
pub enum Mode {
    /// Paw of an induced co-banner, `a1` its extra vertex (in `A1`).
    CoBanner { paw: Paw, a1: usize },
    /// Paw of an induced butterfly, `b` its extra vertex (in `B12`).
    Butterfly { paw: Paw, b: usize },
    /// No co-banner and no butterfly.
    WithoutKite { paw: Paw },
}

#[derive(Clone, Debug, Hash)]
enum Phase {
    /// Every robber move from here is into a cop's closed neighbourhood.
    Doomed(&'static str),

    CbStart,
    /// Cops on `a1, v1`; the robber must stay in its `X` component.
    CbGuardX,
    /// Robber in `B34`, cops moved to `b in B13` and `v1`.
    CbCl3 { paw: Paw },
    /// Robber in `B34` with `B13 = B14 = ∅`, cops on `v1, v3`.
    CbCl4,
    /// Robber went to `r in A2`; cops on `v2, v3`.
    CbCl4A2 { r: usize },

    BfStart,
    /// Cops on `v2` and a rim vertex; robber held in `X`.
    BfHold { u: usize },

    /// Cops on `v3, v2` of `paw`, robber in `X`; `b1 in B13`.
    PosCl3Hold { paw: Paw, b1: usize },
    /// Cops on `c1 in T2` and `v4`.
    PosCl4T2 { paw: Paw, c1: usize },
    PosCl5a { paw: Paw },
    PosCl5b { paw: Paw },

    /// Cops on `b, v4`; the robber must stay on the pendant of the kite
    /// paw, which lies at distance 2 from the new paw `next`.
    KiteHold { next: Paw, pendant: usize },
    KiteM1 { paw: Paw },
    KiteM2 { paw: Paw },

    WkStart,
    WkCl0 { paw: Paw },
    WkM { paw: Paw },
}

#[derive(Clone, Debug)]
pub struct P5K4 {
    g: Graph,
    mode: Mode,
    phase: Phase,
}

fn note(label: &str) -> String {
    label.to_string()
}

impl P5K4 {
    /// Picks the anchor paw; `None` when the graph is paw-free.
    pub fn choose_mode(g: &Graph) -> Option<Mode> {
        if let Some(e) = find_induced(g, PatternId::CoBanner.graph()) {
            let m = &e.map;
            return Some(Mode::CoBanner {
                paw: [m[0], m[1], m[2], m[3]],
                a1: m[4],
            });
        }
        if let Some(e) = find_induced(g, PatternId::Butterfly.graph()) {
            let m = &e.map;
            return Some(Mode::Butterfly {
                paw: [m[0], m[1], m[2], m[3]],
                b: m[4],
            });
        }
        find_induced(g, PatternId::Paw.graph()).map(|e| {
            let m = &e.map;
            Mode::WithoutKite {
                paw: [m[0], m[1], m[2], m[3]],
            }
        })
    }

    pub(crate) fn with_mode(g: &Graph, mode: Mode) -> P5K4 {
        let phase = match mode {
            Mode::CoBanner { .. } => Phase::CbStart,
            Mode::Butterfly { .. } => Phase::BfStart,
            Mode::WithoutKite { .. } => Phase::WkStart,
        };
        P5K4 {
            g: g.clone(),
            mode,
            phase,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn part(&self, paw: Paw) -> Result<PawPartition, Contradiction> {
        let p = PawPartition::new(&self.g, paw)
            .map_err(|e| Contradiction::new("p5k4.paw", e.to_string()))?;
        p.check_k4_free_structure(&self.g)
            .map_err(|(label, detail)| Contradiction::new(format!("p5k4.partition.{label}"), detail))?;
        Ok(p)
    }

    fn go(
        &mut self,
        cops: &[usize],
        targets: [usize; 2],
        claim: &'static str,
        phase: Phase,
        label: &str,
    ) -> Result<Decision, Contradiction> {
        let next = assign(&self.g, cops, targets, claim)?;
        self.phase = phase;
        Ok(Decision::new(next, note(label)))
    }

    fn doom(
        &mut self,
        cops: &[usize],
        targets: [usize; 2],
        claim: &'static str,
        label: &str,
    ) -> Result<Decision, Contradiction> {
        self.go(cops, targets, claim, Phase::Doomed(claim), label)
    }

    fn step(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = self.g.clone();
        let n = |v: usize| g.neighbors(v);
        match self.phase.clone() {
            Phase::Doomed(claim) => Err(Contradiction::new(
                claim,
                format!("robber escaped to {robber} with cops at {cops:?}"),
            )),

            // ---- co-banner ----
            Phase::CbStart => {
                let Mode::CoBanner { paw, a1 } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                let (v1, v2) = (p.v(1), p.v(2));
                let x = robber;
                if p.x().contains(x) {
                    let t2 = n(x) & p.t(2);
                    let a2 = n(x) & p.a(2);
                    if t2.is_empty() {
                        let y = min_of(n(x) & p.neighborhood(), "cobanner.x-distance-2", "N(x) ∩ N(P)")?;
                        ensure(n(y).contains(v2), "cobanner.cl0", || {
                            format!("{y} next to x = {x} misses v2")
                        })?;
                        return self.doom(cops, [v2, y], "cobanner.x.no-t2", "co-banner: x in X, N(x)∩T2 empty; cops to v2 and y");
                    }
                    let guarded = t2.iter().all(|c| !(a2 - n(c)).is_empty());
                    if guarded {
                        return self.go(cops, [a1, v1], "cobanner.x.guard", Phase::CbGuardX,
                            "co-banner: x in X, every c in N(x)∩T2 misses part of N(x)∩A2; cops to a1, v1");
                    }
                    let c = t2.iter().find(|&c| a2.is_subset(n(c))).unwrap();
                    return self.doom(cops, [c, v1], "cobanner.x.t2-covers",
                        "co-banner: x in X, c in N(x)∩T2 covers N(x)∩A2; cops to c, v1");
                }
                ensure(p.b(3, 4).contains(x), "cobanner.placement", || {
                    format!("robber placed at {x} in {}", p.cell_name(x))
                })?;
                if !p.b(1, 3).is_empty() || !p.b(1, 4).is_empty() {
                    let s = if !p.b(1, 3).is_empty() { p } else { p.swapped(&g) };
                    let b = s.b(1, 3).first().unwrap();
                    return self.go(cops, [b, s.v(1)], "cobanner.cl3", Phase::CbCl3 { paw: s.paw },
                        "co-banner: x in B34, B13 or B14 nonempty; cops to b, v1");
                }
                let a2x = n(x) & p.a(2);
                let blocked = a2x.iter().all(|a| !(p.a(1) - n(a)).is_empty());
                if blocked {
                    return self.go(cops, [v1, p.v(3)], "cobanner.cl4", Phase::CbCl4,
                        "co-banner: x in B34, each a in N(x)∩A2 misses part of A1; cops to v1, v3");
                }
                let a2 = a2x.iter().find(|&a| p.a(1).is_subset(n(a))).unwrap();
                self.doom(cops, [v2, a2], "cobanner.b34.a2-covers",
                    "co-banner: x in B34, a2 covers A1; cops to v2, a2")
            }
            Phase::CbGuardX => {
                let Mode::CoBanner { paw, a1 } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                ensure(p.x().contains(robber), "cobanner.cl1.stay-in-X", || {
                    format!("robber moved to {robber} in {}", p.cell_name(robber))
                })?;
                let c = min_of(n(robber) & p.t(2), "cobanner.cl1.t2", "N(x) ∩ T2")?;
                self.doom(cops, [a1, c], "cobanner.cl1", "co-banner: cops to a1 and c in N(x)∩T2")
            }
            Phase::CbCl3 { paw } => {
                let p = self.part(paw)?;
                ensure(
                    robber == p.v(4) || p.b(2, 3).contains(robber),
                    "cobanner.cl3.r-cell",
                    || format!("robber at {robber} in {}", p.cell_name(robber)),
                )?;
                self.doom(cops, [p.v(3), p.v(2)], "cobanner.cl3", "co-banner: cops to v3, v2")
            }
            Phase::CbCl4 => {
                let Mode::CoBanner { paw, .. } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                let (v2, v3) = (p.v(2), p.v(3));
                if p.b(2, 4).contains(robber) {
                    self.doom(cops, [v2, v3], "cobanner.cl4.b24", "co-banner: r in B24; cops to v2, v3")
                } else if p.a(2).contains(robber) {
                    self.go(cops, [v2, v3], "cobanner.cl4.a2", Phase::CbCl4A2 { r: robber },
                        "co-banner: r in A2; cops to v2, v3")
                } else {
                    Err(Contradiction::new(
                        "cobanner.cl4.r-cell",
                        format!("robber at {robber} in {}", p.cell_name(robber)),
                    ))
                }
            }
            Phase::CbCl4A2 { r } => {
                let Mode::CoBanner { paw, .. } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                ensure(p.a(1).contains(robber), "cobanner.cl4.a2.r-in-A1", || {
                    format!("robber at {robber} in {}", p.cell_name(robber))
                })?;
                self.doom(cops, [r, p.v(2)], "cobanner.cl4.a2", "co-banner: cops to r, v2")
            }

            // ---- butterfly ----
            Phase::BfStart => {
                let Mode::Butterfly { paw, .. } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                let r = robber;
                if r == p.v(1) || (p.a(2) | p.b(1, 2)).contains(r) {
                    return self.doom(cops, [p.v(3), p.v(2)], "butterfly.near-v1",
                        "butterfly: robber near v1; cops to v3, v2");
                }
                ensure(p.x().contains(r), "butterfly.placement", || {
                    format!("robber placed at {r} in {}", p.cell_name(r))
                })?;
                let rim = n(p.v(3)) | n(p.v(4));
                let u = min_of(n(r) & p.neighborhood() & rim, "butterfly.rim-neighbour", "N(r) ∩ N(v3 or v4)")?;
                let vi = if n(u).contains(p.v(3)) { p.v(3) } else { p.v(4) };
                self.go(cops, [p.v(2), vi], "butterfly.hold", Phase::BfHold { u },
                    "butterfly: robber in X; cops to v2 and a rim vertex")
            }
            Phase::BfHold { u } => {
                let Mode::Butterfly { paw, b } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                ensure(p.x().contains(robber), "butterfly.stay-in-X", || {
                    format!("robber moved to {robber} in {}", p.cell_name(robber))
                })?;
                self.doom(cops, [b, u], "butterfly.final", "butterfly: cops to b, u")
            }

            // ---- position of the cops: rim vs distance 2 ----
            Phase::PosCl3Hold { paw, b1 } => {
                let p = self.part(paw)?;
                ensure(p.x().contains(robber), "position.cl3.stay-in-X", || {
                    format!("robber moved to {robber} in {}", p.cell_name(robber))
                })?;
                let b = min_of(n(robber) & p.b(2, 3), "position.cl3.b23", "N(r) ∩ B23")?;
                self.doom(cops, [b, b1], "position.cl3", "position: cops to b in B23 and b1 in B13")
            }
            Phase::PosCl4T2 { paw, c1 } => {
                let p = self.part(paw)?;
                ensure(p.b(2, 3).contains(robber), "position.cl4.r-in-B23", || {
                    format!("robber at {robber} in {}", p.cell_name(robber))
                })?;
                self.doom(cops, [c1, p.v(3)], "position.cl4", "position: cops to c1, v3")
            }
            Phase::PosCl5a { paw } => {
                let p = self.part(paw)?;
                ensure(p.x().contains(robber), "position.cl5.stay-in-X", || {
                    format!("robber moved to {robber} in {}", p.cell_name(robber))
                })?;
                self.go(cops, [p.v(1), p.v(2)], "position.cl5", Phase::PosCl5b { paw },
                    "position: cops to v1, v2")
            }
            Phase::PosCl5b { paw } => {
                let p = self.part(paw)?;
                ensure(p.x().contains(robber), "position.cl5.stay-in-X", || {
                    format!("robber moved to {robber} in {}", p.cell_name(robber))
                })?;
                let x = min_of(n(robber) & p.neighborhood(), "position.cl5.distance-2", "N(r) ∩ N(P)")?;
                self.doom(cops, [x, p.v(1)], "position.cl5", "position: cops to x, v1")
            }

            // ---- kite ----
            Phase::KiteHold { next, pendant } => {
                ensure(robber == pendant, "kite.cl1.stay", || {
                    format!("robber left the pendant {pendant} for {robber}")
                })?;
                self.position_entry(next, cops, robber)
            }
            Phase::KiteM1 { paw } => {
                let p = self.part(paw)?;
                ensure(p.b(1, 4).contains(robber), "kite.r-in-B14", || {
                    format!("robber at {robber} in {}", p.cell_name(robber))
                })?;
                self.go(cops, [p.v(3), p.v(1)], "kite.m1", Phase::KiteM2 { paw },
                    "kite: cops to v3, v1")
            }
            Phase::KiteM2 { paw } => {
                let p = self.part(paw)?;
                ensure(p.a(2).contains(robber), "kite.r-in-A2", || {
                    format!("robber at {robber} in {}", p.cell_name(robber))
                })?;
                self.doom(cops, [p.v(2), p.v(1)], "kite.final", "kite: cops to v2, v1")
            }

            // ---- without kite ----
            Phase::WkStart => {
                let Mode::WithoutKite { paw } = self.mode else { unreachable!() };
                let p = self.part(paw)?;
                if p.x().contains(robber) {
                    return self.position_entry(paw, cops, robber);
                }
                if p.a(2).contains(robber) {
                    return self.pendant_entry([robber, p.v(2), p.v(3), p.v(4)], cops, robber);
                }
                ensure(robber == p.v(1), "without-kite.placement", || {
                    format!("robber placed at {robber} in {}", p.cell_name(robber))
                })?;
                self.pendant_entry(paw, cops, robber)
            }
            Phase::WkCl0 { paw } => {
                let p = self.part(paw)?;
                ensure(p.b(1, 4).contains(robber), "without-kite.cl0.r-in-B14", || {
                    format!("robber at {robber} in {}", p.cell_name(robber))
                })?;
                self.doom(cops, [p.v(2), p.v(1)], "without-kite.cl0", "without kite: cops to v2, v1")
            }
            Phase::WkM { paw } => {
                let p = self.part(paw)?;
                let r1 = robber;
                ensure(p.b(1, 3).contains(r1), "without-kite.r1-in-B13", || {
                    format!("robber at {r1} in {}", p.cell_name(r1))
                })?;
                min_of(p.t(3) - n(r1), "without-kite.t", "T3 minus N(r1)")?;
                self.kite_entry([r1, p.v(3), p.v(2), p.v(4)], cops, r1)
            }
        }
    }

    /// Robber on the pendant `v1`, cops on the rim, no co-banner or
    /// butterfly anywhere.
    fn pendant_entry(&mut self, paw: Paw, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = self.g.clone();
        let n = |v: usize| g.neighbors(v);
        let p = self.part(paw)?;
        if !p.b(3, 4).is_empty() {
            return self.kite_entry(paw, cops, robber);
        }
        if p.a(3).is_empty() || p.a(4).is_empty() {
            let q = if p.a(3).is_empty() { p } else { p.swapped(&g) };
            return self.go(cops, [q.v(3), q.v(2)], "without-kite.cl0", Phase::WkCl0 { paw: q.paw },
                "without kite: A3 or A4 empty; cops to v3, v2");
        }
        if let Some(bs) = p.b(1, 3).iter().find(|&b| p.t(3).is_subset(n(b))) {
            return self.doom(cops, [bs, p.v(3)], "without-kite.cl1",
                "without kite: b* in B13 sees all of T3; cops to b*, v3");
        }
        self.go(cops, [p.v(2), p.v(4)], "without-kite.m", Phase::WkM { paw },
            "without kite: cops to v2, v4")
    }

    /// Robber on the pendant of a paw contained in an induced kite, cops
    /// on its rim.
    fn kite_entry(&mut self, paw: Paw, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = self.g.clone();
        let n = |v: usize| g.neighbors(v);
        let p = self.part(paw)?;
        let (v1, v2, v3, v4) = (p.v(1), p.v(2), p.v(3), p.v(4));
        ensure(robber == v1, "kite.entry", || format!("robber at {robber}, expected {v1}"))?;
        ensure(rim(cops, v3, v4), "kite.entry", || format!("cops at {cops:?}, expected {v3}, {v4}"))?;
        ensure(p.a(1).is_empty() && p.b(1, 2).is_empty(), "kite.a1-b12-empty", || {
            format!("A1 = {}, B12 = {}", p.a(1), p.b(1, 2))
        })?;
        let b = min_of(p.b(3, 4), "kite.b34", "B34")?;
        if let Some(a) = (p.a(3) | (p.b(2, 3) - n(b))).first() {
            return self.go(cops, [b, v4], "kite.cl1", Phase::KiteHold { next: [a, v3, b, v4], pendant: v1 },
                "kite: a in A3 ∪ (B23 \\ N(b)); cops to b, v4");
        }
        if let Some(a) = (p.a(4) | (p.b(2, 4) - n(b))).first() {
            return self.go(cops, [v3, b], "kite.cl1", Phase::KiteHold { next: [a, v4, b, v3], pendant: v1 },
                "kite: a in A4 ∪ (B24 \\ N(b)); cops to v3, b");
        }
        for a in p.a(2) {
            if let Some(b2) = (n(a) & p.b(3, 4)).first() {
                return self.position_entry([a, b2, v3, v4], cops, robber);
            }
        }
        self.go(cops, [v3, v2], "kite.m0", Phase::KiteM1 { paw }, "kite: cops to v3, v2")
    }

    /// Cops on the rim of `paw`, robber at distance 2 from it.
    fn position_entry(&mut self, paw: Paw, cops: &[usize], r: usize) -> Result<Decision, Contradiction> {
        let g = self.g.clone();
        let n = |v: usize| g.neighbors(v);
        let p = self.part(paw)?;
        ensure(rim(cops, p.v(3), p.v(4)), "position.entry", || {
            format!("cops at {cops:?}, expected {}, {}", p.v(3), p.v(4))
        })?;
        ensure(p.x().contains(r), "position.entry", || {
            format!("robber at {r} in {}, expected X", p.cell_name(r))
        })?;
        ensure(p.a(1).is_empty() && p.b(1, 2).is_empty(), "position.a1-b12-empty", || {
            format!("A1 = {}, B12 = {}", p.a(1), p.b(1, 2))
        })?;
        let nr = n(r);
        let b23 = nr & p.b(2, 3);
        let b24 = nr & p.b(2, 4);
        if !b23.is_empty() && !b24.is_empty() {
            if !p.t(3).is_empty() && !p.t(4).is_empty() {
                let b = b23.first().unwrap();
                return self.doom(cops, [b, p.v(3)], "position.cl1", "position: T3, T4 nonempty; cops to b, v3");
            }
            let q = if p.t(4).is_empty() { p } else { p.swapped(&g) };
            if let Some(c) = (nr & q.t(3)).first() {
                return self.doom(cops, [q.v(4), c], "position.cl2", "position: T4 empty, c in N(r)∩T3; cops to v4, c");
            }
            if !q.b(1, 3).is_empty() || !q.b(1, 4).is_empty() {
                let s = if !q.b(1, 3).is_empty() { q } else { q.swapped(&g) };
                let b1 = s.b(1, 3).first().unwrap();
                return self.go(cops, [s.v(3), s.v(2)], "position.cl3", Phase::PosCl3Hold { paw: s.paw, b1 },
                    "position: B13 or B14 nonempty; cops to v3, v2");
            }
            let b = (nr & q.b(2, 3)).first().unwrap();
            return match (nr & q.t(2)).first() {
                None => self.doom(cops, [b, q.v(2)], "position.cl4.no-t2", "position: cops to b, v2"),
                Some(c1) => self.go(cops, [c1, q.v(4)], "position.cl4", Phase::PosCl4T2 { paw: q.paw, c1 },
                    "position: c1 in N(r)∩T2; cops to c1, v4"),
            };
        }
        if b23.is_empty() && b24.is_empty() {
            return self.go(cops, [p.v(2), p.v(4)], "position.cl5", Phase::PosCl5a { paw },
                "position: N(r) misses B23 and B24; cops to v2, v4");
        }
        let q = if b23.is_empty() { p } else { p.swapped(&g) };
        let b = (nr & q.b(2, 4)).first().unwrap();
        self.doom(cops, [q.v(4), b], "position.final", "position: one of N(r)∩B23, N(r)∩B24 empty; cops to v4, b")
    }
}

fn rim(cops: &[usize], a: usize, b: usize) -> bool {
    (cops[0] == a && cops[1] == b) || (cops[0] == b && cops[1] == a)
}

impl Strategy for P5K4 {
    fn name(&self) -> &str {
        match self.mode {
            Mode::CoBanner { .. } => "p5k4/co-banner",
            Mode::Butterfly { .. } => "p5k4/butterfly",
            Mode::WithoutKite { .. } => "p5k4/without-kite",
        }
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        let (cops, label) = match self.mode {
            Mode::CoBanner { paw, .. } => ([paw[0], paw[1]], "co-banner: cops on v1, v2"),
            Mode::Butterfly { paw, .. } => ([paw[2], paw[3]], "butterfly: cops on v3, v4"),
            Mode::WithoutKite { paw } => ([paw[2], paw[3]], "without kite: cops on v3, v4"),
        };
        Ok(Decision::new(cops.to_vec(), label))
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

pub fn strategy_p5k4(g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
    guard(g, &GraphClass::p5_and(PatternId::K4))?;
    Ok(p5k4_unchecked(g))
}

pub(crate) fn p5k4_unchecked(g: &Graph) -> Box<dyn Strategy> {
    if is_paw_free(g) {
        return paw_free_unchecked(g);
    }
    let mode = P5K4::choose_mode(g).expect("a graph with a paw has an anchor paw");
    Box::new(P5K4::with_mode(g, mode))
}

