//! Small forbidden patterns, induced-subgraph detection, class membership,
//! and the partition of a graph around an induced paw.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// The fixed catalogue of small patterns.
///
/// Vertex orders are chosen so that, for the paw-containing patterns, the
/// first four vertices are the paw in role order: pendant, hub, rim, rim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PatternId {
    P3P1,
    P4,
    P5,
    C3,
    C4,
    C5,
    Claw,
    Paw,
    Diamond,
    K4,
    Kite,
    Banner,
    CoBanner,
    Butterfly,
    K3K1,
    TwoK1K2,
    TwoK2,
    K1K2,
}

impl PatternId {
    pub const ALL: [PatternId; 18] = [
        PatternId::P3P1,
        PatternId::P4,
        PatternId::P5,
        PatternId::C3,
        PatternId::C4,
        PatternId::C5,
        PatternId::Claw,
        PatternId::Paw,
        PatternId::Diamond,
        PatternId::K4,
        PatternId::Kite,
        PatternId::Banner,
        PatternId::CoBanner,
        PatternId::Butterfly,
        PatternId::K3K1,
        PatternId::TwoK1K2,
        PatternId::TwoK2,
        PatternId::K1K2,
    ];

    /// The ten graphs on four vertices with at least one edge.
    pub const FOUR_VERTEX_WITH_EDGE: [PatternId; 10] = [
        PatternId::TwoK1K2,
        PatternId::TwoK2,
        PatternId::P3P1,
        PatternId::K3K1,
        PatternId::P4,
        PatternId::Claw,
        PatternId::C4,
        PatternId::Paw,
        PatternId::Diamond,
        PatternId::K4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternId::P3P1 => "P3uP1",
            PatternId::P4 => "P4",
            PatternId::P5 => "P5",
            PatternId::C3 => "C3",
            PatternId::C4 => "C4",
            PatternId::C5 => "C5",
            PatternId::Claw => "claw",
            PatternId::Paw => "paw",
            PatternId::Diamond => "diamond",
            PatternId::K4 => "K4",
            PatternId::Kite => "kite",
            PatternId::Banner => "banner",
            PatternId::CoBanner => "co-banner",
            PatternId::Butterfly => "butterfly",
            PatternId::K3K1 => "K3uK1",
            PatternId::TwoK1K2 => "2K1uK2",
            PatternId::TwoK2 => "2K2",
            PatternId::K1K2 => "K1uK2",
        }
    }

    pub fn from_name(name: &str) -> Option<PatternId> {
        let norm = name.to_ascii_lowercase().replace(['∪', ' ', '_'], "u");
        PatternId::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == norm)
    }

    fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            PatternId::P3P1 => (4, &[(0, 1), (1, 2)]),
            PatternId::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            PatternId::P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            PatternId::C3 => (3, &[(0, 1), (1, 2), (0, 2)]),
            PatternId::C4 => (4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
            PatternId::C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
            PatternId::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            PatternId::Paw => (4, &[(0, 1), (1, 2), (2, 3), (1, 3)]),
            PatternId::Diamond => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            PatternId::K4 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            // paw plus a vertex on both rim vertices
            PatternId::Kite => (5, &[(0, 1), (1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]),
            // 4-cycle 0-1-2-3 with a pendant on 0
            PatternId::Banner => (5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
            // paw plus a pendant on the paw's pendant
            PatternId::CoBanner => (5, &[(0, 1), (1, 2), (2, 3), (1, 3), (0, 4)]),
            // paw plus a vertex on the pendant and the hub
            PatternId::Butterfly => (5, &[(0, 1), (1, 2), (2, 3), (1, 3), (0, 4), (1, 4)]),
            PatternId::K3K1 => (4, &[(0, 1), (1, 2), (0, 2)]),
            PatternId::TwoK1K2 => (4, &[(0, 1)]),
            PatternId::TwoK2 => (4, &[(0, 1), (2, 3)]),
            PatternId::K1K2 => (3, &[(0, 1)]),
        }
    }

    pub fn graph(self) -> &'static Graph {
        static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
        let all = CATALOG.get_or_init(|| {
            PatternId::ALL
                .iter()
                .map(|p| {
                    let (n, e) = p.edges();
                    Graph::from_edges(n, e).expect("catalogue patterns are valid")
                })
                .collect()
        });
        &all[self as usize]
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One `name<TAB>graph6` line per catalogue pattern.
pub fn catalog_dump() -> String {
    PatternId::ALL
        .iter()
        .map(|p| format!("{}\t{}\n", p.name(), p.graph().to_graph6()))
        .collect()
}

/// An injective map from pattern vertices to host vertices that preserves
/// adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.map;
        m.len() == pattern.n()
            && m.iter().all(|&v| v < host.n())
            && self.image().len() == m.len()
            && (0..m.len()).all(|a| {
                (0..a).all(|b| pattern.has_edge(a, b) == host.has_edge(m[a], m[b]))
            })
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Backtracking search over ordered host tuples; visits embeddings in
/// lexicographic order of `map` and stops when `visit` returns `false`.
fn search(host: &Graph, pattern: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let k = pattern.n();
    if k > host.n() {
        return;
    }
    let mut map = Vec::with_capacity(k);
    fn go(
        host: &Graph,
        pattern: &Graph,
        map: &mut Vec<usize>,
        used: VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let a = map.len();
        if a == pattern.n() {
            return visit(map);
        }
        // candidates must be adjacent to the images of earlier pattern
        // neighbours and non-adjacent to the images of earlier non-neighbours
        let mut cand = host.vertices() - used;
        for (b, &hb) in map.iter().enumerate() {
            if pattern.has_edge(a, b) {
                cand &= host.neighbors(hb);
            } else {
                cand -= host.neighbors(hb);
            }
        }
        let need = pattern.degree(a);
        for v in cand {
            if host.degree(v) < need {
                continue;
            }
            map.push(v);
            let go_on = go(host, pattern, map, used.with(v), visit);
            map.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    go(host, pattern, &mut map, VertexSet::EMPTY, visit);
}

/// The lexicographically least induced embedding of `pattern` in `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    search(host, pattern, &mut |m| {
        found = Some(Embedding { map: m.to_vec() });
        false
    });
    debug_assert!(found.as_ref().is_none_or(|e| e.is_induced(host, pattern)));
    found
}

/// Every induced embedding, in lexicographic order.
pub fn induced_embeddings(host: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let mut all = Vec::new();
    search(host, pattern, &mut |m| {
        all.push(Embedding { map: m.to_vec() });
        true
    });
    all
}

pub fn contains(host: &Graph, pattern: PatternId) -> bool {
    find_induced(host, pattern.graph()).is_some()
}

/// A certificate that a graph is not free of some pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pattern: PatternId,
    pub embedding: Embedding,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "induced {} at {}", self.pattern, self.embedding)
    }
}

/// `Ok` when `host` contains none of `patterns`; otherwise the first
/// witness in the order the patterns are listed.
pub fn check_free(host: &Graph, patterns: &[PatternId]) -> Result<(), Witness> {
    for &p in patterns {
        if let Some(embedding) = find_induced(host, p.graph()) {
            return Err(Witness {
                pattern: p,
                embedding,
            });
        }
    }
    Ok(())
}

pub fn is_free(host: &Graph, patterns: &[PatternId]) -> bool {
    check_free(host, patterns).is_ok()
}

/// A hereditary class given by a list of forbidden induced patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphClass {
    pub forbidden: Vec<PatternId>,
}

impl GraphClass {
    pub fn free_of(forbidden: &[PatternId]) -> Self {
        GraphClass {
            forbidden: forbidden.to_vec(),
        }
    }

    /// `(P5, H)`-free.
    pub fn p5_and(h: PatternId) -> Self {
        if h == PatternId::P5 {
            Self::free_of(&[PatternId::P5])
        } else {
            Self::free_of(&[PatternId::P5, h])
        }
    }

    pub fn label(&self) -> String {
        match self.forbidden.as_slice() {
            [one] => format!("{one}-free"),
            many => {
                let names: Vec<_> = many.iter().map(|p| p.name()).collect();
                format!("({})-free", names.join(","))
            }
        }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        is_free(g, &self.forbidden)
    }

    pub fn check(&self, g: &Graph) -> Result<(), Witness> {
        check_free(g, &self.forbidden)
    }

    /// Every class reported by [`classify`].
    pub fn verified_classes() -> Vec<GraphClass> {
        let mut out: Vec<_> = PatternId::ALL
            .iter()
            .filter(|&&p| p != PatternId::P5)
            .map(|&p| GraphClass::p5_and(p))
            .collect();
        out.push(GraphClass::free_of(&[PatternId::P5]));
        for p in [PatternId::P4, PatternId::TwoK2, PatternId::P3P1, PatternId::K1K2] {
            out.push(GraphClass::free_of(&[p]));
        }
        out
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Membership of one graph in one class, with a witness when it fails.
#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    pub class: String,
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Membership in every class of [`GraphClass::verified_classes`].
pub fn classify_detailed(g: &Graph) -> Vec<Membership> {
    GraphClass::verified_classes()
        .into_iter()
        .map(|c| {
            let r = c.check(g);
            Membership {
                class: c.label(),
                member: r.is_ok(),
                witness: r.err(),
            }
        })
        .collect()
}

/// Labels of the classes `g` belongs to.
pub fn classify(g: &Graph) -> Vec<String> {
    classify_detailed(g)
        .into_iter()
        .filter(|m| m.member)
        .map(|m| m.class)
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("{0:?} is not an induced paw with roles (pendant, hub, rim, rim)")]
    NotAPaw([usize; 4]),
}

/// The partition of `V(G)` around an induced paw `P = {v1, v2, v3, v4}` with
/// edges `v1v2, v2v3, v3v4, v2v4`.
///
/// Every vertex outside `P` lands in the cell indexed by the bit mask of its
/// neighbours in `P` (bit `i - 1` for `v_i`): mask 0 is `X`, singletons are
/// `A_i`, pairs `B_ij`, triples `T_i` (missing `v_i`), and the full mask is
/// `D`. Cell accessors take 1-based paw indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PawPartition {
    pub paw: [usize; 4],
    cells: [VertexSet; 16],
}

impl PawPartition {
    pub fn new(g: &Graph, paw: [usize; 4]) -> Result<PawPartition, PatternError> {
        let emb = Embedding { map: paw.to_vec() };
        if !emb.is_induced(g, PatternId::Paw.graph()) {
            return Err(PatternError::NotAPaw(paw));
        }
        let p: VertexSet = paw.iter().collect();
        let mut cells = [VertexSet::EMPTY; 16];
        for u in g.vertices() - p {
            let n = g.neighbors(u);
            let mask = (0..4).filter(|&i| n.contains(paw[i])).fold(0, |m, i| m | 1 << i);
            cells[mask].insert(u);
        }
        Ok(PawPartition { paw, cells })
    }

    /// The vertex `v_i`, 1-based.
    pub fn v(&self, i: usize) -> usize {
        self.paw[i - 1]
    }

    pub fn p(&self) -> VertexSet {
        self.paw.iter().collect()
    }

    pub fn a(&self, i: usize) -> VertexSet {
        self.cells[1 << (i - 1)]
    }

    pub fn b(&self, i: usize, j: usize) -> VertexSet {
        debug_assert!(i != j);
        self.cells[1 << (i - 1) | 1 << (j - 1)]
    }

    pub fn t(&self, i: usize) -> VertexSet {
        self.cells[15 ^ 1 << (i - 1)]
    }

    pub fn d(&self) -> VertexSet {
        self.cells[15]
    }

    pub fn x(&self) -> VertexSet {
        self.cells[0]
    }

    /// `N(P)`.
    pub fn neighborhood(&self) -> VertexSet {
        self.cells[1..].iter().fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    /// Cell by raw neighbour mask.
    pub fn cell(&self, mask: usize) -> VertexSet {
        self.cells[mask]
    }

    /// Human-readable name of the cell holding `u`.
    pub fn cell_name(&self, u: usize) -> String {
        if let Some(i) = self.paw.iter().position(|&p| p == u) {
            return format!("v{}", i + 1);
        }
        let mask = (0..16).find(|&m| self.cells[m].contains(u)).unwrap_or(0);
        let idx: Vec<usize> = (0..4).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        match idx.len() {
            0 => "X".into(),
            1 => format!("A{}", idx[0]),
            2 => format!("B{}{}", idx[0], idx[1]),
            3 => format!("T{}", (1..=4).find(|i| !idx.contains(i)).unwrap()),
            _ => "D".into(),
        }
    }

    /// The structure every paw has in a `(P5, K4)`-free graph: `T1` and
    /// `D` are empty; the attachments of `X` lie in `A2 ∪ B12 ∪ B23 ∪ B24 ∪
    /// T2 ∪ T3 ∪ T4`; each vertex of `N(P)` sees all or none of each
    /// component of `G[X]`; and every vertex of `X` is at distance 2 from
    /// `P`. Returns the first failing fact as `(label, detail)`.
    pub fn check_k4_free_structure(&self, g: &Graph) -> Result<(), (&'static str, String)> {
        if !self.t(1).is_empty() || !self.d().is_empty() {
            return Err(("t1-d-empty", format!("T1 = {}, D = {}", self.t(1), self.d())));
        }
        let x = self.x();
        let np = self.neighborhood();
        let allowed = self.a(2) | self.b(1, 2) | self.b(2, 3) | self.b(2, 4) | self.t(2) | self.t(3) | self.t(4);
        let attach = g.set_neighbors(x) & np;
        if !attach.is_subset(allowed) {
            let u = (attach - allowed).first().unwrap();
            return Err(("x-attachments", format!("{u} in {} sees X", self.cell_name(u))));
        }
        for h in g.components(x) {
            for v in np {
                let seen = g.neighbors(v) & h;
                if !seen.is_empty() && seen != h {
                    return Err(("x-components", format!("{v} sees part of the X-component {h}")));
                }
            }
        }
        if let Some(far) = x.iter().find(|&u| !g.neighbors(u).intersects(np)) {
            return Err(("x-distance-2", format!("{far} in X has no neighbour in N(P)")));
        }
        Ok(())
    }

    /// The same paw with the two rim vertices exchanged.
    pub fn swapped(&self, g: &Graph) -> PawPartition {
        let [a, b, c, d] = self.paw;
        PawPartition::new(g, [a, b, d, c]).expect("rim swap preserves the paw")
    }
}

/// Partition around the paw given by an embedding of the catalogue paw.
pub fn paw_partition(g: &Graph, paw: &Embedding) -> Result<PawPartition, PatternError> {
    let roles: [usize; 4] = paw
        .map
        .as_slice()
        .try_into()
        .map_err(|_| PatternError::NotAPaw([usize::MAX; 4]))?;
    PawPartition::new(g, roles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn catalogue_is_pairwise_non_isomorphic() {
        for (i, &p) in PatternId::ALL.iter().enumerate() {
            for &q in &PatternId::ALL[i + 1..] {
                let (g, h) = (p.graph(), q.graph());
                let iso = g.n() == h.n()
                    && g.edge_count() == h.edge_count()
                    && find_induced(g, h).is_some();
                assert!(!iso, "{p} and {q} are isomorphic");
            }
        }
    }

    #[test]
    fn find_induced_examples() {
        assert!(find_induced(&cycle(5), PatternId::P5.graph()).is_none());
        assert!(find_induced(&star(3), PatternId::C3.graph()).is_none());
        let kite = PatternId::Kite.graph();
        assert_eq!(
            find_induced(kite, PatternId::Paw.graph()).unwrap().map,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn is_free_examples() {
        use PatternId::*;
        let c5_free = [P5, K4, Diamond, Paw, C4, Claw, K3K1, TwoK1K2];
        assert!(is_free(&cycle(5), &c5_free));
        assert!(is_free(Paw.graph(), &[P3P1]));
        let w = check_free(Banner.graph(), &[C4]).unwrap_err();
        assert_eq!(w.pattern, C4);
        assert_eq!(w.embedding.image(), VertexSet::from_bits(0b1111));
    }

    #[test]
    fn classify_examples() {
        let c4 = classify(&cycle(4));
        for label in ["P4-free", "P3uP1-free", "2K2-free"] {
            assert!(c4.iter().any(|l| l == label), "C4 should be {label}");
        }
        let k4 = classify(&complete(4));
        assert!(k4.iter().any(|l| l == "(P5,C4)-free"));
        assert!(!k4.iter().any(|l| l == "(P5,K4)-free"));
        let petersen = classify(&petersen());
        assert!(!petersen.iter().any(|l| l.starts_with("(P5")));
        assert!(classify(&complete(1)).len() == GraphClass::verified_classes().len());
    }

    #[test]
    fn paw_partition_examples() {
        let cobanner = PatternId::CoBanner.graph();
        let part = PawPartition::new(cobanner, [0, 1, 2, 3]).unwrap();
        assert!(part.a(1).contains(4));
        let butterfly = PatternId::Butterfly.graph();
        let part = PawPartition::new(butterfly, [0, 1, 2, 3]).unwrap();
        assert!(part.b(1, 2).contains(4));
        let kite = PatternId::Kite.graph();
        let part = PawPartition::new(kite, [0, 1, 2, 3]).unwrap();
        assert!(part.b(3, 4).contains(4));
        assert_eq!(part.cell_name(4), "B34");
        assert_eq!(part.swapped(kite).b(3, 4), part.b(3, 4));
        assert!(PawPartition::new(kite, [1, 0, 2, 3]).is_err());
    }

    #[test]
    fn names_round_trip() {
        for p in PatternId::ALL {
            assert_eq!(PatternId::from_name(p.name()), Some(p));
        }
        assert_eq!(PatternId::from_name("K3∪K1"), Some(PatternId::K3K1));
        assert_eq!(catalog_dump().lines().count(), PatternId::ALL.len());
    }
}
