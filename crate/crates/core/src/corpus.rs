//! Test graphs: exhaustive enumeration up to isomorphism, trees, seeded
//! random graphs, class filters, and plain-text graph6 corpus files.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::patterns::GraphClass;

/// Largest `n` for exhaustive canonical labelling.
pub const CANONICAL_MAX: usize = 8;
/// Largest `n` for [`enumerate_trees`].
pub const TREE_MAX: usize = 12;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("n = {n} is outside 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: String,
        line: usize,
        source: GraphError,
    },
    #[error("{path}:{line}: {message}")]
    Invalid {
        path: String,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// The graph6 string that is least over all relabellings; equal exactly
/// for isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(pub String);

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Column `j` of the upper triangle for `v` placed after `order`, first row
/// in the most significant bit.
fn column(g: &Graph, order: &[usize], v: usize) -> u64 {
    order
        .iter()
        .fold(0, |acc, &u| acc << 1 | g.has_edge(u, v) as u64)
}

/// A vertex order whose graph6 string is least. The string is read column
/// by column, so position `j` only affects column `j`: it suffices to keep,
/// level by level, the partial orders whose columns so far are least.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>, CorpusError> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return Err(CorpusError::OutOfRange { n, max: CANONICAL_MAX });
    }
    let mut level: Vec<(Vec<usize>, VertexSet)> = vec![(Vec::new(), VertexSet::EMPTY)];
    for _ in 0..n {
        let mut best = u64::MAX;
        let mut next = Vec::new();
        for (order, used) in &level {
            for v in g.vertices() - *used {
                let c = column(g, order, v);
                if c < best {
                    best = c;
                    next.clear();
                }
                if c == best {
                    let mut o = order.clone();
                    o.push(v);
                    next.push((o, used.with(v)));
                }
            }
        }
        level = next;
    }
    Ok(level.swap_remove(0).0)
}

/// `g` relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CorpusError> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CorpusError> {
    Ok(CanonicalForm(canonical_graph(g)?.to_graph6()))
}

/// Every connected graph on `n` vertices, once per isomorphism class, in
/// canonical labelling and sorted by canonical form.
pub fn enumerate_connected(n: usize) -> Result<&'static [Graph], CorpusError> {
    static LEVELS: [OnceLock<Vec<Graph>>; CANONICAL_MAX + 1] = [const { OnceLock::new() }; CANONICAL_MAX + 1];
    if n == 0 || n > CANONICAL_MAX {
        return Err(CorpusError::OutOfRange { n, max: CANONICAL_MAX });
    }
    Ok(LEVELS[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1).unwrap()];
        }
        let parents = enumerate_connected(n - 1).expect("smaller n is in range");
        let mut found: Vec<(CanonicalForm, Graph)> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (1u64..1 << (n - 1)).map(move |mask| {
                    let mut rows: Vec<u64> = p.rows().to_vec();
                    for (u, row) in rows.iter_mut().enumerate() {
                        *row |= (mask >> u & 1) << (n - 1);
                    }
                    rows.push(mask);
                    let g = Graph::from_rows(rows).expect("extension is simple");
                    let c = canonical_graph(&g).expect("n in range");
                    (CanonicalForm(c.to_graph6()), c)
                })
            })
            .collect();
        found.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        found.dedup_by(|a, b| a.0 == b.0);
        found.into_iter().map(|(_, g)| g).collect()
    }))
}

/// All connected graphs on `1..=n_max` vertices.
pub fn connected_up_to(n_max: usize) -> Result<Vec<&'static Graph>, CorpusError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_connected(n)?.iter());
    }
    Ok(out)
}

/// Code of the subtree at `v` (parent `p`): `(` children sorted `)`.
fn ahu(g: &Graph, v: usize, p: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&w| Some(w) != p)
        .map(|w| ahu(g, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of a tree, rooted at its centre (the least code over
/// the one or two centres).
pub fn tree_code(g: &Graph) -> String {
    let mut left = g.vertices();
    while left.len() > 2 {
        let leaves: VertexSet = left
            .iter()
            .filter(|&v| (g.neighbors(v) & left).len() <= 1)
            .collect();
        left -= leaves;
    }
    left.iter().map(|c| ahu(g, c, None)).min().unwrap_or_default()
}

/// Every tree on `n` vertices up to isomorphism, grown leaf by leaf.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n == 0 || n > TREE_MAX {
        return Err(CorpusError::OutOfRange { n, max: TREE_MAX });
    }
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let mut rows = t.rows().to_vec();
                rows[v] |= 1 << (m - 1);
                rows.push(1 << v);
                let g = Graph::from_rows(rows).expect("leaf extension is simple");
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// `G(n, p)` from a seeded xoshiro256++ stream: pairs `i < j` in order of
/// `i` then `j`, each an edge iff the next uniform `f64` is below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n within range")
}

/// Keeps the connected graphs in `class`.
pub fn filter_class<'a, I>(graphs: I, class: &'a GraphClass) -> impl Iterator<Item = I::Item> + 'a
where
    I: IntoIterator + 'a,
    I::Item: AsRef<Graph>,
{
    graphs.into_iter().filter(move |g| {
        let g = g.as_ref();
        g.n() > 0 && g.is_connected() && class.contains(g)
    })
}

impl AsRef<Graph> for Graph {
    fn as_ref(&self) -> &Graph {
        self
    }
}

/// A named list of graph6 strings with `# key=value` header lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub name: String,
    /// Label of the class every entry belongs to, if any.
    pub class: Option<String>,
    pub meta: BTreeMap<String, String>,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    pub fn new(name: &str, class: Option<&GraphClass>, graphs: Vec<Graph>) -> Corpus {
        Corpus {
            name: name.to_string(),
            class: class.map(GraphClass::label),
            meta: BTreeMap::new(),
            graphs,
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Corpus {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# name={}\n", self.name);
        if let Some(c) = &self.class {
            out += &format!("# class={c}\n");
        }
        out += &format!("# count={}\n", self.graphs.len());
        for (k, v) in &self.meta {
            out += &format!("# {k}={v}\n");
        }
        for g in &self.graphs {
            out += &g.to_graph6();
            out.push('\n');
        }
        out
    }

    /// Parses corpus text; every entry must be connected and, if `class` is
    /// given, belong to it.
    pub fn parse(text: &str, origin: &str, class: Option<&GraphClass>) -> Result<Corpus, CorpusError> {
        let mut c = Corpus {
            name: String::new(),
            class: None,
            meta: BTreeMap::new(),
            graphs: Vec::new(),
        };
        let mut declared: Option<(usize, usize)> = None;
        let invalid = |line: usize, message: String| CorpusError::Invalid {
            path: origin.to_string(),
            line,
            message,
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(h) = line.strip_prefix('#') {
                let Some((k, v)) = h.trim().split_once('=') else {
                    continue;
                };
                match k.trim() {
                    "name" => c.name = v.trim().to_string(),
                    "class" => c.class = Some(v.trim().to_string()),
                    "count" => {
                        let n = v.trim().parse().map_err(|_| invalid(i + 1, format!("bad count {v:?}")))?;
                        declared = Some((i + 1, n));
                    }
                    k => {
                        c.meta.insert(k.to_string(), v.trim().to_string());
                    }
                }
                continue;
            }
            let g = Graph::from_graph6(line).map_err(|source| CorpusError::Parse {
                path: origin.to_string(),
                line: i + 1,
                source,
            })?;
            if !g.is_connected() {
                return Err(invalid(i + 1, format!("{line} is disconnected")));
            }
            if let Some(cl) = class {
                if let Err(w) = cl.check(&g) {
                    return Err(invalid(i + 1, format!("{line} is not {}: {w}", cl.label())));
                }
            }
            c.graphs.push(g);
        }
        if let Some((line, n)) = declared {
            if n != c.graphs.len() {
                return Err(invalid(line, format!("count={n} but {} entries", c.graphs.len())));
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path, class: Option<&GraphClass>) -> Result<Corpus, CorpusError> {
        let text = fs::read_to_string(path)?;
        Corpus::parse(&text, &path.display().to_string(), class)
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn canonical_examples() {
        let p4 = path(4);
        let q = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&q).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_ne!(canonical_form(&cycle(4)).unwrap(), canonical_form(&two_k2).unwrap());
        for g in [petersen().induced(VertexSet::full(8)), complete(8), path(7)] {
            let cf = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&Graph::from_graph6(&cf.0).unwrap()).unwrap(), cf);
        }
        assert!(canonical_form(&petersen()).is_err());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn trees() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn random_extremes() {
        assert_eq!(random_graph(10, 0.0, 3).edge_count(), 0);
        assert_eq!(random_graph(10, 1.0, 3), complete(10));
        assert_eq!(random_graph(12, 0.4, 9), random_graph(12, 0.4, 9));
    }

    #[test]
    fn corpus_text_round_trip() {
        let c = Corpus::new("c", None, vec![cycle(5), path(3)]).with_meta("seed", 7);
        let back = Corpus::parse(&c.to_text(), "mem", None).unwrap();
        assert_eq!(back, c);
        let bad = "# name=x\nB?\n";
        assert!(matches!(Corpus::parse(bad, "mem", None), Err(CorpusError::Invalid { line: 2, .. })));
    }
}
