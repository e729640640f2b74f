//! The enumerators checked against counts and sets computed another way.

use std::collections::{BTreeSet, HashSet};
use std::path::Path;

use copnumlab::corpus::*;
use copnumlab::graph::families::*;
use copnumlab::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
    heap(k - 1, p, out);
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Edge mask as a bit string over `pairs`, minimised over every relabelling.
fn brute_key(n: usize, mask: u32, perms: &[Vec<usize>], idx: &[Vec<usize>]) -> u32 {
    let ps = pairs(n);
    perms
        .iter()
        .map(|p| {
            ps.iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .fold(0u32, |acc, (_, &(i, j))| acc | 1 << idx[p[i]][p[j]])
        })
        .min()
        .unwrap()
}

fn graph_of(n: usize, mask: u32) -> Graph {
    let e: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(b, _)| mask >> b & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &e).unwrap()
}

#[test]
fn labelled_brute_force_small() {
    let labelled_connected = [1usize, 1, 4, 38, 728, 26704];
    for n in 1..=6 {
        let perms = permutations(n);
        let mut idx = vec![vec![0; n]; n];
        for (b, (i, j)) in pairs(n).into_iter().enumerate() {
            idx[i][j] = b;
            idx[j][i] = b;
        }
        let mut labelled = 0;
        let mut classes: BTreeSet<u32> = BTreeSet::new();
        for mask in 0..1u32 << pairs(n).len() {
            if graph_of(n, mask).is_connected() {
                labelled += 1;
                classes.insert(brute_key(n, mask, &perms, &idx));
            }
        }
        assert_eq!(labelled, labelled_connected[n - 1], "n = {n}");
        let ours = enumerate_connected(n).unwrap();
        assert_eq!(ours.len(), classes.len(), "n = {n}");
        let brute: HashSet<CanonicalForm> = classes
            .iter()
            .map(|&m| canonical_form(&graph_of(n, m)).unwrap())
            .collect();
        let theirs: HashSet<CanonicalForm> = ours.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(brute, theirs, "n = {n}");
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn partitions(n: u64, max: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Unlabelled graphs on `n` vertices by averaging `2^(pair orbits)` over
/// the cycle types of the symmetric group.
fn burnside(n: u64) -> u128 {
    let mut total = 0u128;
    for lambda in partitions(n, n) {
        let mut class_size = factorial(n);
        let mut mult = std::collections::HashMap::new();
        for &l in &lambda {
            class_size /= l as u128;
            *mult.entry(l).or_insert(0u64) += 1;
        }
        for &m in mult.values() {
            class_size /= factorial(m);
        }
        let mut orbits: u64 = lambda.iter().map(|&l| l / 2).sum();
        for i in 0..lambda.len() {
            for j in i + 1..lambda.len() {
                orbits += gcd(lambda[i], lambda[j]);
            }
        }
        total += class_size << orbits;
    }
    total / factorial(n)
}

/// Connected counts from all-graph counts by inverting the Euler transform.
fn connected_counts(all: &[u128]) -> Vec<u128> {
    let n = all.len() - 1;
    let mut c = vec![0i128; n + 1];
    let mut a = vec![0i128; n + 1];
    for k in 1..=n {
        let s: i128 = (1..k).map(|i| c[i] * all[k - i] as i128).sum();
        c[k] = k as i128 * all[k] as i128 - s;
        let d: i128 = (1..k).filter(|d| k % d == 0).map(|d| d as i128 * a[d]).sum();
        a[k] = (c[k] - d) / k as i128;
    }
    a.into_iter().skip(1).map(|x| x as u128).collect()
}

#[test]
fn burnside_counts() {
    let all: Vec<u128> = (0..=CANONICAL_MAX as u64).map(burnside).collect();
    assert_eq!(&all[..6], &[1, 1, 2, 4, 11, 34]);
    let conn = connected_counts(&all);
    for n in 1..=CANONICAL_MAX {
        assert_eq!(enumerate_connected(n).unwrap().len() as u128, conn[n - 1], "n = {n}");
    }
}

#[test]
fn enumeration_is_duplicate_free_and_connected() {
    for n in 1..=CANONICAL_MAX {
        let gs = enumerate_connected(n).unwrap();
        let forms: HashSet<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), gs.len());
        assert!(gs.iter().all(|g| g.n() == n && g.is_connected()));
    }
    assert!(enumerate_connected(CANONICAL_MAX + 1).is_err());
}

/// Labelled trees from Prüfer sequences.
fn prufer_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![path(n)];
    }
    let mut out = Vec::new();
    let total = n.pow(n as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::new();
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut deg = vec![1; n];
        for &s in &seq {
            deg[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
            edges.push((leaf, s));
            deg[leaf] -= 1;
            deg[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Graph::from_edges(n, &edges).unwrap());
    }
    out
}

#[test]
fn trees_match_prufer() {
    for n in 1..=7 {
        let brute: HashSet<String> = prufer_trees(n).iter().map(tree_code).collect();
        let ours: Vec<Graph> = enumerate_trees(n).unwrap();
        let codes: HashSet<String> = ours.iter().map(tree_code).collect();
        assert_eq!(codes.len(), ours.len());
        assert_eq!(codes, brute, "n = {n}");
    }
    let counts: Vec<usize> = (1..=TREE_MAX).map(|n| enumerate_trees(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
}

#[test]
fn tree_codes_agree_with_canonical_forms() {
    for n in 1..=8 {
        let trees = enumerate_trees(n).unwrap();
        let forms: HashSet<_> = trees.iter().map(|t| canonical_form(t).unwrap()).collect();
        assert_eq!(forms.len(), trees.len());
        for t in &trees {
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
        }
    }
}

#[test]
fn committed_files_match() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpora");
    for n in 1..=CANONICAL_MAX {
        let c = Corpus::load(&dir.join(format!("connected-n{n}.g6")), None).unwrap();
        let fresh: Vec<String> = enumerate_connected(n).unwrap().iter().map(Graph::to_graph6).collect();
        let stored: Vec<String> = c.graphs.iter().map(Graph::to_graph6).collect();
        assert_eq!(stored, fresh, "n = {n}");
        assert_eq!(c.name, format!("connected-n{n}"));
    }
    for n in 1..=10 {
        let c = Corpus::load(&dir.join(format!("trees-n{n}.g6")), None).unwrap();
        let fresh: Vec<String> = enumerate_trees(n).unwrap().iter().map(Graph::to_graph6).collect();
        let stored: Vec<String> = c.graphs.iter().map(Graph::to_graph6).collect();
        assert_eq!(stored, fresh, "n = {n}");
    }
}

#[test]
fn corpus_text_round_trip() {
    let c = Corpus::new("c", None, enumerate_connected(5).unwrap().to_vec()).with_meta("n", 5);
    let back = Corpus::parse(&c.to_text(), "mem", None).unwrap();
    assert_eq!(back, c);
    assert!(Corpus::parse("# name=x\nnot graph6 !!\n", "mem", None).is_err());
    assert!(Corpus::parse("# count=2\nBw\n", "mem", None).is_err());
    assert!(Corpus::parse("# count=1\nBw\n", "mem", None).is_ok());
}

#[test]
fn random_graphs_are_seeded() {
    assert_eq!(random_graph(12, 0.4, 7), random_graph(12, 0.4, 7));
    assert_ne!(random_graph(12, 0.4, 7), random_graph(12, 0.4, 8));
    assert_eq!(random_graph(9, 0.0, 1).edge_count(), 0);
    assert_eq!(random_graph(9, 1.0, 1), complete(9));
    // edge density tracks p
    let m: usize = (0..200).map(|s| random_graph(10, 0.3, s).edge_count()).sum();
    let mean = m as f64 / 200.0 / 45.0;
    assert!((mean - 0.3).abs() < 0.03, "{mean}");
}
