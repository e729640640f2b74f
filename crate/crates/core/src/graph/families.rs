//! Named graph families used by tests, examples, and the CLI.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("family construction is valid")
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// `C_n` for `n >= 3`: `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    build(n, &edges)
}

/// Complete multipartite graph with the given part sizes; parts are
/// consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j])
        .collect();
    build(n, &edges)
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

/// Wheel: hub 0 joined to a rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    build(rim + 1, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// The dodecahedron as a generalised Petersen-style drum: outer 5-cycle,
/// two middle rings forming a 10-cycle, inner 5-cycle.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        // outer pentagon 0..5
        edges.push((i, (i + 1) % 5));
        // spokes to the 10-cycle 5..15
        edges.push((i, 5 + 2 * i));
        // inner pentagon 15..20 attached to odd positions of the 10-cycle
        edges.push((15 + i, 15 + (i + 1) % 5));
        edges.push((5 + 2 * i + 1, 15 + i));
    }
    for i in 0..10 {
        edges.push((5 + i, 5 + (i + 1) % 10));
    }
    build(20, &edges)
}

/// Look up a family member by a short name such as `C5`, `P4`, `K3`,
/// `K2,2,2`, `star4`, `wheel5`, `petersen`, `dodecahedron`.
pub fn by_name(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "petersen" => return Some(petersen()),
        "dodecahedron" => return Some(dodecahedron()),
        _ => {}
    }
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = lower.strip_prefix("wheel") {
        return num(rest).filter(|&r| r >= 3).map(wheel);
    }
    if let Some(rest) = lower.strip_prefix("star") {
        return num(rest).map(star);
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if rest.contains(',') {
            let parts: Option<Vec<usize>> = rest.split(',').map(num).collect();
            return parts.map(|p| complete_multipartite(&p));
        }
        return num(rest).filter(|&k| k <= 64).map(complete);
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return num(rest).filter(|&k| (3..=64).contains(&k)).map(cycle);
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return num(rest).filter(|&k| (1..=64).contains(&k)).map(path);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_regularity() {
        let d = dodecahedron();
        assert_eq!((d.n(), d.edge_count()), (20, 30));
        assert!((0..20).all(|v| d.degree(v) == 3));
        assert!(d.is_connected());
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(complete_multipartite(&[2, 2, 2]).edge_count(), 12);
        assert_eq!(wheel(5).edge_count(), 10);
    }

    #[test]
    fn dodecahedron_has_girth_five() {
        let d = dodecahedron();
        for (u, v) in d.edges() {
            // no triangles
            assert!((d.neighbors(u) & d.neighbors(v)).is_empty());
        }
        for u in 0..20 {
            for w in 0..20 {
                if u != w && !d.has_edge(u, w) {
                    // no 4-cycles: at most one common neighbour
                    assert!((d.neighbors(u) & d.neighbors(w)).len() <= 1);
                }
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(by_name("C5"), Some(cycle(5)));
        assert_eq!(by_name("K2,2,2"), Some(complete_multipartite(&[2, 2, 2])));
        assert_eq!(by_name("wheel5"), Some(wheel(5)));
        assert!(by_name("C2").is_none());
        assert!(by_name("nonsense").is_none());
    }
}
