use proptest::prelude::*;

use copnumlab::campaign::play_vs_optimal;
use copnumlab::corpus::{canonical_form, connected_up_to, random_graph};
use copnumlab::game::{cop_number, is_dismantlable, solve};
use copnumlab::patterns::{find_induced, PatternId};
use copnumlab::strategies::{audit, find_reduction, select_strategy, ReductionMode, StrategyId};
use copnumlab::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.3f64..1.0, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(n, p, seed))
        .prop_filter("connected", Graph::is_connected)
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(30)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in permuted(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn induced_copies_are_induced((g, pat) in (graph(9), 0..PatternId::ALL.len())) {
        let p = PatternId::ALL[pat];
        if let Some(e) = find_induced(&g, p.graph()) {
            let h = p.graph();
            for i in 0..h.n() {
                for j in 0..h.n() {
                    if i != j {
                        prop_assert_eq!(h.has_edge(i, j), g.has_edge(e.map[i], e.map[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn reductions_shrink_and_retract(g in connected(2, 12), diamond in any::<bool>()) {
        let mode = if diamond { ReductionMode::Diamond } else { ReductionMode::TwoK1K2 };
        if let Some(r) = find_reduction(&g, mode) {
            prop_assert!(r.image().len() < g.n());
            for (u, v) in g.edges() {
                let (a, b) = (r.apply(u), r.apply(v));
                prop_assert!(a == b || g.has_edge(a, b));
            }
            for v in r.image() {
                prop_assert_eq!(r.apply(v), v);
            }
            prop_assert!(r.image_graph().is_connected());
        }
    }

    #[test]
    fn dismantlable_iff_one_cop(g in connected(1, 9)) {
        prop_assert_eq!(is_dismantlable(&g), solve(&g, 1).unwrap().cops_win());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Larger graphs than the exhaustive corpus; dense ones, where P5-free
    /// graphs are common.
    #[test]
    fn strategies_capture_beyond_corpus(g in connected(9, 12)) {
        for id in StrategyId::ALL {
            if id.class().contains(&g) {
                let t = play_vs_optimal(&g, id).map_err(TestCaseError::fail)?;
                prop_assert!(t.outcome.is_capture(), "{} on {}: {}", id, g.to_graph6(), t.outcome);
            }
        }
        if let Some((id, _)) = select_strategy(&g) {
            prop_assert!(cop_number(&g, 2).unwrap().total.at_most(2), "{} selected", id);
        }
    }
}

/// A corpus member of the class with vertices copied as false twins; P5
/// and K4 have no false twins, so the copies stay (P5, K4)-free.
fn p5k4_blowup() -> impl Strategy<Value = Graph> {
    let base: Vec<Graph> = connected_up_to(8)
        .unwrap()
        .into_iter()
        .filter(|g| g.n() >= 4 && StrategyId::P5K4.class().contains(g))
        .cloned()
        .collect();
    (prop::sample::select(base), prop::collection::vec(any::<prop::sample::Index>(), 1..6)).prop_map(|(mut g, picks)| {
        for i in picks {
            let v = i.index(g.n());
            let mut rows = g.rows().to_vec();
            let nv = rows[v];
            let w = rows.len();
            for u in g.neighbors(v) {
                rows[u] |= 1 << w;
            }
            rows.push(nv);
            g = Graph::from_rows(rows).unwrap();
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn p5k4_captures_on_blowups(g in p5k4_blowup()) {
        prop_assert!(StrategyId::P5K4.class().contains(&g));
        let t = play_vs_optimal(&g, StrategyId::P5K4).map_err(TestCaseError::fail)?;
        prop_assert!(t.outcome.is_capture(), "{}: {}", g.to_graph6(), t.outcome);
        let s = StrategyId::P5K4.build(&g).unwrap();
        let r = audit(&g, s.as_ref(), 4 * g.n());
        prop_assert!(r.is_ok(), "{}: {:?}", g.to_graph6(), r.err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn selected_strategy_beats_every_robber(g in connected(9, 10)) {
        if let Some((id, s)) = select_strategy(&g) {
            let r = audit(&g, s.as_ref(), 4 * g.n());
            prop_assert!(r.is_ok(), "{} on {}: {:?}", id, g.to_graph6(), r.err());
        }
    }
}
