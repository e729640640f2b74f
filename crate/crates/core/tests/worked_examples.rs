//! Small hand-checked cases for each public operation.

use std::sync::Arc;

use copnumlab::game::{
    default_max_rounds, dismantle, is_dismantlable, run_game, solve, Contradiction, Decision,
    OptimalRobber, OracleStrategy, Outcome, Strategy,
};
use copnumlab::graph::families::*;
use copnumlab::graph::{Graph, VertexSet};
use copnumlab::patterns::{classify, find_induced, is_free, paw_partition, PatternId};
use copnumlab::strategies::*;

fn play(g: &Graph, s: &mut dyn Strategy) -> Outcome {
    let table = Arc::new(solve(g, s.cops()).unwrap());
    run_game(g, s, &mut OptimalRobber::new(table), default_max_rounds(g.n()))
        .unwrap()
        .outcome
}

fn captured(g: &Graph, mut s: Box<dyn Strategy>) -> usize {
    match play(g, s.as_mut()) {
        Outcome::CapturedAtRound(r) => r,
        o => panic!("{} on {}: {o}", s.name(), g.to_graph6()),
    }
}

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, e).unwrap()
}

#[test]
fn distances() {
    let p5 = path(5);
    assert_eq!(p5.distance(0, VertexSet::singleton(4)), Some(4));
    // co-banner: a1-v1-v2 with the triangle v2 v3 v4
    let cb = PatternId::CoBanner.graph();
    assert_eq!(cb.distance(4, [2, 3].iter().collect()), Some(3));
}

#[test]
fn graph6_small() {
    assert_eq!(complete(1).to_graph6(), "@");
    let c4 = cycle(4);
    assert_eq!(Graph::from_graph6(&c4.to_graph6()).unwrap(), c4);
}

#[test]
fn multipartite() {
    let parts = cycle(4).is_complete_multipartite().unwrap();
    assert_eq!(parts, vec![[0, 2].iter().collect(), [1, 3].iter().collect::<VertexSet>()]);
    assert!(path(4).is_complete_multipartite().is_none());
    // complete multipartite exactly when the complement is a disjoint union of cliques
    for g in [cycle(4), path(4), complete_multipartite(&[1, 2, 3]), cycle(5)] {
        let co = g.complement();
        let p3_free = find_induced(&co, path(3).as_ref()).is_none();
        assert_eq!(p3_free, g.is_complete_multipartite().is_some());
    }
}

#[test]
fn pattern_examples() {
    assert!(find_induced(&cycle(5), PatternId::P5.graph()).is_none());
    let kite = PatternId::Kite.graph();
    assert_eq!(find_induced(kite, PatternId::Paw.graph()).unwrap().map, vec![0, 1, 2, 3]);
    assert!(find_induced(&star(3), PatternId::C3.graph()).is_none());
    use PatternId::*;
    assert!(is_free(&cycle(5), &[P5, K4, Diamond, Paw, C4, Claw, K3K1, TwoK1K2]));
    assert!(is_free(Paw.graph(), &[P3P1]));
    assert!(!is_free(Banner.graph(), &[C4]));
    let c4 = classify(&cycle(4));
    for label in ["P4-free", "P3uP1-free", "2K2-free"] {
        assert!(c4.iter().any(|c| c == label), "{label}");
    }
    let k4 = classify(&complete(4));
    assert!(k4.iter().any(|c| c == "(P5,C4)-free"));
    assert!(!k4.iter().any(|c| c == "(P5,K4)-free"));
    assert!(classify(&petersen()).iter().all(|c| !c.starts_with("(P5,") && c != "P5-free"));
}

#[test]
fn paw_partitions() {
    let cb = PatternId::CoBanner.graph();
    let p = paw_partition(cb, &find_induced(cb, PatternId::Paw.graph()).unwrap()).unwrap();
    assert_eq!(p.cell_name(4), "A1");
    let bf = PatternId::Butterfly.graph();
    let p = paw_partition(bf, &find_induced(bf, PatternId::Paw.graph()).unwrap()).unwrap();
    assert_eq!(p.cell_name(4), "B12");
    let kite = PatternId::Kite.graph();
    let p = paw_partition(kite, &find_induced(kite, PatternId::Paw.graph()).unwrap()).unwrap();
    assert_eq!(p.cell_name(4), "B34");
}

#[test]
fn solver_and_dismantling() {
    let k2 = solve(&complete(2), 1).unwrap();
    assert!(k2.cops_win());
    assert!(!solve(&cycle(4), 1).unwrap().cops_win());
    assert!(!solve(&petersen(), 2).unwrap().cops_win());
    assert!(is_dismantlable(&path(5)));
    assert!(!is_dismantlable(&cycle(4)));
    assert!(dismantle(&path(5)).complete());
}

#[test]
fn optimal_robber() {
    // one cop on C4: the robber stays opposite forever
    let t1 = Arc::new(solve(&cycle(4), 1).unwrap());
    let trace = run_game(
        &cycle(4),
        &mut OracleStrategy::new(t1.clone()),
        &mut OptimalRobber::new(t1),
        default_max_rounds(4),
    )
    .unwrap();
    assert_eq!(trace.outcome, Outcome::LoopDetected);
    // on a dismantlable graph the oracle meets its opening rank exactly
    let g = edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (2, 4)]);
    let t = Arc::new(solve(&g, 1).unwrap());
    let (_, rank) = t.opening().unwrap();
    let trace = run_game(&g, &mut OracleStrategy::new(t.clone()), &mut OptimalRobber::new(t), 100).unwrap();
    assert_eq!(trace.outcome, Outcome::CapturedAtRound(rank as usize));
    let t = Arc::new(solve(&cycle(5), 2).unwrap());
    let trace = run_game(&cycle(5), &mut OracleStrategy::new(t.clone()), &mut OptimalRobber::new(t), 100).unwrap();
    assert!(trace.outcome.is_capture());
}

/// Both cops on a fixed vertex, then stand still.
#[derive(Clone)]
struct Sit(usize);

impl Strategy for Sit {
    fn name(&self) -> &str {
        "sit"
    }
    fn place(&mut self) -> Result<Decision, Contradiction> {
        Ok(Decision::new(vec![self.0, self.0], "sit"))
    }
    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let mut next = cops.to_vec();
        next[0] = robber;
        Ok(Decision::new(next, "step onto the robber"))
    }
    fn fingerprint(&self) -> u64 {
        0
    }
    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

#[test]
fn referee_examples() {
    let paw = PatternId::Paw.graph();
    assert_eq!(play(paw, &mut Sit(1)), Outcome::CapturedAtRound(1));
    let k222 = complete_multipartite(&[2, 2, 2]);
    captured(&k222, strategy_p3p1(&k222).unwrap());
}

#[test]
fn gyarfas_examples() {
    captured(&cycle(5), strategy_gyarfas(&cycle(5), PatternId::C4).unwrap());
    assert!(strategy_gyarfas(&star(4), PatternId::Claw).is_err());
    captured(&path(4), strategy_gyarfas(&path(4), PatternId::Claw).unwrap());
    assert!(strategy_gyarfas(&cycle(6), PatternId::C4).is_err());
    assert!(matches!(
        strategy_gyarfas(&cycle(5), PatternId::K4),
        Err(GuardError::UnsupportedPattern(PatternId::K4))
    ));
}

#[test]
fn paw_free_examples() {
    assert_eq!(captured(&complete(3), strategy_paw_free(&complete(3)).unwrap()), 1);
    assert!(strategy_paw_free(&cycle(5)).unwrap().name().contains("gyarfas"));
    // K2,2,2 is paw-free: every triangle meets every other vertex twice
    let k222 = complete_multipartite(&[2, 2, 2]);
    assert!(is_free(&k222, &[PatternId::Paw]));
    captured(&k222, strategy_paw_free(&k222).unwrap());
}

#[test]
fn p5k4_examples() {
    let kite = PatternId::Kite.graph();
    let s = strategy_p5k4(kite).unwrap();
    assert_eq!(s.name(), "p5k4/without-kite");
    captured(kite, s);
    assert!(strategy_p5k4(&cycle(5)).unwrap().name().starts_with("paw-free"));
    for p in [PatternId::CoBanner, PatternId::Butterfly] {
        let g = p.graph();
        captured(g, strategy_p5k4(g).unwrap());
    }
    assert!(strategy_p5k4(&petersen()).is_err());
}

#[test]
fn k3k1_examples() {
    assert_eq!(captured(&complete(3), strategy_k3k1(&complete(3)).unwrap()), 1);
    // a triangle with a path hanging off it: vertex 4 misses the triangle
    let g = edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
    assert!(find_induced(&g, PatternId::K3K1.graph()).is_some());
    assert!(strategy_k3k1(&g).is_err());
    // the hub sees every rim vertex
    assert!(find_induced(&wheel(5), PatternId::K3K1.graph()).is_none());
    let w4 = wheel(4);
    captured(&w4, strategy_k3k1(&w4).unwrap());
}

#[test]
fn p3p1_examples() {
    assert_eq!(captured(&complete(4), strategy_p3p1(&complete(4)).unwrap()), 1);
    captured(&cycle(4), strategy_p3p1(&cycle(4)).unwrap());
    assert!(is_free(&path(4), &[PatternId::P3P1]));
    captured(&path(4), strategy_p3p1(&path(4)).unwrap());
    assert!(strategy_p3p1(&path(5)).is_err());
}

#[test]
fn reductions() {
    for g in [complete(4), cycle(5), PatternId::Paw.graph().clone(), petersen()] {
        for mode in [ReductionMode::Diamond, ReductionMode::TwoK1K2] {
            if let Some(r) = find_reduction(&g, mode) {
                Retraction::new(&g, r.image(), r.map().to_vec()).unwrap();
                assert!(r.image().len() < g.n());
            }
        }
    }
    assert!(find_reduction(&complete(4), ReductionMode::Diamond).is_some());
    assert!(find_reduction(&cycle(5), ReductionMode::Diamond).is_none());
    let (chain, base) = reduction_chain(&complete(6), ReductionMode::Diamond);
    assert_eq!((chain.len(), base.n()), (5, 1));
}

#[test]
fn shadow_examples() {
    // identity retraction plays exactly as the inner strategy
    let c5 = cycle(5);
    let id = Retraction::identity(&c5);
    let mut a = shadow_strategy(id, strategy_paw_free(&c5).unwrap());
    let mut b = strategy_paw_free(&c5).unwrap();
    let t = Arc::new(solve(&c5, 2).unwrap());
    let ta = run_game(&c5, a.as_mut(), &mut OptimalRobber::new(t.clone()), 100).unwrap();
    let tb = run_game(&c5, b.as_mut(), &mut OptimalRobber::new(t), 100).unwrap();
    let moves = |t: &copnumlab::game::GameTrace| t.steps.iter().map(|s| (s.cops.clone(), s.robber)).collect::<Vec<_>>();
    assert_eq!(moves(&ta), moves(&tb));
    // paw onto its triangle, pendant to the hub
    let paw = PatternId::Paw.graph();
    let r = Retraction::collapse(paw, VertexSet::singleton(0), 1).unwrap();
    let tri = r.image_graph();
    captured(paw, shadow_strategy(r, strategy_paw_free(&tri).unwrap()));
    // a clique far from its image vertex: C5 plus an edge 5-6 with 5 ~ 1, 6 ~ 1, both sent to 0
    let g = edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (5, 1), (6, 1)]);
    let r = Retraction::new(&g, VertexSet::full(5), vec![0, 1, 2, 3, 4, 0, 0]).unwrap();
    captured(&g, shadow_strategy(r, strategy_paw_free(&c5).unwrap()));
}

#[test]
fn reduce_examples() {
    assert!(captured(&cycle(5), strategy_diamond(&cycle(5)).unwrap()) <= 3);
    captured(&complete(4), strategy_diamond(&complete(4)).unwrap());
    captured(&complete(5), strategy_2k1k2(&complete(5)).unwrap());
    let k33 = complete_multipartite(&[3, 3]);
    captured(&k33, strategy_2k1k2(&k33).unwrap());
}

#[test]
fn selection() {
    assert_eq!(select_strategy(&cycle(4)).unwrap().0, StrategyId::P3P1);
    assert!(select_strategy(&petersen()).is_none());
    // the kite is P3 + P1-free, so the first guard in order accepts it
    assert_eq!(select_strategy(PatternId::Kite.graph()).unwrap().0, StrategyId::P3P1);
    assert!(StrategyId::P5K4.build(PatternId::Kite.graph()).is_ok());
}
