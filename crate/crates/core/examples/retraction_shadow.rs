//! Retract a graph step by step and play the lifted strategy.
//!
//! cargo run --example retraction_shadow

use std::sync::Arc;

use copnumlab::game::{default_max_rounds, run_game, solve, OptimalRobber};
use copnumlab::graph::Graph;
use copnumlab::strategies::{reduction_chain, strategy_diamond, ReductionMode};

fn main() {
    // the 5-cycle 3-6-5-4-7 with 0, 1, 2 as false twins of 3
    let g = Graph::from_graph6("G??Nno").unwrap();
    let (chain, base) = reduction_chain(&g, ReductionMode::Diamond);
    let mut cur = g.clone();
    for r in &chain {
        let gone: Vec<usize> = (cur.vertices() - r.image()).to_vec();
        let to: Vec<usize> = gone.iter().map(|&v| r.apply(v)).collect();
        println!("{} vertices: retract {gone:?} onto {to:?}", cur.n());
        cur = r.image_graph();
    }
    println!("irreducible base on {} vertices: {}", base.n(), base.to_graph6());
    let mut s = strategy_diamond(&g).expect("(P5, diamond)-free");
    let table = Arc::new(solve(&g, 2).unwrap());
    let t = run_game(&g, s.as_mut(), &mut OptimalRobber::new(table), default_max_rounds(g.n())).unwrap();
    println!("{}: {}", t.strategy, t.outcome);
    print!("{}", t.to_json_lines());
}
