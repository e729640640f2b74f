//! A two-cop strategy against the optimal robber, printing the case labels
//! the strategy passes through.
//!
//! cargo run --example play_strategy -- @catalog:butterfly

use std::sync::Arc;

use copnumlab::game::{default_max_rounds, run_game, solve, Mover, OptimalRobber};
use copnumlab::input::resolve;
use copnumlab::strategies::select_strategy;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "@catalog:co-banner".into());
    for named in resolve(&arg).expect("a graph") {
        let g = &named.graph;
        let Some((id, mut s)) = select_strategy(g) else {
            println!("{}: no strategy applies", named.label);
            continue;
        };
        let table = Arc::new(solve(g, s.cops()).expect("within the solver budget"));
        let mut robber = OptimalRobber::new(table);
        let t = run_game(g, s.as_mut(), &mut robber, default_max_rounds(g.n())).unwrap();
        println!("{} with {id} ({}):", named.label, t.strategy);
        for step in &t.steps {
            match step.mover {
                Mover::Cops => println!("  round {:>2} cops   {:?}  {}", step.round, step.cops, step.note),
                Mover::Robber => println!("  round {:>2} robber {:?}", step.round, step.robber.unwrap()),
            }
        }
        println!("  {}", t.outcome);
    }
}
