//! Exact cop numbers from the win-table solver, with the dismantling
//! shortcut for one cop.
//!
//! cargo run --release --example cop_number -- dodecahedron

use std::sync::Arc;

use copnumlab::game::{cop_number, default_max_rounds, dismantle, run_game, solve, OptimalRobber, OracleStrategy};
use copnumlab::input::resolve;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names = if args.is_empty() {
        vec!["C4".to_string(), "C5".into(), "petersen".into(), "K2,2,2".into()]
    } else {
        args
    };
    for name in names {
        for named in resolve(&name).expect("a graph") {
            let g = &named.graph;
            let report = cop_number(g, 3).expect("within the solver budget");
            println!("{}: cop number {}", named.label, report.total);
            let d = dismantle(g);
            println!("  dismantlable: {} ({} corners removed)", d.complete(), d.order.len());
            if let copnumlab::game::CopNumber::Exactly(k) = report.total {
                if k >= 1 && g.is_connected() {
                    let table = Arc::new(solve(g, k).unwrap());
                    let (opening, rank) = table.opening().unwrap();
                    let t = run_game(
                        g,
                        &mut OracleStrategy::new(table.clone()),
                        &mut OptimalRobber::new(table),
                        default_max_rounds(g.n()),
                    )
                    .unwrap();
                    println!("  {k} cops open on {opening:?}, capture in {rank}: {}", t.outcome);
                }
            }
        }
    }
}
