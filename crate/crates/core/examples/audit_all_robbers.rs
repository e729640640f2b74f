//! Plays each strategy against every possible robber on its class corpus.
//!
//! cargo run --release --example audit_all_robbers -- 7

use copnumlab::corpus::connected_up_to;
use copnumlab::game::default_max_rounds;
use copnumlab::strategies::{audit, StrategyId};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let graphs = connected_up_to(n_max).expect("n_max within the exhaustive range");
    for id in StrategyId::ALL {
        let (mut tested, mut failed, mut worst) = (0, 0, 0);
        for g in &graphs {
            let Ok(s) = id.build(g) else { continue };
            tested += 1;
            match audit(g, s.as_ref(), default_max_rounds(g.n())) {
                Ok(r) => worst = worst.max(r.worst_rounds),
                Err(f) => {
                    if failed < 3 {
                        println!("  {id} on {}: robber {:?}: {}", g.to_graph6(), f.robber_path, f.reason);
                    }
                    failed += 1;
                }
            }
        }
        println!("{id}: {tested} graphs, {failed} beaten by some robber, worst {worst} rounds");
    }
}
