//! Runs verification campaigns over every connected graph up to a size.
//!
//! cargo run --release --example verify_campaign -- 7 p5k4 diamond

use copnumlab::campaign::{run_campaign, Campaign};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let mut chosen: Vec<Campaign> = args.map(|a| a.parse().expect("theorem id")).collect();
    if chosen.is_empty() {
        chosen = Campaign::all();
    }
    for c in chosen {
        let report = run_campaign(c, n_max).expect("n_max within the exhaustive range");
        println!("{}", report.summary());
        for f in report.failures.iter().take(3) {
            println!("  {} (n = {}): {}", f.graph6, f.n, f.detail);
        }
    }
}
