//! graph6 and edge-list conversion, and random graphs.
//!
//! cargo run --example graph6_io -- 12 0.4 7

use copnumlab::corpus::{canonical_form, random_graph};
use copnumlab::graph::{families, Graph};

fn main() {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(8);
    let p = args.next().and_then(|a| a.parse().ok()).unwrap_or(0.4);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let g = random_graph(n, p, seed);
    let text = g.to_graph6();
    println!("G({n}, {p}) seed {seed}: {text}");
    assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    print!("{}", g.to_edge_list());
    if n <= 8 {
        println!("canonical form {}", canonical_form(&g).unwrap());
    }
    let p = families::petersen();
    println!("petersen {}", p.to_graph6());
}
