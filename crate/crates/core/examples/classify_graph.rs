//! Which `(P5, H)`-free classes a graph belongs to, with witnesses.
//!
//! cargo run --example classify_graph -- petersen

use copnumlab::input::resolve;
use copnumlab::patterns::{classify_detailed, find_induced, PatternId};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "@catalog:kite".into());
    for named in resolve(&arg).expect("a graph6 string, file, family or @catalog:name") {
        let g = &named.graph;
        println!("{} on {} vertices", named.label, g.n());
        for m in classify_detailed(g) {
            match &m.witness {
                None => println!("  in  {}", m.class),
                Some(w) => println!("  out {} ({w})", m.class),
            }
        }
        if let Some(e) = find_induced(g, PatternId::Paw.graph()) {
            println!("  first induced paw: {e}");
        }
    }
}
