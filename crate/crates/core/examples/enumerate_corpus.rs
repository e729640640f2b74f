//! Enumerate connected graphs and trees up to isomorphism and write the
//! corpus files.
//!
//! cargo run --release --example enumerate_corpus -- crates/core/corpora

use std::path::PathBuf;

use copnumlab::corpus::{enumerate_connected, enumerate_trees, Corpus};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpora".into()));
    for n in 1..=8 {
        let graphs = enumerate_connected(n).unwrap().to_vec();
        println!("connected n = {n}: {}", graphs.len());
        Corpus::new(&format!("connected-n{n}"), None, graphs)
            .with_meta("n", n)
            .with_meta("generator", "vertex extension, canonical dedupe")
            .save(&dir.join(format!("connected-n{n}.g6")))
            .unwrap();
    }
    for n in 1..=10 {
        let trees = enumerate_trees(n).unwrap();
        println!("trees n = {n}: {}", trees.len());
        Corpus::new(&format!("trees-n{n}"), None, trees)
            .with_meta("n", n)
            .with_meta("generator", "leaf extension, centre-rooted tree codes")
            .save(&dir.join(format!("trees-n{n}.g6")))
            .unwrap();
    }
}
