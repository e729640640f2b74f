//! Exact cops-and-robber laboratory.
//!
//! Cop numbers by backward induction over game states, recognition of the
//! `(P5, H)`-free classes, and executable two-cop strategies for those
//! classes that can be played against an optimal robber.

pub mod graph;
pub mod campaign;
pub mod corpus;
pub mod game;
pub mod input;
pub mod patterns;
pub mod strategies;

pub use graph::{Graph, GraphError, VertexSet};
