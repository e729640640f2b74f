//! Rules of the game, the exact solver, robber policies and the referee.
//!
//! Cops place first (a tuple, repetition allowed), then the robber places.
//! Each round the cops move as a team, each to a vertex of its closed
//! neighbourhood, then the robber does the same. The robber is caught when
//! it shares a vertex with a cop.

mod adversary;
pub mod cache;
mod dismantle;
mod referee;
mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use adversary::{Adversary, GreedyFarRobber, OptimalRobber, RandomRobber};
pub use dismantle::{dismantle, is_dismantlable, Corner, Dismantling};
pub use referee::{default_max_rounds, run_game, OracleStrategy, RefereeError};
pub use solver::{cop_number, solve, CopNumber, CopNumberReport, SolverError, WinTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    CopsToMove,
    RobberToMove,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn captured(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// True when the robber sits in the closed neighbourhood of some cop, so a
/// cop can step onto it next turn.
pub fn doomed(g: &Graph, cops: &[usize], robber: usize) -> bool {
    cops.iter().any(|&c| g.closed_neighbors(c).contains(robber))
}

/// Every ordered tuple of moves from `cops`, each cop staying or stepping
/// to a neighbour, in lexicographic order.
pub(crate) fn for_each_joint_move(g: &Graph, cops: &[usize], emit: &mut dyn FnMut(&[usize])) {
    fn go(g: &Graph, cops: &[usize], cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if cur.len() == cops.len() {
            emit(cur);
            return;
        }
        for v in g.closed_neighbors(cops[cur.len()]) {
            cur.push(v);
            go(g, cops, cur, emit);
            cur.pop();
        }
    }
    go(g, cops, &mut Vec::with_capacity(cops.len()), emit);
}

/// A cop move together with a label naming the case of the argument that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub cops: Vec<usize>,
    pub note: String,
}

impl Decision {
    pub fn new(cops: Vec<usize>, note: impl Into<String>) -> Self {
        Decision {
            cops,
            note: note.into(),
        }
    }
}

/// A strategy met a position that its case analysis rules out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contradiction {
    pub claim: String,
    pub detail: String,
}

impl Contradiction {
    pub fn new(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        Contradiction {
            claim: claim.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.claim, self.detail)
    }
}

impl std::error::Error for Contradiction {}

/// A stateful cop policy for one game.
pub trait Strategy: Send {
    fn name(&self) -> &str;

    fn cops(&self) -> usize {
        2
    }

    fn place(&mut self) -> Result<Decision, Contradiction>;

    /// Called at the start of every round with the current positions.
    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction>;

    /// Hash of the internal state; two equal fingerprints must mean equal
    /// future behaviour.
    fn fingerprint(&self) -> u64;

    fn boxed_clone(&self) -> Box<dyn Strategy>;
}

impl Clone for Box<dyn Strategy> {
    fn clone(&self) -> Self {
        self.boxed_clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum Outcome {
    CapturedAtRound(usize),
    RobberEscapes,
    LoopDetected,
    StrategyContradiction(Contradiction),
}

impl Outcome {
    pub fn is_capture(&self) -> bool {
        matches!(self, Outcome::CapturedAtRound(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::CapturedAtRound(t) => write!(f, "captured at round {t}"),
            Outcome::RobberEscapes => write!(f, "robber escapes"),
            Outcome::LoopDetected => write!(f, "loop detected"),
            Outcome::StrategyContradiction(c) => write!(f, "contradiction [{c}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mover {
    Cops,
    Robber,
}

/// Positions after one half-move. Round 0 holds the placements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub round: usize,
    pub mover: Mover,
    pub cops: Vec<usize>,
    pub robber: Option<usize>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTrace {
    pub strategy: String,
    pub adversary: String,
    pub steps: Vec<TraceStep>,
    pub outcome: Outcome,
}

impl GameTrace {
    pub fn rounds(&self) -> usize {
        self.steps.last().map_or(0, |s| s.round)
    }

    /// One JSON object per step, then one for the outcome.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("trace steps serialize"));
            out.push('\n');
        }
        let tail = serde_json::json!({ "outcome": self.outcome });
        out.push_str(&tail.to_string());
        out.push('\n');
        out
    }
}
