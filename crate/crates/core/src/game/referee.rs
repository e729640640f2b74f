use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use super::{
    Adversary, Contradiction, Decision, GameTrace, Mover, Outcome, Strategy, TraceStep, WinTable,
};
use crate::graph::Graph;

/// Referee failures are bugs in a policy, not game outcomes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefereeError {
    #[error("cannot play on the empty graph")]
    EmptyGraph,
    #[error("strategy {strategy} announced {expected} cops but moved {got}")]
    WrongCopCount {
        strategy: String,
        expected: usize,
        got: usize,
    },
    #[error("vertex {vertex} is out of range (n = {n})")]
    OutOfRange { vertex: usize, n: usize },
    #[error("round {round}: cop {cop} cannot move from {from} to {to}")]
    IllegalCopMove {
        round: usize,
        cop: usize,
        from: usize,
        to: usize,
    },
    #[error("round {round}: robber cannot move from {from} to {to}")]
    IllegalRobberMove { round: usize, from: usize, to: usize },
}

/// Default round cap, `10 n^2`.
pub fn default_max_rounds(n: usize) -> usize {
    10 * n * n
}

/// Play one game.
///
/// Stops at capture, after `max_rounds` rounds, when a strategy reports a
/// contradiction, or when the position after a robber move repeats with
/// the same strategy fingerprint (only for positional adversaries, where a
/// repeat means the game cycles forever).
pub fn run_game(
    g: &Graph,
    strategy: &mut dyn Strategy,
    adversary: &mut dyn Adversary,
    max_rounds: usize,
) -> Result<GameTrace, RefereeError> {
    let n = g.n();
    if n == 0 {
        return Err(RefereeError::EmptyGraph);
    }
    let k = strategy.cops();
    let mut trace = GameTrace {
        strategy: strategy.name().to_string(),
        adversary: adversary.name().to_string(),
        steps: Vec::new(),
        outcome: Outcome::RobberEscapes,
    };
    let sname = strategy.name().to_string();
    let check = |d: &Decision| -> Result<(), RefereeError> {
        if d.cops.len() != k {
            return Err(RefereeError::WrongCopCount {
                strategy: sname.clone(),
                expected: k,
                got: d.cops.len(),
            });
        }
        match d.cops.iter().find(|&&c| c >= n) {
            Some(&vertex) => Err(RefereeError::OutOfRange { vertex, n }),
            None => Ok(()),
        }
    };
    let finish = |mut t: GameTrace, o: Outcome| {
        t.outcome = o;
        Ok(t)
    };

    let mut cops = match strategy.place() {
        Ok(d) => {
            check(&d)?;
            trace.steps.push(TraceStep {
                round: 0,
                mover: Mover::Cops,
                cops: d.cops.clone(),
                robber: None,
                note: d.note,
            });
            d.cops
        }
        Err(c) => return finish(trace, Outcome::StrategyContradiction(c)),
    };
    let mut robber = adversary.place(&cops);
    if robber >= n {
        return Err(RefereeError::OutOfRange { vertex: robber, n });
    }
    trace.steps.push(TraceStep {
        round: 0,
        mover: Mover::Robber,
        cops: cops.clone(),
        robber: Some(robber),
        note: String::new(),
    });
    if cops.contains(&robber) {
        return finish(trace, Outcome::CapturedAtRound(0));
    }

    let positional = adversary.is_positional();
    let mut seen: HashSet<(Vec<usize>, usize, u64)> = HashSet::new();
    for round in 1..=max_rounds {
        let d = match strategy.respond(&cops, robber) {
            Ok(d) => d,
            Err(c) => return finish(trace, Outcome::StrategyContradiction(c)),
        };
        check(&d)?;
        for (i, (&from, &to)) in cops.iter().zip(&d.cops).enumerate() {
            if !g.closed_neighbors(from).contains(to) {
                return Err(RefereeError::IllegalCopMove {
                    round,
                    cop: i,
                    from,
                    to,
                });
            }
        }
        cops = d.cops;
        trace.steps.push(TraceStep {
            round,
            mover: Mover::Cops,
            cops: cops.clone(),
            robber: Some(robber),
            note: d.note,
        });
        if cops.contains(&robber) {
            return finish(trace, Outcome::CapturedAtRound(round));
        }
        let next = adversary.respond(&cops, robber);
        if next >= n || !g.closed_neighbors(robber).contains(next) {
            return Err(RefereeError::IllegalRobberMove {
                round,
                from: robber,
                to: next,
            });
        }
        robber = next;
        trace.steps.push(TraceStep {
            round,
            mover: Mover::Robber,
            cops: cops.clone(),
            robber: Some(robber),
            note: String::new(),
        });
        if cops.contains(&robber) {
            return finish(trace, Outcome::CapturedAtRound(round));
        }
        if positional && !seen.insert((cops.clone(), robber, strategy.fingerprint())) {
            return finish(trace, Outcome::LoopDetected);
        }
    }
    finish(trace, Outcome::RobberEscapes)
}

/// Follows a solved table: places on the best opening and always moves to
/// a successor of least rank.
#[derive(Clone, Debug)]
pub struct OracleStrategy {
    table: Arc<WinTable>,
}

impl OracleStrategy {
    pub fn new(table: Arc<WinTable>) -> Self {
        OracleStrategy { table }
    }
}

impl Strategy for OracleStrategy {
    fn name(&self) -> &str {
        "oracle"
    }

    fn cops(&self) -> usize {
        self.table.k()
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        Ok(match self.table.opening() {
            Some((cops, rank)) => Decision::new(cops, format!("opening, capture within {rank}")),
            None => Decision::new(self.table.config(0).to_vec(), "no winning opening"),
        })
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let g = self.table.graph();
        let mut best: Option<(u32, Vec<usize>)> = None;
        super::for_each_joint_move(g, cops, &mut |t| {
            let r = self.table.rob_rank(t, robber).unwrap_or(u32::MAX);
            if best.as_ref().is_none_or(|(b, _)| r < *b) {
                best = Some((r, t.to_vec()));
            }
        });
        let (rank, next) = best.expect("staying put is always a move");
        let note = if rank == u32::MAX {
            "no winning move".to_string()
        } else {
            format!("rank {rank}")
        };
        Ok(Decision::new(next, note))
    }

    fn fingerprint(&self) -> u64 {
        0
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}
