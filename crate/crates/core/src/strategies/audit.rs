//! Plays a strategy against every robber at once: a depth-first search
//! over all robber choices, sharing positions that repeat.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::game::Strategy;
use crate::graph::Graph;

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    /// Distinct (cops, robber, strategy state) positions visited.
    pub positions: usize,
    /// Most rounds any robber survives.
    pub worst_rounds: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditFailure {
    /// Robber placement followed by its moves.
    pub robber_path: Vec<usize>,
    pub reason: String,
}

type Key = (Vec<usize>, usize, u64);

struct Search<'a> {
    g: &'a Graph,
    max_rounds: usize,
    done: HashMap<Key, usize>,
    stack: HashSet<Key>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn fail(&self, reason: String) -> AuditFailure {
        AuditFailure {
            robber_path: self.path.clone(),
            reason,
        }
    }

    /// Rounds the cops still need, counting from the state after the
    /// robber's move to `robber`.
    fn explore(&mut self, s: &dyn Strategy, cops: &[usize], robber: usize, round: usize) -> Result<usize, AuditFailure> {
        if cops.contains(&robber) {
            return Ok(0);
        }
        if round >= self.max_rounds {
            return Err(self.fail(format!("no capture within {} rounds", self.max_rounds)));
        }
        let key = (cops.to_vec(), robber, s.fingerprint());
        if let Some(&r) = self.done.get(&key) {
            return Ok(r);
        }
        if !self.stack.insert(key.clone()) {
            return Err(self.fail("position repeats".into()));
        }
        let mut s = s.boxed_clone();
        let d = s
            .respond(cops, robber)
            .map_err(|c| self.fail(format!("contradiction: {c}")))?;
        let legal = d.cops.len() == cops.len()
            && cops
                .iter()
                .zip(&d.cops)
                .all(|(&a, &b)| self.g.closed_neighbors(a).contains(b));
        if !legal {
            return Err(self.fail(format!("illegal cop move {cops:?} -> {:?}", d.cops)));
        }
        let mut worst = 0;
        if !d.cops.contains(&robber) {
            for r in self.g.closed_neighbors(robber) {
                self.path.push(r);
                let sub = self.explore(s.as_ref(), &d.cops, r, round + 1)?;
                self.path.pop();
                worst = worst.max(sub);
            }
        }
        self.stack.remove(&key);
        self.done.insert(key, worst + 1);
        Ok(worst + 1)
    }
}

/// Succeeds when `strategy` captures every robber within `max_rounds`.
pub fn audit(g: &Graph, strategy: &dyn Strategy, max_rounds: usize) -> Result<AuditReport, AuditFailure> {
    let mut s = strategy.boxed_clone();
    let place = s.place().map_err(|c| AuditFailure {
        robber_path: vec![],
        reason: format!("contradiction at placement: {c}"),
    })?;
    let mut search = Search {
        g,
        max_rounds,
        done: HashMap::new(),
        stack: HashSet::new(),
        path: Vec::new(),
    };
    let mut worst = 0;
    for r in g.vertices() {
        search.path = vec![r];
        worst = worst.max(search.explore(s.as_ref(), &place.cops, r, 0)?);
    }
    Ok(AuditReport {
        positions: search.done.len(),
        worst_rounds: worst,
    })
}
