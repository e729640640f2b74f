use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{check_free, GraphClass};

use super::GuardError;

/// If the robber is next to (or on) a cop, that cop steps onto it and the
/// other cops stay.
pub(crate) fn capture_move(g: &Graph, cops: &[usize], robber: usize) -> Option<Decision> {
    let i = cops
        .iter()
        .position(|&c| g.closed_neighbors(c).contains(robber))?;
    let mut next = cops.to_vec();
    next[i] = robber;
    Some(Decision::new(next, "capture"))
}

/// Send the two cops to `targets`, whichever cop can legally reach which
/// target. The order of `cops` is preserved.
pub(crate) fn assign(
    g: &Graph,
    cops: &[usize],
    targets: [usize; 2],
    claim: &str,
) -> Result<Vec<usize>, Contradiction> {
    let reach = |c: usize, t: usize| g.closed_neighbors(c).contains(t);
    let [a, b] = targets;
    if reach(cops[0], a) && reach(cops[1], b) {
        Ok(vec![a, b])
    } else if reach(cops[0], b) && reach(cops[1], a) {
        Ok(vec![b, a])
    } else {
        Err(Contradiction::new(
            claim,
            format!("cops at {cops:?} cannot reach {targets:?} in one move"),
        ))
    }
}

pub(crate) fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

pub(crate) fn min_of(s: VertexSet, claim: &str, what: &str) -> Result<usize, Contradiction> {
    s.first()
        .ok_or_else(|| Contradiction::new(claim, format!("{what} is empty")))
}

pub(crate) fn ensure(cond: bool, claim: &str, detail: impl FnOnce() -> String) -> Result<(), Contradiction> {
    if cond {
        Ok(())
    } else {
        Err(Contradiction::new(claim, detail()))
    }
}

/// Connected, nonempty, and in `class`.
pub(crate) fn guard(g: &Graph, class: &GraphClass) -> Result<(), GuardError> {
    if g.n() == 0 {
        return Err(GuardError::Empty);
    }
    if !g.is_connected() {
        return Err(GuardError::Disconnected);
    }
    check_free(g, &class.forbidden).map_err(|witness| GuardError::NotInClass {
        class: class.label(),
        witness,
    })
}

/// Cops sit on a dominating set and capture on the first move.
#[derive(Clone, Debug)]
pub struct Domination {
    g: Graph,
    name: String,
    cops: Vec<usize>,
    claim: String,
}

impl Domination {
    pub fn new(g: &Graph, name: &str, cops: Vec<usize>, claim: &str) -> Self {
        Domination {
            g: g.clone(),
            name: name.to_string(),
            cops,
            claim: claim.to_string(),
        }
    }
}

impl Strategy for Domination {
    fn name(&self) -> &str {
        &self.name
    }

    fn cops(&self) -> usize {
        self.cops.len()
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        Ok(Decision::new(self.cops.clone(), format!("{}: dominating placement", self.name)))
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        capture_move(&self.g, cops, robber).ok_or_else(|| {
            Contradiction::new(&self.claim, format!("robber at {robber} is not dominated"))
        })
    }

    fn fingerprint(&self) -> u64 {
        0
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Reports a contradiction before placing; stands in where an argument
/// rules out the graph entirely.
#[derive(Clone, Debug)]
pub struct Refuted {
    pub name: String,
    pub contradiction: Contradiction,
}

impl Strategy for Refuted {
    fn name(&self) -> &str {
        &self.name
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        Err(self.contradiction.clone())
    }

    fn respond(&mut self, _: &[usize], _: usize) -> Result<Decision, Contradiction> {
        Err(self.contradiction.clone())
    }

    fn fingerprint(&self) -> u64 {
        0
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::path;

    #[test]
    fn assign_tries_both_orders() {
        let g = path(4);
        assert_eq!(assign(&g, &[0, 3], [2, 1], "t").unwrap(), vec![1, 2]);
        assert!(assign(&g, &[0, 0], [2, 1], "t").is_err());
        assert_eq!(capture_move(&g, &[0, 3], 2).unwrap().cops, vec![0, 2]);
        assert!(capture_move(&g, &[0, 3], 1).unwrap().cops == vec![1, 3]);
    }
}
