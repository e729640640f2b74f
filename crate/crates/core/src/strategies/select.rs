use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::game::Strategy;
use crate::graph::Graph;
use crate::patterns::{GraphClass, PatternId};

use super::gyarfas::{strategy_gyarfas, strategy_paw_free};
use super::k3k1::strategy_k3k1;
use super::p3p1::strategy_p3p1;
use super::p5k4::strategy_p5k4;
use super::reduce::{strategy_2k1k2, strategy_diamond};
use super::GuardError;

/// One constructive strategy per graph class, in selection order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "&'static str")]
pub enum StrategyId {
    P3P1,
    Paw,
    GyarfasC3,
    GyarfasC4,
    GyarfasC5,
    GyarfasClaw,
    GyarfasBanner,
    K3K1,
    P5K4,
    Diamond,
    TwoK1K2,
}

impl StrategyId {
    pub const ALL: [StrategyId; 11] = [
        StrategyId::P3P1,
        StrategyId::Paw,
        StrategyId::GyarfasC3,
        StrategyId::GyarfasC4,
        StrategyId::GyarfasC5,
        StrategyId::GyarfasClaw,
        StrategyId::GyarfasBanner,
        StrategyId::K3K1,
        StrategyId::P5K4,
        StrategyId::Diamond,
        StrategyId::TwoK1K2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyId::P3P1 => "p3p1",
            StrategyId::Paw => "paw",
            StrategyId::GyarfasC3 => "gyarfas-c3",
            StrategyId::GyarfasC4 => "gyarfas-c4",
            StrategyId::GyarfasC5 => "gyarfas-c5",
            StrategyId::GyarfasClaw => "gyarfas-claw",
            StrategyId::GyarfasBanner => "gyarfas-banner",
            StrategyId::K3K1 => "k3k1",
            StrategyId::P5K4 => "p5k4",
            StrategyId::Diamond => "diamond",
            StrategyId::TwoK1K2 => "2k1k2",
        }
    }

    /// The `H` in "(P5, H)-free", or `P3 ∪ P1` alone.
    pub fn pattern(self) -> PatternId {
        match self {
            StrategyId::P3P1 => PatternId::P3P1,
            StrategyId::Paw => PatternId::Paw,
            StrategyId::GyarfasC3 => PatternId::C3,
            StrategyId::GyarfasC4 => PatternId::C4,
            StrategyId::GyarfasC5 => PatternId::C5,
            StrategyId::GyarfasClaw => PatternId::Claw,
            StrategyId::GyarfasBanner => PatternId::Banner,
            StrategyId::K3K1 => PatternId::K3K1,
            StrategyId::P5K4 => PatternId::K4,
            StrategyId::Diamond => PatternId::Diamond,
            StrategyId::TwoK1K2 => PatternId::TwoK1K2,
        }
    }

    pub fn class(self) -> GraphClass {
        match self {
            StrategyId::P3P1 => GraphClass::free_of(&[PatternId::P3P1]),
            s => GraphClass::p5_and(s.pattern()),
        }
    }

    /// The strategy for `g`, if `g` passes the guard.
    pub fn build(self, g: &Graph) -> Result<Box<dyn Strategy>, GuardError> {
        match self {
            StrategyId::P3P1 => strategy_p3p1(g),
            StrategyId::Paw => strategy_paw_free(g),
            StrategyId::K3K1 => strategy_k3k1(g),
            StrategyId::P5K4 => strategy_p5k4(g),
            StrategyId::Diamond => strategy_diamond(g),
            StrategyId::TwoK1K2 => strategy_2k1k2(g),
            s => strategy_gyarfas(g, s.pattern()),
        }
    }
}

impl From<StrategyId> for &'static str {
    fn from(s: StrategyId) -> Self {
        s.name()
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StrategyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

/// The first strategy in `StrategyId::ALL` order whose guard accepts `g`.
pub fn select_strategy(g: &Graph) -> Option<(StrategyId, Box<dyn Strategy>)> {
    StrategyId::ALL
        .into_iter()
        .find_map(|id| id.build(g).ok().map(|s| (id, s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn selection_order() {
        assert_eq!(select_strategy(&cycle(4)).unwrap().0, StrategyId::P3P1);
        assert!(select_strategy(&petersen()).is_none());
        let kite = PatternId::Kite.graph();
        // the kite has no induced P3 ∪ P1, so the first guard already holds
        assert_eq!(select_strategy(kite).unwrap().0, StrategyId::P3P1);
        assert_eq!(select_strategy(&cycle(5)).unwrap().0, StrategyId::P3P1);
        assert_eq!(select_strategy(PatternId::Banner.graph()).unwrap().0, StrategyId::Paw);
        for id in StrategyId::ALL {
            assert_eq!(id.name().parse::<StrategyId>().unwrap(), id);
        }
    }
}
