//! Two-cop strategies for the graph classes where two cops are known to
//! suffice, each behind a guard that checks its class.
//!
//! A strategy asserts the structural facts its argument relies on as it
//! plays; a failed assertion surfaces as a [`Contradiction`] naming the
//! step, so a run against the optimal robber doubles as a check of the
//! argument.
//!
//! [`Contradiction`]: crate::game::Contradiction

use thiserror::Error;

use crate::patterns::{PatternId, Witness};

mod audit;
mod common;
mod gyarfas;
mod k3k1;
mod p3p1;
mod p5k4;
mod reduce;
mod retract;
mod select;
mod shadow;

pub use audit::{audit, AuditFailure, AuditReport};
pub use common::{Domination, Refuted};
pub use gyarfas::{strategy_gyarfas, strategy_paw_free, Gyarfas, GYARFAS_PATTERNS};
pub use k3k1::{strategy_k3k1, K3K1};
pub use p3p1::{strategy_p3p1, P3P1};
pub use p5k4::{strategy_p5k4, Mode as P5K4Mode, P5K4};
pub use reduce::{reduction_chain, strategy_2k1k2, strategy_diamond};
pub use retract::{find_reduction, ReductionMode, Retraction, RetractionError};
pub use select::{select_strategy, StrategyId};
pub use shadow::{shadow_strategy, Shadow};

#[derive(Clone, Debug, Error)]
pub enum GuardError {
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not {class}: contains {witness}")]
    NotInClass { class: String, witness: Witness },
    #[error("no strategy for (P5, {0})-free graphs")]
    UnsupportedPattern(PatternId),
}
