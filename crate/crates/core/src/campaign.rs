//! Verification campaigns over the exhaustive corpus, and their JSON
//! reports.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{enumerate_connected, CorpusError};
use crate::game::cache::solve_cached;
use crate::game::{cop_number, default_max_rounds, run_game, GameTrace, OptimalRobber, Outcome};
use crate::graph::Graph;
use crate::patterns::{GraphClass, PatternId};
use crate::strategies::StrategyId;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Campaign {
    /// A strategy against the optimal robber on every graph of its class.
    Strategy(StrategyId),
    /// Cop number at most 2 on every `(P5, H)`-free graph, `H` ranging
    /// over [`le2_classes`].
    CopnumLe2AllClasses,
    /// Cop number at most 3 on every `2K1 ∪ K2`-free graph.
    TwoK1K2Le3,
}

impl Campaign {
    pub fn all() -> Vec<Campaign> {
        let mut v: Vec<Campaign> = StrategyId::ALL.into_iter().map(Campaign::Strategy).collect();
        v.push(Campaign::CopnumLe2AllClasses);
        v.push(Campaign::TwoK1K2Le3);
        v
    }

    pub fn id(self) -> String {
        match self {
            Campaign::Strategy(s) => s.name().to_string(),
            Campaign::CopnumLe2AllClasses => "copnum-le2-all-classes".into(),
            Campaign::TwoK1K2Le3 => "2k1k2-le3".into(),
        }
    }

    fn class_label(self) -> String {
        match self {
            Campaign::Strategy(s) => s.class().label(),
            Campaign::CopnumLe2AllClasses => "(P5,H)-free, H any listed pattern".into(),
            Campaign::TwoK1K2Le3 => GraphClass::free_of(&[PatternId::TwoK1K2]).label(),
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Campaign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Campaign::all()
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| {
                let ids: Vec<String> = Campaign::all().iter().map(|c| c.id()).collect();
                format!("unknown theorem id {s:?}; expected one of {}", ids.join(", "))
            })
    }
}

/// The classes for which two cops are claimed: every 4-vertex pattern with
/// an edge, plus C3, C5 and the banner, each together with P5.
pub fn le2_classes() -> Vec<GraphClass> {
    let mut hs: Vec<PatternId> = PatternId::FOUR_VERTEX_WITH_EDGE.to_vec();
    hs.extend([PatternId::C3, PatternId::C5, PatternId::Banner]);
    hs.into_iter().map(GraphClass::p5_and).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureEntry {
    pub graph6: String,
    pub n: usize,
    pub detail: String,
    /// The losing game, for strategy campaigns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<GameTrace>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub campaign: String,
    pub class: String,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_tested: usize,
    pub captures: usize,
    pub failures: Vec<FailureEntry>,
    pub max_rounds: usize,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.graphs_tested == self.captures
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} graphs on n = {}..={}, {} passed, {} failed, max rounds {}, {} ms",
            self.campaign,
            self.graphs_tested,
            self.n_min,
            self.n_max,
            self.captures,
            self.failures.len(),
            self.max_rounds,
            self.wall_time_ms
        )
    }
}

enum Verdict {
    Skip,
    Pass(usize),
    Fail(FailureEntry),
}

/// Plays the strategy `id` against the optimal robber for two cops.
pub fn play_vs_optimal(g: &Graph, id: StrategyId) -> Result<GameTrace, String> {
    let mut s = id.build(g).map_err(|e| e.to_string())?;
    let table = solve_cached(g, s.cops()).map_err(|e| e.to_string())?;
    let mut robber = OptimalRobber::new(Arc::new(table));
    run_game(g, s.as_mut(), &mut robber, default_max_rounds(g.n())).map_err(|e| e.to_string())
}

fn fail(g: &Graph, detail: String, trace: Option<GameTrace>) -> Verdict {
    Verdict::Fail(FailureEntry {
        graph6: g.to_graph6(),
        n: g.n(),
        detail,
        trace,
    })
}

fn judge(c: Campaign, g: &Graph) -> Verdict {
    match c {
        Campaign::Strategy(id) => {
            if !id.class().contains(g) {
                return Verdict::Skip;
            }
            match play_vs_optimal(g, id) {
                Err(e) => fail(g, e, None),
                Ok(t) => match t.outcome {
                    Outcome::CapturedAtRound(r) if r <= default_max_rounds(g.n()) => Verdict::Pass(r),
                    ref o => {
                        let detail = o.to_string();
                        fail(g, detail, Some(t))
                    }
                },
            }
        }
        Campaign::CopnumLe2AllClasses | Campaign::TwoK1K2Le3 => {
            let (member, bound) = match c {
                Campaign::CopnumLe2AllClasses => (le2_classes().iter().any(|cl| cl.contains(g)), 2),
                _ => (GraphClass::free_of(&[PatternId::TwoK1K2]).contains(g), 3),
            };
            if !member {
                return Verdict::Skip;
            }
            match cop_number(g, bound) {
                Ok(r) if r.total.at_most(bound) => Verdict::Pass(0),
                Ok(r) => fail(g, format!("cop number {}", r.total), None),
                Err(e) => fail(g, e.to_string(), None),
            }
        }
    }
}

/// Runs `campaign` over all connected graphs on `1..=n_max` vertices, in
/// parallel; the report does not depend on scheduling.
pub fn run_campaign(campaign: Campaign, n_max: usize) -> Result<Report, CorpusError> {
    let start = Instant::now();
    let mut graphs: Vec<&Graph> = Vec::new();
    for n in 1..=n_max {
        graphs.extend(enumerate_connected(n)?.iter());
    }
    let verdicts: Vec<Verdict> = graphs.par_iter().map(|g| judge(campaign, g)).collect();
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        campaign: campaign.id(),
        class: campaign.class_label(),
        n_min: 1,
        n_max,
        graphs_tested: 0,
        captures: 0,
        failures: Vec::new(),
        max_rounds: 0,
        wall_time_ms: 0,
    };
    for v in verdicts {
        match v {
            Verdict::Skip => {}
            Verdict::Pass(r) => {
                report.graphs_tested += 1;
                report.captures += 1;
                report.max_rounds = report.max_rounds.max(r);
            }
            Verdict::Fail(f) => {
                report.graphs_tested += 1;
                report.failures.push(f);
            }
        }
    }
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}
