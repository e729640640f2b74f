//! Command-line front end. Exit codes: 0 success, 1 a check or game
//! failed, 2 bad usage or input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use copnumlab::campaign::{run_campaign, Campaign};
use copnumlab::game::cache::solve_cached;
use copnumlab::game::{
    cop_number, default_max_rounds, run_game, Adversary, CopNumber, GreedyFarRobber, OptimalRobber,
    OracleStrategy, RandomRobber, Strategy,
};
use copnumlab::input::{resolve, Named};
use copnumlab::patterns::classify_detailed;
use copnumlab::strategies::{select_strategy, StrategyId};

// A closed stdout (say, piped into `head`) ends the run quietly.
macro_rules! out {
    ($($t:tt)*) => {
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0)
        }
    };
}

macro_rules! out_raw {
    ($($t:tt)*) => {
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0)
        }
    };
}

#[derive(Parser)]
#[command(name = "copnumlab", version, about = "Cops and robber on small graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class memberships, with an induced witness for each class missed.
    Classify {
        /// graph6 string, file, @catalog:NAME, or family name (C5, petersen, ...)
        input: String,
    },
    /// Exact cop number.
    Copnumber {
        input: String,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Also print an optimal game as JSON lines.
        #[arg(long)]
        trace: bool,
    },
    /// Run a verification campaign over all connected graphs up to --nmax.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play a strategy against a robber and print the trace as JSON lines.
    Play {
        input: String,
        /// Strategy id, or `auto` for the first whose guard accepts.
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Robber::Optimal)]
        robber: Robber,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Robber {
    Optimal,
    Random,
    GreedyFar,
}

struct Fail(u8, String);

fn usage(msg: impl ToString) -> Fail {
    Fail(2, msg.to_string())
}

fn graphs(input: &str) -> Result<Vec<Named>, Fail> {
    resolve(input).map_err(usage)
}

fn classify(input: &str) -> Result<(), Fail> {
    for Named { label, graph } in graphs(input)? {
        out!("{label} (n = {}, graph6 {})", graph.n(), graph.to_graph6());
        for m in classify_detailed(&graph) {
            match m.witness {
                None => out!("  {:<22} yes", m.class),
                Some(w) => out!("  {:<22} no   {w}", m.class),
            }
        }
    }
    Ok(())
}

fn copnumber(input: &str, kmax: usize, trace: bool) -> Result<(), Fail> {
    let mut failed = false;
    for Named { label, graph } in graphs(input)? {
        let report = match cop_number(&graph, kmax) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{label}: {e}");
                failed = true;
                continue;
            }
        };
        out!("{label}: cop number {}", report.total);
        if report.components.len() > 1 {
            for (vs, c) in &report.components {
                out!("  component {vs:?}: {c}");
            }
        }
        if trace {
            match report.total {
                CopNumber::Exactly(k) if k >= 1 && graph.is_connected() => {
                    let table = Arc::new(solve_cached(&graph, k).map_err(|e| Fail(1, e.to_string()))?);
                    let mut cops = OracleStrategy::new(table.clone());
                    let mut robber = OptimalRobber::new(table);
                    let t = run_game(&graph, &mut cops, &mut robber, default_max_rounds(graph.n()))
                        .map_err(|e| Fail(1, e.to_string()))?;
                    out_raw!("{}", t.to_json_lines());
                }
                _ => eprintln!("{label}: no trace (disconnected, empty, or beyond --kmax)"),
            }
        }
    }
    if failed {
        Err(Fail(1, "solver budget exceeded".into()))
    } else {
        Ok(())
    }
}

fn verify(theorem: &str, nmax: usize, jobs: Option<usize>, out: Option<PathBuf>) -> Result<(), Fail> {
    let campaign: Campaign = theorem.parse().map_err(usage)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let report = pool
        .install(|| run_campaign(campaign, nmax))
        .map_err(usage)?;
    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    match out {
        Some(p) => fs::write(&p, json + "\n").map_err(|e| Fail(2, format!("{}: {e}", p.display())))?,
        None => out!("{json}"),
    }
    eprintln!("{}", report.summary());
    if report.passed() {
        Ok(())
    } else {
        Err(Fail(1, format!("{} failures", report.failures.len())))
    }
}

fn play(input: &str, strategy: &str, robber: Robber, seed: u64) -> Result<(), Fail> {
    let mut failed = false;
    for Named { label, graph } in graphs(input)? {
        let mut s: Box<dyn Strategy> = if strategy == "auto" {
            select_strategy(&graph)
                .map(|(_, s)| s)
                .ok_or_else(|| Fail(2, format!("{label}: no strategy applies")))?
        } else {
            let id: StrategyId = strategy.parse().map_err(usage)?;
            id.build(&graph).map_err(|e| Fail(2, format!("{label}: {e}")))?
        };
        let mut adversary: Box<dyn Adversary> = match robber {
            Robber::Optimal => {
                let table = solve_cached(&graph, s.cops()).map_err(|e| Fail(1, e.to_string()))?;
                Box::new(OptimalRobber::new(Arc::new(table)))
            }
            Robber::Random => Box::new(RandomRobber::new(graph.clone(), seed)),
            Robber::GreedyFar => Box::new(GreedyFarRobber::new(graph.clone())),
        };
        let t = run_game(&graph, s.as_mut(), adversary.as_mut(), default_max_rounds(graph.n()))
            .map_err(|e| Fail(1, e.to_string()))?;
        out_raw!("{}", t.to_json_lines());
        eprintln!("{label}: {} vs {}: {}", t.strategy, t.adversary, t.outcome);
        failed |= !t.outcome.is_capture();
    }
    if failed {
        Err(Fail(1, "robber not captured".into()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let r = match cli.cmd {
        Cmd::Classify { input } => classify(&input),
        Cmd::Copnumber { input, kmax, trace } => copnumber(&input, kmax, trace),
        Cmd::Verify { theorem, nmax, jobs, out } => verify(&theorem, nmax, jobs, out),
        Cmd::Play { input, strategy, robber, seed } => play(&input, &strategy, robber, seed),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
