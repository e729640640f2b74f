//! Resolving command-line graph arguments: graph6 strings, files of
//! graph6 lines or edge lists, `@catalog:name` patterns, and family names
//! such as `C5` or `petersen`.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{families, Graph, GraphError};
use crate::patterns::PatternId;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("unknown catalogue pattern {0:?}")]
    UnknownPattern(String),
    #[error("{origin}:{line}: {source}")]
    Parse {
        origin: String,
        line: usize,
        source: GraphError,
    },
    #[error("{0}: no graphs found")]
    Empty(String),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
}

/// A graph with the label it was given on the command line.
#[derive(Clone, Debug)]
pub struct Named {
    pub label: String,
    pub graph: Graph,
}

pub fn resolve(arg: &str) -> Result<Vec<Named>, InputError> {
    let one = |graph: Graph| Ok(vec![Named { label: arg.to_string(), graph }]);
    if let Some(name) = arg.strip_prefix("@catalog:") {
        let p = PatternId::from_name(name).ok_or_else(|| InputError::UnknownPattern(name.into()))?;
        return one(p.graph().clone());
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| InputError::Io(arg.into(), e))?;
        return parse_file(&text, arg);
    }
    if let Some(g) = families::by_name(arg) {
        return one(g);
    }
    match Graph::from_graph6(arg) {
        Ok(g) => one(g),
        Err(source) => Err(InputError::Parse {
            origin: "argument".into(),
            line: 1,
            source,
        }),
    }
}

/// One graph6 string per line (`#` comments allowed), or else a single
/// edge list.
pub fn parse_file(text: &str, origin: &str) -> Result<Vec<Named>, InputError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(InputError::Empty(origin.into()));
    }
    let looks_graph6 = !lines[0].1.contains(char::is_whitespace) && lines[0].1.parse::<usize>().is_err();
    if !looks_graph6 {
        let graph = Graph::parse_edge_list(text).map_err(|source| {
            let line = match &source {
                GraphError::EdgeList { line, .. } => *line,
                _ => 0,
            };
            InputError::Parse {
                origin: origin.into(),
                line,
                source,
            }
        })?;
        return Ok(vec![Named { label: origin.into(), graph }]);
    }
    lines
        .into_iter()
        .map(|(line, l)| {
            Graph::from_graph6(l)
                .map(|graph| Named {
                    label: format!("{origin}:{line}"),
                    graph,
                })
                .map_err(|source| InputError::Parse {
                    origin: origin.into(),
                    line,
                    source,
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_forms() {
        assert_eq!(resolve("@catalog:kite").unwrap()[0].graph.n(), 5);
        assert!(resolve("@catalog:nope").is_err());
        assert_eq!(resolve("petersen").unwrap()[0].graph.edge_count(), 15);
        assert_eq!(resolve("Dhc").unwrap()[0].graph, families::cycle(5));
        let many = parse_file("# two graphs\nDhc\n\nA_\n", "mem").unwrap();
        assert_eq!(many.len(), 2);
        assert_eq!(many[1].label, "mem:4");
        let err = parse_file("Dhc\nD!!\n", "mem").unwrap_err();
        assert!(err.to_string().starts_with("mem:2:"), "{err}");
    }
}
