//! Regulatory-network input: an edge list of `SOURCE -> TARGET` regulations,
//! a list of known regulators, and optionally the gene universe.
//!
//! Each gene is one element type, and its `n - 1` possible outgoing
//! regulations are that type's copies. A filtered edge set is then a draw of
//! `x` positions, and `z` counts the regulators that occur as a source.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::engine::{InstanceError, ProblemInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("line {line}: {reason}: `{content}`")]
    Malformed {
        line: usize,
        content: String,
        reason: &'static str,
    },
    #[error("line {line}: self-loop `{id} -> {id}`")]
    SelfLoop { line: usize, id: String },
    #[error("line {line}: duplicate edge `{from} -> {to}`")]
    DuplicateEdge {
        line: usize,
        from: String,
        to: String,
    },
    #[error("line {line}: `{id}` is not in the universe")]
    UnknownEndpoint { line: usize, id: String },
    #[error("regulator `{0}` is not in the universe")]
    UnknownRegulator(String),
    #[error("derived instance is inconsistent: {0}")]
    Instance(#[from] InstanceError),
}

/// One parsed regulation with its 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub line: usize,
}

/// One identifier from a regulator or universe file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identifier {
    pub name: String,
    pub line: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn valid_identifier(token: &str) -> bool {
    !token.is_empty() && !token.contains("->") && !token.chars().any(char::is_whitespace)
}

/// Parses `SOURCE -> TARGET` lines. Blank lines and `#` comments are skipped;
/// edges come back in file order with duplicates kept.
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>, IngestError> {
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let malformed = |reason| IngestError::Malformed {
            line,
            content: content.to_string(),
            reason,
        };
        let mut parts = content.split("->");
        let (Some(source), Some(target), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed("expected exactly one `->`"));
        };
        let (source, target) = (source.trim(), target.trim());
        if source.is_empty() || target.is_empty() {
            return Err(malformed("empty identifier"));
        }
        if !valid_identifier(source) || !valid_identifier(target) {
            return Err(malformed("identifiers must not contain whitespace"));
        }
        edges.push(Edge {
            source: source.to_string(),
            target: target.to_string(),
            line,
        });
    }
    Ok(edges)
}

/// Parses one identifier per line, skipping blank lines and `#` comments.
pub fn parse_identifier_list(text: &str) -> Result<Vec<Identifier>, IngestError> {
    content_lines(text)
        .map(|(line, content)| {
            if valid_identifier(content) {
                Ok(Identifier {
                    name: content.to_string(),
                    line,
                })
            } else {
                Err(IngestError::Malformed {
                    line,
                    content: content.to_string(),
                    reason: "expected a single identifier",
                })
            }
        })
        .collect()
}

/// Leniency switches for [`derive_instance`]. Every relaxation records a
/// warning instead of failing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DerivePolicy {
    /// Collapse repeated edges.
    pub dedupe: bool,
    /// Drop regulators, and edges with endpoints, outside an explicit universe.
    pub allow_unknown: bool,
    /// Drop `A -> A` edges.
    pub drop_self_loops: bool,
}

/// Validated network: no self-loops, no duplicate edges, every identifier in
/// the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegulatoryNetworkInput {
    pub universe: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
    pub regulators: BTreeSet<String>,
    /// The universe was assembled from the inputs rather than given.
    pub universe_inferred: bool,
}

impl RegulatoryNetworkInput {
    /// Regulators occurring as the source of at least one edge.
    pub fn regulators_found(&self) -> BTreeSet<&str> {
        self.edges
            .iter()
            .map(|(s, _)| s.as_str())
            .filter(|s| self.regulators.contains(*s))
            .collect()
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (s, t) in &self.edges {
            let _ = writeln!(out, "{s} -> {t}");
        }
        out
    }

    pub fn instance(&self) -> Result<ProblemInstance, InstanceError> {
        ProblemInstance::new(
            self.universe.len() as u64,
            self.edges.len() as u64,
            self.regulators.len() as u64,
            self.regulators_found().len() as u64,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub network: RegulatoryNetworkInput,
    pub instance: ProblemInstance,
    pub warnings: Vec<String>,
}

/// Validates the inputs and derives `(n, x, y, z)` with `z` the number of
/// distinct regulators seen as an edge source.
///
/// Without an explicit universe, it is the union of edge endpoints and
/// regulators.
pub fn derive_instance<S: AsRef<str>>(
    edges: &[Edge],
    regulators: &[S],
    universe: Option<&[S]>,
    policy: DerivePolicy,
) -> Result<Derived, IngestError> {
    let mut warnings = Vec::new();
    let explicit: Option<BTreeSet<String>> =
        universe.map(|u| u.iter().map(|s| s.as_ref().to_string()).collect());

    let mut kept = BTreeSet::new();
    for edge in edges {
        if edge.source == edge.target {
            if policy.drop_self_loops {
                warnings.push(format!(
                    "line {}: dropped self-loop `{}`",
                    edge.line, edge.source
                ));
                continue;
            }
            return Err(IngestError::SelfLoop {
                line: edge.line,
                id: edge.source.clone(),
            });
        }
        if let Some(universe) = &explicit {
            let missing = [&edge.source, &edge.target]
                .into_iter()
                .find(|id| !universe.contains(*id));
            if let Some(id) = missing {
                if policy.allow_unknown {
                    warnings.push(format!(
                        "line {}: dropped edge `{} -> {}`: `{id}` is not in the universe",
                        edge.line, edge.source, edge.target
                    ));
                    continue;
                }
                return Err(IngestError::UnknownEndpoint {
                    line: edge.line,
                    id: id.clone(),
                });
            }
        }
        if !kept.insert((edge.source.clone(), edge.target.clone())) {
            if policy.dedupe {
                warnings.push(format!(
                    "line {}: dropped duplicate edge `{} -> {}`",
                    edge.line, edge.source, edge.target
                ));
                continue;
            }
            return Err(IngestError::DuplicateEdge {
                line: edge.line,
                from: edge.source.clone(),
                to: edge.target.clone(),
            });
        }
    }

    let mut regulator_set = BTreeSet::new();
    for r in regulators {
        let r = r.as_ref();
        if let Some(universe) = &explicit {
            if !universe.contains(r) {
                if policy.allow_unknown {
                    warnings.push(format!("dropped regulator `{r}`: not in the universe"));
                    continue;
                }
                return Err(IngestError::UnknownRegulator(r.to_string()));
            }
        }
        regulator_set.insert(r.to_string());
    }

    let universe_inferred = explicit.is_none();
    let universe = explicit.unwrap_or_else(|| {
        kept.iter()
            .flat_map(|(s, t)| [s.clone(), t.clone()])
            .chain(regulator_set.iter().cloned())
            .collect()
    });

    let network = RegulatoryNetworkInput {
        universe,
        edges: kept,
        regulators: regulator_set,
        universe_inferred,
    };
    let instance = network.instance()?;
    Ok(Derived {
        network,
        instance,
        warnings,
    })
}
