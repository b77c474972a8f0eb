//! Validity checks for Roman and double Roman labelings.
//!
//! A Roman labeling over `{0, 1, 2}` is valid when every 0-vertex has a
//! 2-neighbor. A double Roman labeling over `{0, 1, 2, 3}` is valid when
//! every 0-vertex has a 3-neighbor or two 2-neighbors, and every 1-vertex
//! has a neighbor labeled 2 or 3. Only the labels 0 and 1 carry
//! constraints, so raising any value never breaks validity.

use std::fmt;

use crate::assignment::{Assignment, Parameter};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which rule a vertex failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// A 0-vertex without a 3-neighbor or two 2-neighbors.
    ZeroUndefended,
    /// A 1-vertex without a neighbor labeled 2 or 3.
    OneUnsupported,
    /// A 0-vertex without a 2-neighbor (Roman rule).
    ZeroUnguarded,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::ZeroUndefended => "(i)",
            Condition::OneUnsupported => "(ii)",
            Condition::ZeroUnguarded => "(rdf)",
        })
    }
}

/// Outcome of a validity check. `Invalid` names a single witness vertex:
/// the highest-indexed one that fails, since vertices are scanned from the
/// top index down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid { vertex: usize, condition: Condition },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => write!(f, "valid"),
            Verdict::Invalid { vertex, condition } => {
                write!(f, "invalid at vertex {vertex}, condition {condition}")
            }
        }
    }
}

fn check_shape(graph: &Graph, assignment: &Assignment, expected: Parameter) -> Result<()> {
    if assignment.kind() != expected {
        return Err(Error::ShapeMismatch(format!(
            "expected a {expected} assignment, got {}",
            assignment.kind()
        )));
    }
    if assignment.len() != graph.n() {
        return Err(Error::ShapeMismatch(format!(
            "assignment covers {} vertices, graph has {}",
            assignment.len(),
            graph.n()
        )));
    }
    Ok(())
}

/// Checks the double Roman rules, reporting the highest-indexed violator.
pub fn is_drdf(graph: &Graph, assignment: &Assignment) -> Result<Verdict> {
    check_shape(graph, assignment, Parameter::DoubleRoman)?;
    let values = assignment.values();
    for vertex in (0..graph.n()).rev() {
        match values[vertex] {
            0 => {
                let mut twos = 0;
                let mut defended = false;
                for &u in graph.neighbors(vertex) {
                    match values[u] {
                        3 => {
                            defended = true;
                            break;
                        }
                        2 => twos += 1,
                        _ => {}
                    }
                }
                if !defended && twos < 2 {
                    return Ok(Verdict::Invalid {
                        vertex,
                        condition: Condition::ZeroUndefended,
                    });
                }
            }
            1 if !graph.neighbors(vertex).iter().any(|&u| values[u] >= 2) => {
                return Ok(Verdict::Invalid {
                    vertex,
                    condition: Condition::OneUnsupported,
                });
            }
            _ => {}
        }
    }
    Ok(Verdict::Valid)
}

/// Checks the Roman rule, reporting the highest-indexed violator.
pub fn is_rdf(graph: &Graph, assignment: &Assignment) -> Result<Verdict> {
    check_shape(graph, assignment, Parameter::Roman)?;
    let values = assignment.values();
    for vertex in (0..graph.n()).rev() {
        if values[vertex] == 0 && !graph.neighbors(vertex).iter().any(|&u| values[u] == 2) {
            return Ok(Verdict::Invalid {
                vertex,
                condition: Condition::ZeroUnguarded,
            });
        }
    }
    Ok(Verdict::Valid)
}

/// Dispatches to [`is_rdf`] or [`is_drdf`] on the assignment's parameter.
pub fn verify(graph: &Graph, assignment: &Assignment) -> Result<Verdict> {
    match assignment.kind() {
        Parameter::Roman => is_rdf(graph, assignment),
        Parameter::DoubleRoman => is_drdf(graph, assignment),
    }
}
