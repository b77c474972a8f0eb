//! Roman and double Roman domination on generalized Sierpinski graphs.
//!
//! The crate builds `S(G, t)` for an arbitrary simple base graph `G`,
//! computes the exact Roman and double Roman domination numbers by branch
//! and bound, lifts base labelings to labelings of `S(G, t)` with known
//! closed-form weights, and evaluates the matching lower and upper bound
//! formulas.
//!
//! A typical round trip:
//!
//! ```
//! use romdom::{exact_gamma_dr, sierpinski, Graph};
//!
//! let base = Graph::complete(3)?;
//! let s = sierpinski(&base, 2)?;
//! let result = exact_gamma_dr(s.graph());
//! assert_eq!(result.weight, 8);
//! # Ok::<(), romdom::Error>(())
//! ```
//!
//! With the default `parallel` feature the solvers and the exhaustive
//! oracle fan out over rayon; disabling it leaves behavior identical but
//! sequential.

mod assignment;
mod bounds;
mod brute;
mod domination;
mod error;
mod graph;
mod sierpinski;
mod solver;

pub use assignment::{Assignment, Parameter};
pub use bounds::{
    lift, lower_bound_dr, lower_bound_r, paired_threes, roman_upper_bound_complete,
    sandwich_report, upper_bound_dr, BoundsReport, Check, LiftResult, Rational, Stage,
};
pub use brute::{brute_force, brute_force_over, brute_force_with, BruteForceOptions};
pub use domination::{is_drdf, is_rdf, verify, Condition, Verdict};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use sierpinski::{
    sierpinski, sierpinski_with_limit, SierpinskiGraph, Word, DEFAULT_SIZE_LIMIT,
};
pub use solver::{exact_gamma_dr, exact_gamma_r, solve, SolveOptions, SolveResult, SolveStats};
