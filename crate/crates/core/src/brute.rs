//! Exhaustive reference search, used as the oracle the branch-and-bound
//! solver is tested against.
//!
//! Candidates are enumerated as base-`k` numerals over the value alphabet,
//! vertex 0 in the most significant position, so the enumeration index
//! orders labelings lexicographically. Taking the minimum of
//! `(weight, index)` therefore returns the lexicographically least
//! minimum-weight labeling no matter how the range is split across
//! threads.

use std::time::Instant;

use crate::assignment::{Assignment, Parameter};
use crate::domination::verify;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{SolveResult, SolveStats};

/// Hard ceilings on the vertex count, keeping the candidate space at most
/// a few tens of millions (4^13 and 3^16 respectively).
const CAP_WIDE: usize = 13;
const CAP_NARROW: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct BruteForceOptions {
    /// Split the candidate range across threads. Ignored when the crate is
    /// built without the `parallel` feature.
    pub parallel: bool,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// Minimum-weight valid labeling over the parameter's full value range,
/// packaged like a solver result; `stats.nodes` counts enumerated
/// candidates and `optimal` is always true.
pub fn brute_force(graph: &Graph, param: Parameter) -> Result<SolveResult> {
    let start = Instant::now();
    let alphabet: Vec<u8> = (0..=param.max_value()).collect();
    let found = brute_force_with(graph, param, &alphabet, &BruteForceOptions::default())?;
    let assignment = found.expect("the all-max labeling is always valid");
    let weight = assignment.weight();
    Ok(SolveResult {
        assignment,
        weight,
        optimal: true,
        stats: SolveStats {
            nodes: (alphabet.len() as u64).pow(graph.n() as u32),
            elapsed: start.elapsed(),
            truncated: false,
        },
    })
}

/// Minimum-weight valid labeling drawing values only from `alphabet`;
/// `None` when no valid labeling exists over that alphabet.
pub fn brute_force_over(
    graph: &Graph,
    param: Parameter,
    alphabet: &[u8],
) -> Result<Option<Assignment>> {
    brute_force_with(graph, param, alphabet, &BruteForceOptions::default())
}

pub fn brute_force_with(
    graph: &Graph,
    param: Parameter,
    alphabet: &[u8],
    opts: &BruteForceOptions,
) -> Result<Option<Assignment>> {
    if alphabet.is_empty() {
        return Err(Error::Precondition("value alphabet is empty".into()));
    }
    if !alphabet.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Precondition(
            "value alphabet must be strictly ascending".into(),
        ));
    }
    if *alphabet.last().unwrap() > param.max_value() {
        return Err(Error::Range(format!(
            "alphabet value {} exceeds the maximum {} for {param}",
            alphabet.last().unwrap(),
            param.max_value()
        )));
    }
    let n = graph.n();
    let cap = if alphabet.len() >= 4 { CAP_WIDE } else { CAP_NARROW };
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "{n} vertices with {} values exceeds the exhaustive-search cap of {cap}",
            alphabet.len()
        )));
    }

    let total = (alphabet.len() as u64).pow(n as u32);
    let best = search(graph, param, alphabet, total, opts);

    Ok(best.map(|(_, index)| {
        let mut values = vec![0u8; n];
        decode(index, alphabet, &mut values);
        let a = Assignment::new(param, values).expect("alphabet values are in range");
        debug_assert!(verify(graph, &a).unwrap().is_valid());
        a
    }))
}

fn search(
    graph: &Graph,
    param: Parameter,
    alphabet: &[u8],
    total: u64,
    opts: &BruteForceOptions,
) -> Option<(u64, u64)> {
    #[cfg(feature = "parallel")]
    if opts.parallel {
        use rayon::prelude::*;
        const CHUNK: u64 = 1 << 16;
        let chunks = total.div_ceil(CHUNK);
        return (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                let start = c * CHUNK;
                scan(graph, param, alphabet, start, (start + CHUNK).min(total))
            })
            .min();
    }
    let _ = opts;
    scan(graph, param, alphabet, 0, total)
}

/// Best `(weight, index)` among candidates in `start..end`.
fn scan(
    graph: &Graph,
    param: Parameter,
    alphabet: &[u8],
    start: u64,
    end: u64,
) -> Option<(u64, u64)> {
    let mut values = vec![0u8; graph.n()];
    let mut best: Option<(u64, u64)> = None;
    for index in start..end {
        decode(index, alphabet, &mut values);
        if let Some((w, _)) = best {
            let weight: u64 = values.iter().map(|&v| u64::from(v)).sum();
            if weight >= w {
                continue;
            }
        }
        if valid(graph, &values, param) {
            let weight = values.iter().map(|&v| u64::from(v)).sum();
            best = Some((weight, index));
        }
    }
    best
}

/// Digits of `index` in base `alphabet.len()`, vertex 0 most significant.
fn decode(mut index: u64, alphabet: &[u8], out: &mut [u8]) {
    let k = alphabet.len() as u64;
    for slot in out.iter_mut().rev() {
        *slot = alphabet[(index % k) as usize];
        index /= k;
    }
}

/// Direct restatement of the labeling rules on a raw value slice, kept
/// separate from the `Assignment`-based checkers so the oracle does not
/// share their code path.
fn valid(graph: &Graph, values: &[u8], param: Parameter) -> bool {
    match param {
        Parameter::Roman => (0..graph.n()).all(|v| {
            values[v] != 0 || graph.neighbors(v).iter().any(|&u| values[u] == 2)
        }),
        Parameter::DoubleRoman => (0..graph.n()).all(|v| match values[v] {
            0 => {
                let mut twos = 0;
                graph.neighbors(v).iter().any(|&u| {
                    if values[u] == 3 {
                        return true;
                    }
                    if values[u] == 2 {
                        twos += 1;
                    }
                    twos == 2
                })
            }
            1 => graph.neighbors(v).iter().any(|&u| values[u] >= 2),
            _ => true,
        }),
    }
}
