//! Corpus-wide contract checks for the branch-and-bound solvers: witness
//! validity, agreement with exhaustive search, weight determinism, and
//! budget behaviour.

mod common;

use std::time::Duration;

use common::corpus;
use romdom::{
    brute_force, is_rdf, solve, verify, Parameter, SolveOptions, Verdict,
};

#[test]
fn witnesses_are_valid_and_weights_consistent() {
    for (name, g) in corpus() {
        for param in [Parameter::Roman, Parameter::DoubleRoman] {
            let r = solve(&g, param, &SolveOptions::default());
            assert!(r.optimal, "{name} {param}");
            assert_eq!(r.assignment.weight(), r.weight, "{name} {param}");
            assert_eq!(verify(&g, &r.assignment).unwrap(), Verdict::Valid, "{name} {param}");
        }
    }
}

#[test]
fn roman_never_exceeds_double_roman() {
    for (name, g) in corpus() {
        let dr = solve(&g, Parameter::DoubleRoman, &SolveOptions::default());
        let r = solve(&g, Parameter::Roman, &SolveOptions::default());
        assert!(r.weight <= dr.weight, "{name}: {} > {}", r.weight, dr.weight);
        // Capping a double Roman witness at two yields a Roman function,
        // so the Roman optimum can only sit below that cap.
        let capped = dr.assignment.capped_at_two();
        assert!(is_rdf(&g, &capped).unwrap().is_valid(), "{name}");
        assert!(r.weight <= capped.weight(), "{name}");
    }
}

#[test]
fn agrees_with_exhaustive_search() {
    for (name, g) in corpus() {
        for param in [Parameter::Roman, Parameter::DoubleRoman] {
            let oracle = brute_force(&g, param).unwrap();
            let fast = solve(&g, param, &SolveOptions::default());
            assert_eq!(fast.weight, oracle.weight, "{name} {param}");
        }
    }
}

#[test]
fn repeated_runs_report_equal_weights() {
    for (name, g) in corpus().into_iter().take(20) {
        let opts = SolveOptions::default();
        let first = solve(&g, Parameter::DoubleRoman, &opts);
        for _ in 0..3 {
            let again = solve(&g, Parameter::DoubleRoman, &opts);
            assert_eq!(again.weight, first.weight, "{name}");
            assert_eq!(again.optimal, first.optimal, "{name}");
        }
    }
}

#[test]
fn sequential_runs_are_fully_deterministic() {
    let opts = SolveOptions { parallel: false, ..SolveOptions::default() };
    for (name, g) in corpus().into_iter().take(20) {
        let first = solve(&g, Parameter::Roman, &opts);
        let again = solve(&g, Parameter::Roman, &opts);
        assert_eq!(again.assignment, first.assignment, "{name}");
    }
}

#[cfg(feature = "parallel")]
#[test]
fn parallel_and_sequential_weights_match() {
    for (name, g) in corpus() {
        for param in [Parameter::Roman, Parameter::DoubleRoman] {
            let seq = solve(&g, param, &SolveOptions { parallel: false, ..Default::default() });
            let par = solve(&g, param, &SolveOptions { parallel: true, ..Default::default() });
            assert_eq!(seq.weight, par.weight, "{name} {param}");
            assert_eq!(seq.optimal, par.optimal, "{name} {param}");
        }
    }
}

#[test]
fn truncated_results_are_valid_upper_bounds() {
    for (name, g) in [
        ("cycle-10", romdom::Graph::cycle(10)),
        ("path-10", romdom::Graph::path(10)),
        ("complete-8", romdom::Graph::complete(8).unwrap()),
    ] {
        let exact = solve(&g, Parameter::DoubleRoman, &SolveOptions::default());
        let tight = SolveOptions { budget_nodes: Some(4), ..SolveOptions::default() };
        let r = solve(&g, Parameter::DoubleRoman, &tight);
        assert!(verify(&g, &r.assignment).unwrap().is_valid(), "{name}");
        assert!(r.weight >= exact.weight, "{name}");
        if r.stats.truncated {
            assert!(!r.optimal, "{name}: truncated run claimed optimality");
        } else {
            assert_eq!(r.weight, exact.weight, "{name}");
        }
    }
}

#[test]
fn expired_deadline_still_yields_a_witness() {
    let g = romdom::Graph::cycle(9);
    let opts = SolveOptions {
        budget_time: Some(Duration::ZERO),
        ..SolveOptions::default()
    };
    let r = solve(&g, Parameter::DoubleRoman, &opts);
    assert!(verify(&g, &r.assignment).unwrap().is_valid());
    assert!(!r.optimal);
    assert!(r.stats.truncated);
}
