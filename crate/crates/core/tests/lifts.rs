//! The lift constructions accept any valid 1-free base labeling, not just
//! optimal ones. These tests exercise that generality over the corpus and
//! pin down the weight bookkeeping.

mod common;

use common::corpus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use romdom::{
    exact_gamma_dr, is_drdf, lift, upper_bound_dr, Assignment, Graph, Parameter, Stage, Verdict,
};

/// Valid 1-free labelings of varying quality: the two flat ones plus a few
/// repaired random draws over `{0, 2, 3}`.
fn one_free_samples(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Assignment> {
    let n = g.n();
    let mut out = vec![
        Assignment::new(Parameter::DoubleRoman, vec![3; n]).unwrap(),
        Assignment::new(Parameter::DoubleRoman, vec![2; n]).unwrap(),
    ];
    for _ in 0..4 {
        let mut values: Vec<u8> = (0..n).map(|_| [0u8, 2, 3][rng.random_range(0..3)]).collect();
        loop {
            let f = Assignment::new(Parameter::DoubleRoman, values.clone()).unwrap();
            match is_drdf(g, &f).unwrap() {
                Verdict::Valid => {
                    out.push(f);
                    break;
                }
                Verdict::Invalid { vertex, .. } => values[vertex] = 3,
            }
        }
    }
    out
}

#[test]
fn lifts_accept_arbitrary_one_free_labelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for (name, g) in corpus() {
        let n = g.n();
        if n < 2 || n * n > 144 {
            continue;
        }
        let s = romdom::sierpinski(&g, 2).unwrap();
        for f in one_free_samples(&g, &mut rng) {
            let mut weights = Vec::new();
            for stage in Stage::ALL {
                let lifted = lift(&g, 2, &f, stage).unwrap();
                assert!(
                    is_drdf(s.graph(), &lifted.assignment).unwrap().is_valid(),
                    "{name} {stage} on {f:?}"
                );
                assert_eq!(
                    lifted.assignment.weight(),
                    lifted.predicted_weight,
                    "{name} {stage}"
                );
                weights.push(lifted.predicted_weight);
            }
            // Each stage only lowers values, so weights fall monotonically.
            assert!(weights[2] <= weights[1] && weights[1] <= weights[0], "{name}: {weights:?}");
        }
    }
}

#[test]
fn weight_formulas_match_the_corner_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE);
    for (name, g) in corpus() {
        let n = g.n();
        if n < 2 {
            continue;
        }
        for t in [2usize, 3] {
            if n.pow(t as u32) > 1000 {
                continue;
            }
            let scale = (n as u64).pow(t as u32 - 2);
            for f in one_free_samples(&g, &mut rng) {
                let w = f.weight();
                let g0 = lift(&g, t, &f, Stage::Replicate).unwrap();
                let g1 = lift(&g, t, &f, Stage::DemoteCorners).unwrap();
                let g2 = lift(&g, t, &f, Stage::ZeroCorners).unwrap();
                let (v3, d3) = (g0.v3 as u64, g0.d3 as u64);
                assert_eq!(g0.predicted_weight, scale * n as u64 * w, "{name} t={t}");
                assert_eq!(g1.predicted_weight, scale * (n as u64 * w - v3), "{name} t={t}");
                assert_eq!(
                    g2.predicted_weight,
                    scale * (n as u64 * w - v3 - 2 * d3),
                    "{name} t={t}"
                );
                for r in [&g0, &g1, &g2] {
                    assert_eq!(r.corner_threes as u64, scale * v3, "{name} t={t}");
                    assert_eq!(r.corner_paired_threes as u64, scale * d3, "{name} t={t}");
                    assert!(r.d3 <= r.v3, "{name} t={t}");
                }
            }
        }
    }
}

/// With an optimal base labeling, the zero-corners lift undercuts the
/// closed-form ceiling by one more `d3` per block stack.
#[test]
fn zero_corners_sharpens_the_ceiling() {
    for (name, g) in corpus() {
        let n = g.n();
        if !(2..=6).contains(&n) {
            continue;
        }
        let f = exact_gamma_dr(&g).assignment;
        for t in [2usize, 3] {
            if n.pow(t as u32) > 1000 {
                continue;
            }
            let ceiling = upper_bound_dr(&g, t, &f).unwrap();
            let built = lift(&g, t, &f, Stage::ZeroCorners).unwrap();
            assert!(built.predicted_weight <= ceiling, "{name} t={t}");
            let scale = (n as u64).pow(t as u32 - 2);
            assert_eq!(ceiling - built.predicted_weight, scale * built.d3 as u64, "{name} t={t}");
        }
    }
}
