//! Shared test fixtures: the fixed-seed graph corpus and small helpers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use romdom::{is_drdf, Assignment, Graph, Parameter};

/// Seed for every randomized fixture; changing it invalidates frozen
/// expectations, so don't.
pub const CORPUS_SEED: u64 = 0xC0FFEE;

/// Named graphs with up to 10 vertices: paths, cycles, stars, complete
/// graphs and seeded random graphs at three densities. Deterministic
/// across runs and platforms.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = Vec::new();
    for n in 2..=10 {
        graphs.push((format!("path-{n}"), Graph::path(n)));
    }
    for n in 3..=10 {
        graphs.push((format!("cycle-{n}"), Graph::cycle(n)));
    }
    for n in 2..=10 {
        graphs.push((format!("star-{n}"), Graph::star(n)));
    }
    for n in 1..=10 {
        graphs.push((format!("complete-{n}"), Graph::complete(n).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for n in 4..=10 {
        for (tag, p) in [("03", 0.3), ("05", 0.5), ("08", 0.8)] {
            graphs.push((
                format!("gnp-{n}-{tag}"),
                Graph::gnp(n, p, &mut rng).unwrap(),
            ));
        }
    }
    graphs
}

/// All 1-free double Roman labelings of `graph` with the given weight,
/// by exhaustive enumeration over values {0, 2, 3}. Intended for small
/// bases only.
#[allow(dead_code)]
pub fn optimal_one_free_labelings(graph: &Graph, weight: u64) -> Vec<Assignment> {
    let n = graph.n();
    assert!(n <= 8, "enumeration is exponential; keep bases small");
    let alphabet = [0u8, 2, 3];
    let total = 3u64.pow(n as u32);
    let mut found = Vec::new();
    for index in 0..total {
        let mut values = vec![0u8; n];
        let mut rest = index;
        for slot in values.iter_mut().rev() {
            *slot = alphabet[(rest % 3) as usize];
            rest /= 3;
        }
        if values.iter().map(|&v| u64::from(v)).sum::<u64>() != weight {
            continue;
        }
        let a = Assignment::new(Parameter::DoubleRoman, values).unwrap();
        if is_drdf(graph, &a).unwrap().is_valid() {
            found.push(a);
        }
    }
    found
}
