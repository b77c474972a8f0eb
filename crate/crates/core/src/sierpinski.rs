//! Generalized Sierpinski graphs.
//!
//! `S(G, t)` has vertex set `V(G)^t`, addressed here by the integer value of
//! the word in base `n = |V(G)`|` (first letter most significant). Two words
//! are adjacent iff they share a prefix `w`, then read `x y y ... y` and
//! `y x x ... x` for some base edge `{x, y}`: copies of `G` glued
//! recursively at corner vertices.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Refuse to materialize more vertices than this without an explicit limit.
pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

/// A vertex address in `S(G, t)`: `t` letters over `0..n`, first letter
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    /// Builds a word, validating every letter against the alphabet size.
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidDepth("words need at least one letter".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::Range(format!("letter {bad} outside alphabet 0..{n}")));
        }
        Ok(Word(letters))
    }

    /// The `index`-th word of length `t` over `0..n`, in lexicographic
    /// order; inverse of [`Word::index`].
    pub fn from_index(index: usize, n: usize, t: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder("alphabet must be non-empty".into()));
        }
        if t < 1 {
            return Err(Error::InvalidDepth("word length must be at least 1".into()));
        }
        let total = checked_power(n, t)?;
        if index >= total {
            return Err(Error::Range(format!("index {index} outside 0..{total}")));
        }
        let mut letters = vec![0; t];
        let mut rest = index;
        for slot in letters.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        Ok(Word(letters))
    }

    /// The word's rank in lexicographic order: its value read as a base-`n`
    /// numeral.
    pub fn index(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * n + l)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    /// Dot-separated letters, e.g. `2.0.1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `S(G, t)` together with the data needed to interpret its vertices.
#[derive(Clone, Debug)]
pub struct SierpinskiGraph {
    base: Graph,
    t: usize,
    graph: Graph,
    extremes: Vec<usize>,
}

impl SierpinskiGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Indices of the constant words `x.x...x`, ascending in `x`. These are
    /// the only vertices whose degree equals their base-vertex degree.
    pub fn extreme_vertices(&self) -> &[usize] {
        &self.extremes
    }

    /// The word addressed by vertex `v`.
    pub fn word(&self, v: usize) -> Result<Word> {
        Word::from_index(v, self.base.n(), self.t)
    }

    /// The vertex addressed by `word` (length must equal the depth).
    pub fn vertex(&self, word: &Word) -> Result<usize> {
        if word.len() != self.t {
            return Err(Error::ShapeMismatch(format!(
                "word has {} letters, expected {}",
                word.len(),
                self.t
            )));
        }
        if let Some(&bad) = word.letters().iter().find(|&&l| l >= self.base.n()) {
            return Err(Error::Range(format!(
                "letter {bad} outside alphabet 0..{}",
                self.base.n()
            )));
        }
        Ok(word.index(self.base.n()))
    }

    /// The innermost copies of the base graph: block `i` holds the vertices
    /// whose words share the length-`t-1` prefix of rank `i`. Every edge
    /// inside a block comes from a base edge on the last letter.
    pub fn copy_partition(&self) -> Vec<Range<usize>> {
        let n = self.base.n();
        let copies = self.graph.n() / n;
        (0..copies).map(|i| i * n..(i + 1) * n).collect()
    }
}

/// Builds `S(base, t)` refusing more than [`DEFAULT_SIZE_LIMIT`] vertices.
pub fn sierpinski(base: &Graph, t: usize) -> Result<SierpinskiGraph> {
    sierpinski_with_limit(base, t, DEFAULT_SIZE_LIMIT)
}

/// Builds `S(base, t)` with an explicit vertex-count ceiling.
pub fn sierpinski_with_limit(base: &Graph, t: usize, limit: usize) -> Result<SierpinskiGraph> {
    if t < 1 {
        return Err(Error::InvalidDepth("depth must be at least 1".into()));
    }
    let n = base.n();
    let total = checked_power(n, t)?;
    if total > limit {
        return Err(Error::SizeLimit(format!(
            "S(G, {t}) on a base of order {n} has {total} vertices, over the limit {limit}"
        )));
    }

    // For scale r, words split as w . x . y^(r-1) with |w| = t - r. The
    // repeated tail y^(r-1) has value y * (n^(r-1) - 1) / (n - 1); the loop
    // body only runs when the base has an edge, hence n >= 2 and the
    // division is well defined.
    let mut edges = Vec::new();
    for r in 1..=t {
        let block = power(n, r - 1);
        let rep = |letter: usize| letter * (block - 1) / (n - 1);
        let prefixes = power(n, t - r);
        for w in 0..prefixes {
            for &(x, y) in base.edges() {
                let a = (w * n + x) * block + rep(y);
                let b = (w * n + y) * block + rep(x);
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_edges(total, edges)?;

    let extremes = if n == 1 {
        vec![0]
    } else {
        (0..n).map(|x| x * (total - 1) / (n - 1)).collect()
    };
    Ok(SierpinskiGraph {
        base: base.clone(),
        t,
        graph,
        extremes,
    })
}

fn power(n: usize, e: usize) -> usize {
    n.pow(e as u32)
}

fn checked_power(n: usize, e: usize) -> Result<usize> {
    let e: u32 = e
        .try_into()
        .map_err(|_| Error::SizeLimit(format!("depth {e} is out of range")))?;
    n.checked_pow(e)
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{e} overflows the vertex index space")))
}
