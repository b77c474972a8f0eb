//! Simple undirected graphs over canonical 0-based vertex indices.
//!
//! Graphs are immutable after construction so they can be shared read-only
//! across solver branches. The text format is a newline-delimited edge list:
//! a header line `n m`, then `m` lines `u v`; `#` starts a comment line.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted
/// lexicographically; neighbor lists are sorted. Two graphs compare equal
/// iff they have the same order and the same canonical edge list.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    ///
    /// Endpoint order within a pair is irrelevant. Self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder("graph order must be at least 1".into()));
        }
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidEdge(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidEdge(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidEdge(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
        }
        Ok(Self::build(n, seen.into_iter().collect()))
    }

    /// Internal constructor; `edges` must already be canonical, sorted and
    /// duplicate-free with all endpoints in range.
    fn build(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder("complete graph needs order at least 1".into()));
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Ok(Self::build(n, edges))
    }

    /// The path on `n` vertices, edges `i -- i+1`.
    ///
    /// # Panics
    /// Panics if `n == 0`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one vertex");
        Self::build(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    /// The cycle on `n >= 3` vertices.
    ///
    /// # Panics
    /// Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::build(n, edges)
    }

    /// The star on `n >= 2` vertices: center 0 joined to `1..n`.
    ///
    /// # Panics
    /// Panics if `n < 2`.
    pub fn star(n: usize) -> Self {
        assert!(n >= 2, "star needs at least two vertices");
        Self::build(n, (1..n).map(|v| (0, v)).collect())
    }

    /// An Erdos-Renyi random graph: each pair becomes an edge with
    /// probability `p`, drawn from `rng` in a fixed pair order.
    pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder("random graph needs order at least 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Range(format!("edge probability {p} not in [0, 1]")));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self::build(n, edges))
    }

    /// Parses the text format. See the module docs for the grammar; errors
    /// carry the 1-based line number of the offending line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data = text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                None
            } else {
                Some((i + 1, line))
            }
        });
        let total_lines = text.lines().count();

        let (header_no, header) = data
            .next()
            .ok_or_else(|| Error::parse(total_lines.max(1), "missing `n m` header"))?;
        let mut fields = header.split_ascii_whitespace();
        let n: usize = parse_field(&mut fields, header_no, "vertex count")?;
        let m: usize = parse_field(&mut fields, header_no, "edge count")?;
        if fields.next().is_some() {
            return Err(Error::parse(header_no, "trailing tokens after `n m` header"));
        }
        if n < 1 {
            return Err(Error::parse(header_no, "graph order must be at least 1"));
        }

        let mut seen = BTreeSet::new();
        for _ in 0..m {
            let (line_no, line) = data.next().ok_or_else(|| {
                Error::parse(
                    total_lines + 1,
                    format!("expected {m} edge lines, found {}", seen.len()),
                )
            })?;
            let mut fields = line.split_ascii_whitespace();
            let a: usize = parse_field(&mut fields, line_no, "edge endpoint")?;
            let b: usize = parse_field(&mut fields, line_no, "edge endpoint")?;
            if fields.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after edge"));
            }
            if a == b {
                return Err(Error::parse(line_no, format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::parse(
                    line_no,
                    format!("edge ({a}, {b}) has an endpoint outside 0..{n}"),
                ));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::parse(line_no, format!("duplicate edge ({}, {})", e.0, e.1)));
            }
        }
        if let Some((line_no, _)) = data.next() {
            return Err(Error::parse(line_no, format!("more than {m} edge lines")));
        }
        Ok(Self::build(n, seen.into_iter().collect()))
    }

    /// Renders the canonical text form: `n m` then edges sorted by
    /// (min endpoint, max endpoint). `parse(emit(g)) == g`.
    pub fn emit(&self) -> String {
        let mut out = format!("{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push('\n');
            out.push_str(&format!("{u} {v}"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The subgraph induced by a non-empty vertex set, relabeled to
    /// `0..|set|` in ascending original order, plus the map from new
    /// index to original index.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::Precondition(
                "induced subgraph needs a non-empty vertex set".into(),
            ));
        }
        let map: Vec<usize> = set.iter().collect();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::Range(format!("vertex {v} outside 0..{}", self.n)));
        }
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
            }
        }
        edges.sort_unstable();
        Ok((Self::build(map.len(), edges), map))
    }

    /// True iff no edge has both endpoints in `set`. The empty set is
    /// independent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let mut member = vec![false; self.n];
        for v in set.iter() {
            if v >= self.n {
                return false;
            }
            member[v] = true;
        }
        self.edges.iter().all(|&(u, v)| !(member[u] && member[v]))
    }

    /// Exact independence number with a maximum independent set witness.
    ///
    /// Branch and bound: repeatedly branch on a maximum-degree live vertex
    /// (taken into the set versus discarded), pruning when the live count
    /// cannot beat the incumbent. Intended for desk-scale graphs.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        let mut state = MisState {
            graph: self,
            alive: vec![true; self.n],
            alive_count: self.n,
            chosen: Vec::new(),
            best: Vec::new(),
        };
        state.search();
        let best = state.best;
        (best.len(), VertexSet::from_iter(best))
    }
}

fn parse_field<'a>(
    fields: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize> {
    let tok = fields
        .next()
        .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

struct MisState<'a> {
    graph: &'a Graph,
    alive: Vec<bool>,
    alive_count: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl MisState<'_> {
    fn search(&mut self) {
        if self.chosen.len() + self.alive_count <= self.best.len() {
            return;
        }
        // Branch on the live vertex with the most live neighbors; vertices
        // without live neighbors can always be taken greedily.
        let mut pick = None;
        let mut pick_deg = 0;
        let mut isolated = Vec::new();
        for v in 0..self.graph.n() {
            if !self.alive[v] {
                continue;
            }
            let deg = self
                .graph
                .neighbors(v)
                .iter()
                .filter(|&&u| self.alive[u])
                .count();
            if deg == 0 {
                isolated.push(v);
            } else if pick.is_none() || deg > pick_deg {
                pick = Some(v);
                pick_deg = deg;
            }
        }
        for &v in &isolated {
            self.alive[v] = false;
            self.alive_count -= 1;
            self.chosen.push(v);
        }
        match pick {
            None => {
                if self.chosen.len() > self.best.len() {
                    self.best = self.chosen.clone();
                }
            }
            Some(v) => {
                // Take v: drop its closed neighborhood.
                let mut removed = vec![v];
                self.alive[v] = false;
                for &u in self.graph.neighbors(v) {
                    if self.alive[u] {
                        self.alive[u] = false;
                        removed.push(u);
                    }
                }
                self.alive_count -= removed.len();
                self.chosen.push(v);
                self.search();
                self.chosen.pop();
                self.alive_count += removed.len();
                for &u in &removed {
                    self.alive[u] = true;
                }

                // Skip v.
                self.alive[v] = false;
                self.alive_count -= 1;
                self.search();
                self.alive[v] = true;
                self.alive_count += 1;
            }
        }
        for &v in isolated.iter().rev() {
            self.chosen.pop();
            self.alive[v] = true;
            self.alive_count += 1;
        }
    }
}

/// A set of vertex indices of some graph, iterated in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
