//! Exact branch-and-bound solvers for the two domination numbers.
//!
//! The double Roman search branches over the values 3, 2, 0 only: an
//! optimal labeling never needs the value 1 (any 1-vertex can be folded
//! into its supporting neighbor), so dropping it shrinks the tree without
//! losing optimality. The Roman search covers the full range 2, 1, 0.
//!
//! The contract is exact weights and valid witnesses. Witness identity is
//! not guaranteed under parallel execution: threads share the incumbent
//! weight through an atomic, so which of several equally light witnesses
//! survives depends on scheduling. Weights are deterministic on every run.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::assignment::{Assignment, Parameter};
use crate::domination::verify;
use crate::graph::Graph;

const UNASSIGNED: u8 = u8::MAX;
/// Node-count flush granularity; budget overshoot stays within one batch
/// per worker.
const FLUSH_EVERY: u64 = 64;
const TIME_CHECK_EVERY: u64 = 1024;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Stop after roughly this many explored branch nodes.
    pub budget_nodes: Option<u64>,
    /// Stop once this much wall-clock time has elapsed.
    pub budget_time: Option<Duration>,
    /// Explore the tree with rayon. Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget_nodes: None,
            budget_time: None,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveStats {
    /// Branch nodes (value assignments) explored.
    pub nodes: u64,
    pub elapsed: Duration,
    /// True when a budget cut the search short.
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub assignment: Assignment,
    pub weight: u64,
    /// False only when a budget truncated the search; the weight is then an
    /// upper bound, never wrong, just possibly improvable.
    pub optimal: bool,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn parameter(&self) -> Parameter {
        self.assignment.kind()
    }
}

impl fmt::Display for SolveResult {
    /// The wire format consumed by scripts: a `key=value` header line, then
    /// the witness in assignment-file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "parameter={} weight={} optimal={}",
            self.parameter().token(),
            self.weight,
            self.optimal
        )?;
        f.write_str(&self.assignment.emit())
    }
}

/// Exact minimum weight of a double Roman labeling, with witness.
pub fn exact_gamma_dr(graph: &Graph) -> SolveResult {
    solve(graph, Parameter::DoubleRoman, &SolveOptions::default())
}

/// Exact minimum weight of a Roman labeling, with witness.
pub fn exact_gamma_r(graph: &Graph) -> SolveResult {
    solve(graph, Parameter::Roman, &SolveOptions::default())
}

pub fn solve(graph: &Graph, param: Parameter, opts: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let incumbent = greedy_cover(graph, param);
    let incumbent_weight = incumbent.iter().map(|&v| u64::from(v)).sum();

    // Branch on high-degree vertices first: their values constrain the most
    // neighbors, so infeasibility and bound pruning trigger early.
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));

    let ctx = Ctx {
        graph,
        param,
        order,
        values: match param {
            Parameter::DoubleRoman => &[3, 2, 0],
            Parameter::Roman => &[2, 1, 0],
        },
        incumbent_weight,
        budget_nodes: opts.budget_nodes,
        deadline: opts.budget_time.map(|d| start + d),
    };
    let shared = Shared {
        best: AtomicU64::new(incumbent_weight),
        nodes: AtomicU64::new(0),
        truncated: AtomicBool::new(false),
    };

    let use_parallel = cfg!(feature = "parallel") && opts.parallel;
    let frontier = if use_parallel {
        expand_frontier(&ctx, &shared, frontier_target())
    } else {
        vec![Vec::new()]
    };

    let outcomes: Vec<Option<(u64, Vec<u8>)>> = run_tasks(&ctx, &shared, &frontier, use_parallel);

    let mut weight = incumbent_weight;
    let mut values = incumbent;
    for found in outcomes.into_iter().flatten() {
        if found.0 < weight {
            weight = found.0;
            values = found.1;
        }
    }

    let truncated = shared.truncated.load(Ordering::Relaxed);
    let assignment = Assignment::new(param, values).expect("search only assigns in-range values");
    debug_assert!(verify(graph, &assignment).unwrap().is_valid());
    debug_assert_eq!(assignment.weight(), weight);
    SolveResult {
        assignment,
        weight,
        optimal: !truncated,
        stats: SolveStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            elapsed: start.elapsed(),
            truncated,
        },
    }
}

struct Ctx<'a> {
    graph: &'a Graph,
    param: Parameter,
    order: Vec<usize>,
    values: &'static [u8],
    incumbent_weight: u64,
    budget_nodes: Option<u64>,
    deadline: Option<Instant>,
}

struct Shared {
    best: AtomicU64,
    nodes: AtomicU64,
    truncated: AtomicBool,
}

#[cfg(feature = "parallel")]
fn frontier_target() -> usize {
    (rayon::current_num_threads() * 8).max(64)
}

#[cfg(not(feature = "parallel"))]
fn frontier_target() -> usize {
    1
}

fn run_tasks(
    ctx: &Ctx,
    shared: &Shared,
    frontier: &[Vec<u8>],
    use_parallel: bool,
) -> Vec<Option<(u64, Vec<u8>)>> {
    #[cfg(feature = "parallel")]
    if use_parallel {
        use rayon::prelude::*;
        return frontier
            .par_iter()
            .map(|prefix| run_prefix(ctx, shared, prefix))
            .collect();
    }
    let _ = use_parallel;
    frontier
        .iter()
        .map(|prefix| run_prefix(ctx, shared, prefix))
        .collect()
}

/// Mutable search state for one worker: values plus, per vertex, counts of
/// assigned 2- and 3-neighbors and of still-unassigned neighbors.
struct State {
    val: Vec<u8>,
    cnt2: Vec<u32>,
    cnt3: Vec<u32>,
    open: Vec<u32>,
    weight: u64,
}

impl State {
    fn new(graph: &Graph) -> Self {
        State {
            val: vec![UNASSIGNED; graph.n()],
            cnt2: vec![0; graph.n()],
            cnt3: vec![0; graph.n()],
            open: (0..graph.n()).map(|v| graph.degree(v) as u32).collect(),
            weight: 0,
        }
    }

    fn covered(&self, param: Parameter, v: usize) -> bool {
        match param {
            Parameter::DoubleRoman => self.cnt3[v] >= 1 || self.cnt2[v] >= 2,
            Parameter::Roman => self.cnt2[v] >= 1,
        }
    }

    /// Assigns `value` to `v` and reports whether the partial labeling is
    /// now beyond repair: some 0-vertex with no unassigned neighbors left
    /// and not enough high-valued ones.
    fn assign(&mut self, graph: &Graph, param: Parameter, v: usize, value: u8) -> bool {
        self.val[v] = value;
        self.weight += u64::from(value);
        for &u in graph.neighbors(v) {
            self.open[u] -= 1;
            match value {
                2 => self.cnt2[u] += 1,
                3 => self.cnt3[u] += 1,
                _ => {}
            }
        }
        let mut dead =
            value == 0 && self.open[v] == 0 && !self.covered(param, v);
        if !dead {
            dead = graph.neighbors(v).iter().any(|&u| {
                self.val[u] == 0 && self.open[u] == 0 && !self.covered(param, u)
            });
        }
        dead
    }

    fn unassign(&mut self, graph: &Graph, v: usize, value: u8) {
        self.val[v] = UNASSIGNED;
        self.weight -= u64::from(value);
        for &u in graph.neighbors(v) {
            self.open[u] += 1;
            match value {
                2 => self.cnt2[u] -= 1,
                3 => self.cnt3[u] -= 1,
                _ => {}
            }
        }
    }
}

/// Admissible completion bound: current weight plus a greedy packing of
/// still-unmet demands whose candidate neighborhoods do not overlap.
///
/// Demands and their minimum completion costs, counting only weight that
/// must land inside the demand's own closed neighborhood:
/// - an assigned 0-vertex not yet covered needs 2 more (second 2-neighbor)
///   or 3 (fresh 3-neighbor) in the double Roman case, 2 in the Roman case;
/// - an unassigned uncovered vertex needs 2 (take the value 2 itself) in
///   the double Roman search space, which excludes the value 1, and 1 in
///   the Roman one.
///
/// Costs of demands with disjoint candidate sets add, so the sum never
/// exceeds the true completion cost.
fn lower_bound(ctx: &Ctx, st: &State, used: &mut [bool]) -> u64 {
    used.fill(false);
    let mut extra = 0u64;
    for v in 0..ctx.graph.n() {
        let cost = match st.val[v] {
            0 if !st.covered(ctx.param, v) => match ctx.param {
                Parameter::DoubleRoman => {
                    if st.cnt2[v] == 1 {
                        2
                    } else {
                        3
                    }
                }
                Parameter::Roman => 2,
            },
            UNASSIGNED if !st.covered(ctx.param, v) => match ctx.param {
                Parameter::DoubleRoman => 2,
                Parameter::Roman => 1,
            },
            _ => continue,
        };
        let self_free = st.val[v] == UNASSIGNED;
        if self_free && used[v] {
            continue;
        }
        if ctx
            .graph
            .neighbors(v)
            .iter()
            .any(|&u| st.val[u] == UNASSIGNED && used[u])
        {
            continue;
        }
        if self_free {
            used[v] = true;
        }
        for &u in ctx.graph.neighbors(v) {
            if st.val[u] == UNASSIGNED {
                used[u] = true;
            }
        }
        extra += cost;
    }
    st.weight + extra
}

struct Local {
    best_weight: u64,
    best: Option<Vec<u8>>,
    pending: u64,
    since_time_check: u64,
    scratch: Vec<bool>,
}

impl Local {
    fn new(ctx: &Ctx) -> Self {
        Local {
            best_weight: ctx.incumbent_weight,
            best: None,
            pending: 0,
            since_time_check: 0,
            scratch: vec![false; ctx.graph.n()],
        }
    }

    /// Counts one node against the budgets; false means stop searching.
    fn tick(&mut self, ctx: &Ctx, shared: &Shared) -> bool {
        if shared.truncated.load(Ordering::Relaxed) {
            return false;
        }
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush(ctx, shared);
        }
        self.since_time_check += 1;
        if self.since_time_check >= TIME_CHECK_EVERY {
            self.since_time_check = 0;
            if let Some(deadline) = ctx.deadline {
                if Instant::now() >= deadline {
                    shared.truncated.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    fn flush(&mut self, ctx: &Ctx, shared: &Shared) {
        if self.pending == 0 {
            return;
        }
        let total = shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if let Some(budget) = ctx.budget_nodes {
            if total >= budget {
                shared.truncated.store(true, Ordering::Relaxed);
            }
        }
    }

    fn record(&mut self, st: &State, shared: &Shared) {
        if st.weight < self.best_weight {
            self.best_weight = st.weight;
            self.best = Some(st.val.clone());
            shared.best.fetch_min(st.weight, Ordering::Relaxed);
        }
    }
}

/// Searches the subtree under `prefix` (values for the first prefix
/// vertices in branch order). Returns the best strict improvement found.
fn run_prefix(ctx: &Ctx, shared: &Shared, prefix: &[u8]) -> Option<(u64, Vec<u8>)> {
    let mut st = State::new(ctx.graph);
    for (depth, &value) in prefix.iter().enumerate() {
        st.assign(ctx.graph, ctx.param, ctx.order[depth], value);
    }
    let mut local = Local::new(ctx);
    dfs(ctx, shared, &mut st, prefix.len(), &mut local);
    local.flush(ctx, shared);
    local.best.map(|vals| (local.best_weight, vals))
}

/// Iterative depth-first branch and bound below a fixed prefix. `cursor`
/// tracks the next value to try per level, `chosen` the value currently
/// assigned there; the top of the loop always unassigns before advancing,
/// which keeps backtracking uniform.
fn dfs(ctx: &Ctx, shared: &Shared, st: &mut State, prefix_depth: usize, local: &mut Local) {
    if let Some(deadline) = ctx.deadline {
        if Instant::now() >= deadline {
            shared.truncated.store(true, Ordering::Relaxed);
            return;
        }
    }
    let span = ctx.graph.n() - prefix_depth;
    if span == 0 {
        local.record(st, shared);
        return;
    }
    let mut cursor = vec![0usize; span];
    let mut chosen = vec![UNASSIGNED; span];
    let mut level = 0usize;
    loop {
        let vertex = ctx.order[prefix_depth + level];
        if chosen[level] != UNASSIGNED {
            st.unassign(ctx.graph, vertex, chosen[level]);
            chosen[level] = UNASSIGNED;
        }
        if cursor[level] == ctx.values.len() {
            cursor[level] = 0;
            if level == 0 {
                return;
            }
            level -= 1;
            continue;
        }
        let value = ctx.values[cursor[level]];
        cursor[level] += 1;
        if !local.tick(ctx, shared) {
            for l in (0..level).rev() {
                st.unassign(ctx.graph, ctx.order[prefix_depth + l], chosen[l]);
            }
            return;
        }
        let dead = st.assign(ctx.graph, ctx.param, vertex, value);
        chosen[level] = value;
        if dead {
            continue;
        }
        // Only strict improvements matter, so >= prunes correctly.
        if lower_bound(ctx, st, &mut local.scratch) >= shared.best.load(Ordering::Relaxed) {
            continue;
        }
        if level + 1 == span {
            local.record(st, shared);
            continue;
        }
        level += 1;
    }
}

/// Breadth-first expansion of the first few branch levels into independent
/// subtree roots for the workers. Prefixes that are already dead or cannot
/// beat the greedy incumbent are dropped here. When pruning keeps the tree
/// narrow this phase can carry the whole search, so it counts nodes and
/// honors budgets like the depth-first phase does.
fn expand_frontier(ctx: &Ctx, shared: &Shared, target: usize) -> Vec<Vec<u8>> {
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    let mut depth = 0;
    let mut scratch = vec![false; ctx.graph.n()];
    while frontier.len() < target && depth < ctx.graph.n() {
        if let Some(deadline) = ctx.deadline {
            if Instant::now() >= deadline {
                shared.truncated.store(true, Ordering::Relaxed);
                return frontier;
            }
        }
        let mut next = Vec::with_capacity(frontier.len() * ctx.values.len());
        for prefix in &frontier {
            let mut st = State::new(ctx.graph);
            for (d, &value) in prefix.iter().enumerate() {
                st.assign(ctx.graph, ctx.param, ctx.order[d], value);
            }
            for &value in ctx.values {
                let dead = st.assign(ctx.graph, ctx.param, ctx.order[depth], value);
                if !dead && lower_bound(ctx, &st, &mut scratch) < ctx.incumbent_weight {
                    let mut child = prefix.clone();
                    child.push(value);
                    next.push(child);
                }
                st.unassign(ctx.graph, ctx.order[depth], value);
            }
        }
        let explored = (frontier.len() * ctx.values.len()) as u64;
        let total = shared.nodes.fetch_add(explored, Ordering::Relaxed) + explored;
        if let Some(budget) = ctx.budget_nodes {
            if total >= budget {
                shared.truncated.store(true, Ordering::Relaxed);
                return next;
            }
        }
        if next.is_empty() {
            // Nothing can beat the incumbent; it is optimal.
            return Vec::new();
        }
        frontier = next;
        depth += 1;
    }
    frontier
}

/// Deterministic greedy cover used as the initial incumbent: repeatedly
/// give the vertex covering the most still-uncovered closed neighbors the
/// top value. Every uncovered vertex ends adjacent to (or is) a top-valued
/// vertex, which is valid for both parameters.
fn greedy_cover(graph: &Graph, param: Parameter) -> Vec<u8> {
    let top = param.max_value();
    let mut values = vec![0u8; graph.n()];
    let mut covered = vec![false; graph.n()];
    let mut left = graph.n();
    while left > 0 {
        let mut pick = 0;
        let mut pick_gain = 0;
        for v in 0..graph.n() {
            let gain = graph
                .neighbors(v)
                .iter()
                .chain(std::iter::once(&v))
                .filter(|&&u| !covered[u])
                .count();
            if gain > pick_gain {
                pick = v;
                pick_gain = gain;
            }
        }
        // An isolated vertex only covers itself; the value 2 already frees
        // it from both labeling rules.
        values[pick] = if graph.degree(pick) == 0 { 2 } else { top };
        for &u in graph.neighbors(pick).iter().chain(std::iter::once(&pick)) {
            if !covered[u] {
                covered[u] = true;
                left -= 1;
            }
        }
    }
    values
}
