//! Constructive labelings of `S(G, t)` lifted from a base labeling, the
//! matching weight formulas, and bound consistency reports.
//!
//! Starting from a valid 1-free double Roman labeling `f` of the base,
//! three lifts label `S(G, t)` (`t >= 2`), each a valid double Roman
//! labeling of the big graph:
//! - replicate: every word `w.x` takes `f(x)`;
//! - demote corners: additionally, words ending in a repeated 3-letter
//!   (`w.u.u` with `f(u) = 3`) drop to 2 — each such corner already has
//!   3-valued partners in two copies;
//! - zero corners: of those, the words `w.v.v` where `v` also has a
//!   3-neighbor with value 3 drop all the way to 0.

use std::fmt;

use crate::assignment::{Assignment, Parameter};
use crate::domination::is_drdf;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sierpinski::{sierpinski, DEFAULT_SIZE_LIMIT};
use crate::solver::{exact_gamma_dr, solve, SolveOptions};

/// Which lift to apply. The wire tokens `g`, `g1`, `g2` name the stages in
/// CLI flags and report keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Replicate,
    DemoteCorners,
    ZeroCorners,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::Replicate, Stage::DemoteCorners, Stage::ZeroCorners];

    pub fn token(self) -> &'static str {
        match self {
            Stage::Replicate => "g",
            Stage::DemoteCorners => "g1",
            Stage::ZeroCorners => "g2",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        match token {
            "g" => Ok(Stage::Replicate),
            "g1" => Ok(Stage::DemoteCorners),
            "g2" => Ok(Stage::ZeroCorners),
            other => Err(Error::Precondition(format!(
                "unknown stage `{other}`, expected g, g1 or g2"
            ))),
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A lifted labeling together with the bookkeeping behind its weight.
#[derive(Clone, Debug)]
pub struct LiftResult {
    pub stage: Stage,
    /// Labeling of `S(base, t)` in vertex-index order.
    pub assignment: Assignment,
    /// Closed-form weight; always equals `assignment.weight()`.
    pub predicted_weight: u64,
    /// Base vertices labeled 3 by `f`.
    pub v3: usize,
    /// Of those, the ones with a 3-labeled neighbor.
    pub d3: usize,
    /// Lifted corner vertices eligible for demotion (`n^(t-2) * v3`).
    pub corner_threes: usize,
    /// Lifted corner vertices eligible for zeroing (`n^(t-2) * d3`).
    pub corner_paired_threes: usize,
}

/// Base vertices labeled 3 that have a 3-labeled neighbor.
pub fn paired_threes(base: &Graph, f: &Assignment) -> Result<VertexSet> {
    if f.kind() != Parameter::DoubleRoman {
        return Err(Error::ShapeMismatch(format!(
            "expected a {} assignment, got {}",
            Parameter::DoubleRoman,
            f.kind()
        )));
    }
    if f.len() != base.n() {
        return Err(Error::ShapeMismatch(format!(
            "assignment covers {} vertices, graph has {}",
            f.len(),
            base.n()
        )));
    }
    Ok(VertexSet::from_iter((0..base.n()).filter(|&v| {
        f.value(v) == 3 && base.neighbors(v).iter().any(|&u| f.value(u) == 3)
    })))
}

fn require_liftable(base: &Graph, t: usize, f: &Assignment) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidDepth(format!(
            "lifts need depth at least 2; S(G, 1) is the base graph itself (got t = {t})"
        )));
    }
    if !is_drdf(base, f)?.is_valid() {
        return Err(Error::Precondition(
            "base labeling is not a valid double Roman labeling".into(),
        ));
    }
    if let Some(v) = f.values().iter().position(|&x| x == 1) {
        return Err(Error::Precondition(format!(
            "base labeling assigns 1 to vertex {v}; lifts need a 1-free labeling"
        )));
    }
    Ok(())
}

/// Lifts the base labeling `f` to `S(base, t)` at the given stage.
pub fn lift(base: &Graph, t: usize, f: &Assignment, stage: Stage) -> Result<LiftResult> {
    require_liftable(base, t, f)?;
    let n = base.n();
    let total = checked_power(n, t)?;
    if total > DEFAULT_SIZE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "S(G, {t}) on a base of order {n} has {total} vertices, over the limit {DEFAULT_SIZE_LIMIT}"
        )));
    }
    let d3_set = paired_threes(base, f)?;
    let mut in_d3 = vec![false; n];
    for v in d3_set.iter() {
        in_d3[v] = true;
    }
    let v3 = f.values().iter().filter(|&&x| x == 3).count();
    let d3 = d3_set.len();
    let weight_f = f.weight();

    // Only the last two letters of a word decide its lifted value.
    let mut values = Vec::with_capacity(total);
    for idx in 0..total {
        let last = idx % n;
        let prev = (idx / n) % n;
        let fv = f.value(last);
        let corner = prev == last && fv == 3;
        values.push(match stage {
            Stage::Replicate => fv,
            Stage::DemoteCorners if corner => 2,
            Stage::ZeroCorners if corner && in_d3[last] => 0,
            Stage::ZeroCorners if corner => 2,
            _ => fv,
        });
    }

    let n64 = n as u64;
    let nt2 = n64.pow(t as u32 - 2);
    let predicted_weight = match stage {
        Stage::Replicate => nt2 * n64 * weight_f,
        Stage::DemoteCorners => nt2 * (n64 * weight_f - v3 as u64),
        Stage::ZeroCorners => nt2 * (n64 * weight_f - v3 as u64 - 2 * d3 as u64),
    };
    let assignment = Assignment::new(Parameter::DoubleRoman, values)?;
    debug_assert_eq!(assignment.weight(), predicted_weight);
    Ok(LiftResult {
        stage,
        assignment,
        predicted_weight,
        v3,
        d3,
        corner_threes: nt2 as usize * v3,
        corner_paired_threes: nt2 as usize * d3,
    })
}

fn check_bound_depth(t: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidDepth(format!(
            "bound formulas need depth at least 2; S(G, 1) is the base graph itself (got t = {t})"
        )));
    }
    Ok(())
}

fn checked_power(n: usize, t: usize) -> Result<usize> {
    n.checked_pow(t as u32)
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{t} overflows the vertex index space")))
}

/// `n^(t-2) * alpha(base) * gamma_dr(base)`, a floor under the double
/// Roman number of `S(base, t)`.
pub fn lower_bound_dr(base: &Graph, t: usize) -> Result<u64> {
    check_bound_depth(t)?;
    if base.n() < 2 {
        return Err(Error::InvalidOrder(
            "the lower bound needs a base of order at least 2".into(),
        ));
    }
    let (alpha, _) = base.independence_number();
    let gamma = exact_gamma_dr(base).weight;
    Ok((base.n() as u64).pow(t as u32 - 2) * alpha as u64 * gamma)
}

/// `n^(t-2) * alpha(base) * gamma_r(base)`, the Roman analogue.
pub fn lower_bound_r(base: &Graph, t: usize) -> Result<u64> {
    check_bound_depth(t)?;
    let (alpha, _) = base.independence_number();
    let gamma = crate::solver::exact_gamma_r(base).weight;
    Ok((base.n() as u64).pow(t as u32 - 2) * alpha as u64 * gamma)
}

/// `n^(t-2) * (n * gamma_dr(base) - |V3| - |D3|)`, a ceiling over the
/// double Roman number of `S(base, t)`; `f` must be an optimal 1-free
/// labeling because the formula substitutes its weight for the base's
/// double Roman number.
pub fn upper_bound_dr(base: &Graph, t: usize, f: &Assignment) -> Result<u64> {
    check_bound_depth(t)?;
    require_liftable(base, t, f)?;
    let optimum = exact_gamma_dr(base).weight;
    if f.weight() != optimum {
        return Err(Error::Precondition(format!(
            "base labeling has weight {}, but the optimum is {optimum}; the bound needs an optimal labeling",
            f.weight()
        )));
    }
    let v3 = f.values().iter().filter(|&&x| x == 3).count() as u64;
    let d3 = paired_threes(base, f)?.len() as u64;
    let n = base.n() as u64;
    Ok(n.pow(t as u32 - 2) * (n * f.weight() - v3 - d3))
}

/// An exact fraction in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    num: u128,
    den: u128,
}

impl Rational {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u128 {
        self.num
    }

    pub fn den(self) -> u128 {
        self.den
    }

    pub fn floor(self) -> u128 {
        self.num / self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Closed-form ceiling for the Roman number of `S(K_n, t)`:
/// `(2n^t + n - 1) / (n + 1)` for even `t`, `2(n^t + 1) / (n + 1)` for odd
/// `t`. Always an integer, since `n = -1` modulo `n + 1` makes both
/// numerators vanish there.
pub fn roman_upper_bound_complete(n: usize, t: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidOrder(
            "the formula needs a complete base of order at least 2".into(),
        ));
    }
    if t < 1 {
        return Err(Error::InvalidDepth("depth must be at least 1".into()));
    }
    let nt = (n as u128)
        .checked_pow(t as u32)
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{t} overflows")))?;
    let n = n as u128;
    let num = if t.is_multiple_of(2) { 2 * nt + n - 1 } else { 2 * (nt + 1) };
    Ok(Rational::new(num, n + 1))
}

/// One named inequality checked by a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

/// All bound and lift numbers for one `(base, t)` pair, with the
/// inequality verdicts tying them together.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub lower: u64,
    pub w_g: u64,
    pub w_g1: u64,
    pub w_g2: u64,
    pub upper_theorem: u64,
    /// Audit trail: the optimal base labeling's class sizes, since other
    /// optimal labelings can give different bound values.
    pub v3: usize,
    pub d3: usize,
    /// Exact value for `S(base, t)`, when solved to optimality.
    pub exact: Option<u64>,
    /// True when an exact solve was attempted; with `exact == None` it
    /// means the budget ran out.
    pub exact_attempted: bool,
    pub checks: Vec<Check>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for BoundsReport {
    /// Stable `key=value` lines for scripting.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lower={}", self.lower)?;
        writeln!(f, "w_g={}", self.w_g)?;
        writeln!(f, "w_g1={}", self.w_g1)?;
        writeln!(f, "w_g2={}", self.w_g2)?;
        writeln!(f, "upper_theorem={}", self.upper_theorem)?;
        writeln!(f, "v3={}", self.v3)?;
        writeln!(f, "d3={}", self.d3)?;
        match self.exact {
            Some(w) => writeln!(f, "exact={w}")?,
            None => writeln!(f, "exact=none")?,
        }
        write!(f, "verdict={}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Computes every bound and lift for `(base, t)` from one optimal base
/// labeling, optionally solving `S(base, t)` exactly under the given
/// budget options.
pub fn sandwich_report(
    base: &Graph,
    t: usize,
    exact_opts: Option<&SolveOptions>,
) -> Result<BoundsReport> {
    let lower = lower_bound_dr(base, t)?;
    let f = exact_gamma_dr(base).assignment;
    let g = lift(base, t, &f, Stage::Replicate)?;
    let g1 = lift(base, t, &f, Stage::DemoteCorners)?;
    let g2 = lift(base, t, &f, Stage::ZeroCorners)?;
    let upper_theorem = upper_bound_dr(base, t, &f)?;

    let exact_attempted = exact_opts.is_some();
    let exact = match exact_opts {
        None => None,
        Some(opts) => {
            let s = sierpinski(base, t)?;
            let res = solve(s.graph(), Parameter::DoubleRoman, opts);
            res.optimal.then_some(res.weight)
        }
    };

    let mut checks = vec![
        Check {
            name: "w_g1<=w_g",
            holds: g1.predicted_weight <= g.predicted_weight,
        },
        Check {
            name: "w_g2<=w_g1",
            holds: g2.predicted_weight <= g1.predicted_weight,
        },
        Check {
            name: "w_g2<=upper_theorem",
            holds: g2.predicted_weight <= upper_theorem,
        },
        Check {
            name: "lower<=upper_theorem",
            holds: lower <= upper_theorem,
        },
    ];
    if let Some(w) = exact {
        checks.push(Check {
            name: "lower<=exact",
            holds: lower <= w,
        });
        checks.push(Check {
            name: "exact<=w_g2",
            holds: w <= g2.predicted_weight,
        });
        checks.push(Check {
            name: "exact<=upper_theorem",
            holds: w <= upper_theorem,
        });
    }

    Ok(BoundsReport {
        lower,
        w_g: g.predicted_weight,
        w_g1: g1.predicted_weight,
        w_g2: g2.predicted_weight,
        upper_theorem,
        v3: g2.v3,
        d3: g2.d3,
        exact,
        exact_attempted,
        checks,
    })
}
