//! Exact minimum distance-k dominating sets for small instances.
//!
//! Distance domination is a set-cover problem over the `k`-balls `B_k(v)`.
//! The search branches on the lowest-index uncovered vertex: one of its
//! coverers must be in any dominating set, so each branch picks one of them.
//! A branch is cut when the remaining picks cannot cover what is left even if
//! each covered as much as the best single candidate.
//!
//! An exhausted node budget is reported as [`SearchOutcome::Inconclusive`],
//! never as absence.

use crate::digraph::{ball, GeneralizedDigraph};
use crate::domination::sums;
use crate::error::{Error, Result};
use crate::vertex_set::{words_for, VertexSet};

/// Largest `n` for which a coverage table is built.
pub const DEFAULT_TABLE_CEILING: u64 = 5000;
/// Default search budget, in branch-and-bound nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub table_ceiling: u64,
    /// Zero disables the oracle.
    pub node_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { table_ceiling: DEFAULT_TABLE_CEILING, node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl OracleLimits {
    pub fn enabled(&self) -> bool {
        self.node_budget > 0
    }

    pub fn admits(&self, g: &GeneralizedDigraph) -> bool {
        self.enabled() && g.n() <= self.table_ceiling
    }
}

/// `B_k(v)` for every vertex, plus the inverse relation.
#[derive(Debug, Clone)]
pub struct CoverageTable {
    graph: GeneralizedDigraph,
    k: u32,
    words: usize,
    /// Row `v` holds the bitset of `B_k(v)`.
    balls: Vec<u64>,
    /// `coverers[t]` = every `u` with `t ∈ B_k(u)`, ascending.
    coverers: Vec<Vec<u32>>,
}

impl CoverageTable {
    pub fn graph(&self) -> &GeneralizedDigraph {
        &self.graph
    }

    pub fn radius(&self) -> u32 {
        self.k
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.balls[v * self.words..(v + 1) * self.words]
    }

    pub fn ball_of(&self, v: u64) -> VertexSet {
        VertexSet::from_words(self.graph.n(), self.row(v as usize).to_vec())
    }

    pub fn coverers_of(&self, t: u64) -> &[u32] {
        &self.coverers[t as usize]
    }
}

pub fn coverage_table(g: &GeneralizedDigraph, k: u32, ceiling: u64) -> Result<CoverageTable> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::RangeRefused(format!(
            "{g}: n = {n} exceeds the oracle ceiling of {ceiling}"
        )));
    }
    let words = words_for(n);
    let mut balls = Vec::with_capacity(n as usize * words);
    let mut coverers = vec![Vec::new(); n as usize];
    for v in 0..n {
        let single = VertexSet::from_members(n, [v])?;
        let b = ball(g, &single, k).covered;
        for t in b.iter() {
            coverers[t as usize].push(v as u32);
        }
        balls.extend_from_slice(b.words());
    }
    Ok(CoverageTable { graph: *g, k, words, balls, coverers })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(VertexSet),
    Absent,
    Inconclusive,
}

/// Node counter shared across the searches of one query.
#[derive(Debug, Clone, Copy)]
pub struct NodeBudget {
    limit: u64,
    used: u64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

struct Search<'a> {
    table: &'a CoverageTable,
    budget: &'a mut NodeBudget,
    chosen: Vec<u32>,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, covered: &[u64], uncovered: u64, remaining: u64) -> Step {
        if uncovered == 0 {
            return Step::Found;
        }
        if remaining == 0 {
            return Step::Dead;
        }
        if !self.budget.tick() {
            return Step::OutOfBudget;
        }
        let t = self.table;
        let n = t.graph.n() as usize;
        let gain = |v: usize| -> u64 {
            t.row(v).iter().zip(covered).map(|(b, c)| (b & !c).count_ones() as u64).sum()
        };
        let best = (0..n).map(gain).max().unwrap_or(0);
        if uncovered > remaining.saturating_mul(best) {
            return Step::Dead;
        }
        let target = first_unset(covered, n).expect("uncovered > 0");
        let mut next = covered.to_vec();
        for &u in &t.coverers[target] {
            let g = gain(u as usize);
            for (dst, (src, b)) in next.iter_mut().zip(covered.iter().zip(t.row(u as usize))) {
                *dst = src | b;
            }
            self.chosen.push(u);
            match self.run(&next, uncovered - g, remaining - 1) {
                Step::Dead => {
                    self.chosen.pop();
                }
                other => return other,
            }
        }
        Step::Dead
    }
}

fn first_unset(words: &[u64], n: usize) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != u64::MAX)
        .map(|(i, w)| i * 64 + (!w).trailing_zeros() as usize)
        .filter(|&v| v < n)
}

/// Decide whether some set of exactly `size` vertices distance-`k`-dominates.
///
/// Found witnesses smaller than `size` are padded with the lowest unused
/// vertices. The first witness in branching order is returned.
pub fn exists_dominating_of_size(
    table: &CoverageTable,
    size: u64,
    budget: &mut NodeBudget,
) -> Result<SearchOutcome> {
    let n = table.graph.n();
    if size == 0 {
        return Err(Error::invalid("dominating set size must be at least 1"));
    }
    if size >= n {
        return Ok(SearchOutcome::Found(VertexSet::from_members(n, 0..n)?));
    }
    let covered = vec![0u64; table.words];
    let mut search = Search { table, budget, chosen: Vec::new() };
    match search.run(&covered, n, size) {
        Step::Found => {
            let mut set = VertexSet::from_members(n, search.chosen.iter().map(|&u| u as u64))?;
            let mut pad = 0;
            while set.len() < size {
                set.insert(pad);
                pad += 1;
            }
            Ok(SearchOutcome::Found(set))
        }
        Step::Dead => Ok(SearchOutcome::Absent),
        Step::OutOfBudget => Ok(SearchOutcome::Inconclusive),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinOutcome {
    Minimum { gamma: u64, witness: VertexSet },
    /// Every size below `refuted_below` was ruled out before the budget ran out.
    Inconclusive { refuted_below: u64 },
}

/// `γ_k(G)` by increasing `s` from the counting lower bound until a set is found.
pub fn min_dominating(g: &GeneralizedDigraph, k: u32, limits: &OracleLimits) -> Result<MinOutcome> {
    let table = coverage_table(g, k, limits.table_ceiling)?;
    let mut budget = NodeBudget::new(limits.node_budget);
    min_dominating_from(&table, &mut budget, None)
}

/// As [`min_dominating`], on a prebuilt table. When `stop_at` is given the
/// search does not try that size or larger and reports `Inconclusive` with
/// `refuted_below = stop_at` if nothing smaller exists.
pub fn min_dominating_from(
    table: &CoverageTable,
    budget: &mut NodeBudget,
    stop_at: Option<u64>,
) -> Result<MinOutcome> {
    let g = table.graph;
    let start = if table.k == 0 {
        g.n()
    } else {
        sums(g.n(), g.d(), table.k)?.lower.to_u64()?
    };
    let mut s = start.max(1);
    loop {
        if stop_at.is_some_and(|cap| s >= cap) {
            return Ok(MinOutcome::Inconclusive { refuted_below: s });
        }
        match exists_dominating_of_size(table, s, budget)? {
            SearchOutcome::Found(witness) => return Ok(MinOutcome::Minimum { gamma: s, witness }),
            SearchOutcome::Absent => s += 1,
            SearchOutcome::Inconclusive => return Ok(MinOutcome::Inconclusive { refuted_below: s }),
        }
    }
}
