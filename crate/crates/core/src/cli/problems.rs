//! Empirical searches for counterexamples to two open conjectures.
//!
//! * `debruijn-necessity`: whenever `γ_k(G_B(n, d)) = L`, the gcd condition
//!   holds. A counterexample is an instance with a verified size-`L` set
//!   where the gcd condition fails.
//! * `kautz-upper`: whenever the Kautz lower-prefix condition fails,
//!   `γ_k(G_K(n, d)) = ⌈n/(d^{k−1} + d^k)⌉`. A counterexample is a verified
//!   dominating set smaller than that.
//!
//! Verdicts only come from exhaustive search; without it an instance is
//! inconclusive, never supporting evidence.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::range::RangeArg;
use crate::construct::{gcd_condition, kautz_lower_prefix_holds};
use crate::digraph::{Family, GeneralizedDigraph};
use crate::domination::{bounds, verify, CertificateRecord};
use crate::error::{Error, Result};
use crate::oracle::{
    coverage_table, exists_dominating_of_size, min_dominating_from, MinOutcome, NodeBudget,
    OracleLimits, SearchOutcome,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    DebruijnNecessity,
    KautzUpper,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::DebruijnNecessity => "debruijn-necessity",
            Problem::KautzUpper => "kautz-upper",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Problem::DebruijnNecessity => Family::DeBruijn,
            Problem::KautzUpper => Family::Kautz,
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Problem::DebruijnNecessity => {
                "gamma_k(G_B(n,d)) = ceil(n / sum_{j<=k} d^j) implies the gcd condition \
                 (S | n and gcd(d-1,n) | n/S, or L mod gcd(d-1,n) is an admissible offset)"
            }
            Problem::KautzUpper => {
                "if neither (d^(k-1)+d^k)*L >= n nor d^(k-1)*L >= ceil(n/(d+1)) holds, then \
                 gamma_k(G_K(n,d)) = ceil(n / (d^(k-1) + d^k)), reading the target as ceiling division"
            }
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "debruijn-necessity" => Ok(Problem::DebruijnNecessity),
            "kautz-upper" => Ok(Problem::KautzUpper),
            other => Err(Error::invalid(format!(
                "unknown problem `{other}` (expected debruijn-necessity or kautz-upper)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProblemRow {
    pub n: u64,
    pub d: u64,
    pub k: u32,
    pub lower: u64,
    /// Value the conjecture predicts, or the bound it is compared against.
    pub target: u64,
    pub oracle_gamma: Option<u64>,
    pub condition_fired: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub consistent: u64,
    pub counterexample: u64,
    pub inconclusive: u64,
    /// Instances outside the conjecture's hypothesis.
    pub not_applicable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProblemReport {
    pub problem: Problem,
    pub statement: &'static str,
    pub n: String,
    pub d: String,
    pub k: String,
    pub summary: Summary,
    pub instances: Vec<ProblemRow>,
}

fn certify(g: &GeneralizedDigraph, set: &VertexSet, k: u32) -> Result<CertificateRecord> {
    let cert = verify(g, set, k)?;
    if !cert.valid {
        return Err(Error::internal(format!("counterexample witness for {g}, k = {k} does not dominate")));
    }
    Ok(cert.record())
}

/// `None` when the instance is outside the hypothesis.
fn check_instance(problem: Problem, n: u64, d: u64, k: u32, limits: &OracleLimits) -> Result<Option<ProblemRow>> {
    let g = GeneralizedDigraph::new(problem.family(), n, d)?;
    let b = bounds(&g, k)?;
    let lower = b.lower.to_u64()?;
    let searchable = limits.admits(&g);
    let row = |target, oracle_gamma, condition_fired, verdict, certificate| ProblemRow {
        n,
        d,
        k,
        lower,
        target,
        oracle_gamma,
        condition_fired,
        verdict,
        certificate,
    };
    match problem {
        Problem::DebruijnNecessity => {
            let fired = gcd_condition(n, d, k)?.is_some();
            if !searchable {
                return Ok(Some(row(lower, None, fired, Verdict::Inconclusive, None)));
            }
            let table = coverage_table(&g, k, limits.table_ceiling)?;
            let mut budget = NodeBudget::new(limits.node_budget);
            Ok(Some(match exists_dominating_of_size(&table, lower, &mut budget)? {
                SearchOutcome::Found(_) if fired => row(lower, Some(lower), true, Verdict::Consistent, None),
                SearchOutcome::Found(w) => {
                    row(lower, Some(lower), false, Verdict::Counterexample, Some(certify(&g, &w, k)?))
                }
                SearchOutcome::Absent => row(lower, Some(lower + 1), fired, Verdict::Consistent, None),
                SearchOutcome::Inconclusive => row(lower, None, fired, Verdict::Inconclusive, None),
            }))
        }
        Problem::KautzUpper => {
            if kautz_lower_prefix_holds(n, d, k)? {
                return Ok(None);
            }
            let target = b.upper_kautz.expect("kautz bound").to_u64()?;
            if !searchable {
                return Ok(Some(row(target, None, false, Verdict::Inconclusive, None)));
            }
            let table = coverage_table(&g, k, limits.table_ceiling)?;
            let mut budget = NodeBudget::new(limits.node_budget);
            Ok(Some(match min_dominating_from(&table, &mut budget, Some(target))? {
                MinOutcome::Minimum { gamma, witness } => {
                    row(target, Some(gamma), false, Verdict::Counterexample, Some(certify(&g, &witness, k)?))
                }
                MinOutcome::Inconclusive { refuted_below } if refuted_below >= target => {
                    row(target, Some(target), false, Verdict::Consistent, None)
                }
                MinOutcome::Inconclusive { .. } => row(target, None, false, Verdict::Inconclusive, None),
            }))
        }
    }
}

pub fn run_problem(problem: Problem, n: RangeArg, d: RangeArg, k: RangeArg, limits: &OracleLimits) -> Result<ProblemReport> {
    let mut instances = Vec::new();
    for nn in n.iter() {
        for dd in d.iter().filter(|&dd| dd >= 2 && dd <= nn) {
            for kk in k.iter().filter(|&kk| kk >= 1) {
                instances.push((nn, dd, kk as u32));
            }
        }
    }
    let checked: Vec<Option<ProblemRow>> = instances
        .into_par_iter()
        .map(|(nn, dd, kk)| check_instance(problem, nn, dd, kk, limits))
        .collect::<Result<_>>()?;
    let mut summary = Summary::default();
    let mut rows = Vec::new();
    for r in checked {
        match r {
            None => summary.not_applicable += 1,
            Some(r) => {
                match r.verdict {
                    Verdict::Consistent => summary.consistent += 1,
                    Verdict::Counterexample => summary.counterexample += 1,
                    Verdict::Inconclusive => summary.inconclusive += 1,
                }
                rows.push(r);
            }
        }
    }
    Ok(ProblemReport {
        problem,
        statement: problem.statement(),
        n: n.to_string(),
        d: d.to_string(),
        k: k.to_string(),
        summary,
        instances: rows,
    })
}
