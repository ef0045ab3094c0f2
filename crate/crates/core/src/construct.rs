//! Explicit dominating-set constructions and the classification pipeline.
//!
//! Every construction here builds a consecutive run of vertices and then
//! checks it with [`verify`] before handing it out. A construction that fails
//! its own check is an [`Error::Internal`]: the argument behind it is wrong,
//! or it was transcribed wrongly, and that must surface.
//!
//! Notation used throughout: `S = Σ_{j=0}^k d^j`, `S' = Σ_{j=0}^{k−1} d^j`,
//! `L = ⌈n / S⌉`. Every vertex `k`-dominates at most `S` vertices, so
//! `γ_k ≥ L` in both families.

use serde::Serialize;

use crate::digraph::{Family, GeneralizedDigraph};
use crate::domination::{bounds, sums, verify, Bounds, Sums};
use crate::error::{Error, Result};
use crate::modular::{gcd, mod_interval, power, residue, solve_linear_congruence, ModInterval, WideInt};
use crate::oracle::{
    coverage_table, exists_dominating_of_size, min_dominating_from, MinOutcome, NodeBudget,
    OracleLimits, SearchOutcome,
};
use crate::vertex_set::VertexSet;

/// The run `start, start+1, …` of `len` vertices as a set.
fn run_set(n: u64, start: u64, len: u64) -> Result<VertexSet> {
    let run = ModInterval::new(start % n, len.min(n), n)?;
    VertexSet::from_members(n, run.iter())
}

fn checked_witness(g: &GeneralizedDigraph, set: VertexSet, k: u32, what: &str) -> Result<VertexSet> {
    let cert = verify(g, &set, k)?;
    if !cert.valid {
        return Err(Error::internal(format!(
            "{what} for {g}, k = {k} does not dominate: set {:?}, uncovered {:?}",
            set.to_vec(),
            cert.uncovered.to_vec()
        )));
    }
    Ok(set)
}

fn small(v: WideInt) -> Result<u64> {
    v.to_u64()
}

/// A vertex `x` with `d·x ≡ x + L − h (mod n)` for some `0 ≤ h ≤ d − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnchorWitness {
    pub x: u64,
    pub h: u64,
}

/// Smallest anchor vertex: `(d·x) mod n` lies in the run `[x + L − (d−2), x + L]`.
pub fn find_anchor(n: u64, d: u64, k: u32) -> Result<AnchorWitness> {
    let g = GeneralizedDigraph::de_bruijn(n, d)?;
    let l = small(sums(n, d, k)?.lower)?;
    let (d_i, l_i) = (d as i128, l as i128);
    for x in 0..n {
        let xi = x as i128;
        let window = mod_interval(xi + l_i - (d_i - 2), xi + l_i, n)?;
        let image = residue(d_i * xi, n);
        if window.contains(image) {
            let h = residue(xi + l_i - d_i * xi, n);
            debug_assert!(h <= d - 2);
            return Ok(AnchorWitness { x, h });
        }
    }
    Err(Error::internal(format!("no anchor vertex exists in {g} for k = {k}")))
}

/// The run of `L + 1` vertices starting at the anchor; dominates every `G_B(n, d)`.
pub fn build_anchor_run(n: u64, d: u64, k: u32) -> Result<VertexSet> {
    let g = GeneralizedDigraph::de_bruijn(n, d)?;
    let l = small(sums(n, d, k)?.lower)?;
    let anchor = find_anchor(n, d, k)?;
    checked_witness(&g, run_set(n, anchor.x, l + 1)?, k, "anchored run of L+1 vertices")
}

/// A size-`L` run from a solution of `(d−1)·x ≡ L − h (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub x: u64,
    pub h: u64,
    pub set: VertexSet,
}

/// Largest admissible offset: `S'·h ≤ S·L − n`.
fn max_offset(n: u64, s: &Sums) -> Result<u64> {
    let slack = s.s.checked_mul(s.lower)?.checked_sub(WideInt::from(n))?;
    small(slack.div_floor(s.s_prev)?)
}

/// Smallest admissible `h`, then smallest `x`, with `(d−1)·x ≡ L − h (mod n)`.
///
/// When one exists, the run `{x, …, x+L−1}` dominates and `γ_k = L`.
pub fn congruence_witness(n: u64, d: u64, k: u32) -> Result<Option<CongruenceWitness>> {
    let g = GeneralizedDigraph::de_bruijn(n, d)?;
    let s = sums(n, d, k)?;
    let l = small(s.lower)?;
    for h in 0..=max_offset(n, &s)? {
        let sols = solve_linear_congruence(d as i128 - 1, l as i128 - h as i128, n)?;
        if let Some(&x) = sols.first() {
            let set = checked_witness(&g, run_set(n, x, l)?, k, "congruence run")?;
            return Ok(Some(CongruenceWitness { x, h, set }));
        }
    }
    Ok(None)
}

/// Which gcd-based condition guarantees `γ_k(G_B(n, d)) = L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GcdCondition {
    /// `S | n` and `gcd(d−1, n) | n/S`.
    Divisible,
    /// `q = L mod gcd(d−1, n)` satisfies `S'·q ≤ S·L − n`.
    Residue,
}

pub fn gcd_condition(n: u64, d: u64, k: u32) -> Result<Option<GcdCondition>> {
    let s = sums(n, d, k)?;
    let r = gcd(d as u128 - 1, n as u128);
    let nw = WideInt::from(n);
    let divisible = nw.checked_rem(s.s)?.get() == 0 && nw.div_floor(s.s)?.get() % r == 0;
    let q = s.lower.get() % r;
    let residue_ok = q <= max_offset(n, &s)? as u128;
    let tag = if divisible {
        Some(GcdCondition::Divisible)
    } else if residue_ok {
        Some(GcdCondition::Residue)
    } else {
        None
    };
    if tag.is_some() && congruence_witness(n, d, k)?.is_none() {
        return Err(Error::internal(format!(
            "gcd condition {tag:?} holds for G_B({n}, {d}), k = {k}, but the congruence has no admissible solution"
        )));
    }
    Ok(tag)
}

/// `n = p·S + q` with `p ≥ 1` and `1 ≤ q ≤ min(1 + 2S', S − 1)`.
pub fn remainder_window_holds(n: u64, d: u64, k: u32) -> Result<bool> {
    let s = sums(n, d, k)?;
    let nw = WideInt::from(n);
    let p = nw.div_floor(s.s)?.get();
    let q = nw.checked_rem(s.s)?.get();
    let cap = (1 + 2 * s.s_prev.get()).min(s.s.get() - 1);
    Ok(p >= 1 && q >= 1 && q <= cap)
}

/// When the remainder window holds, the size-`L` run from the anchor dominates.
pub fn remainder_window_set(n: u64, d: u64, k: u32) -> Result<Option<VertexSet>> {
    if !remainder_window_holds(n, d, k)? {
        return Ok(None);
    }
    let g = GeneralizedDigraph::de_bruijn(n, d)?;
    let l = small(sums(n, d, k)?.lower)?;
    let anchor = find_anchor(n, d, k)?;
    checked_witness(&g, run_set(n, anchor.x, l)?, k, "remainder-window run").map(Some)
}

/// `γ_k` of the de Bruijn digraph on `d^m` vertices, with its power-sum witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerWitness {
    pub n: u64,
    pub lower: u64,
    pub x: u64,
    pub set: VertexSet,
    /// Whether the closed form with `m = i·k + l` term counts gives the same `x`.
    pub euclidean_form_agrees: bool,
}

/// `x = Σ_{t=1}^{T} d^{m − t(k+1)}`, `T = ⌈(m − k)/(k + 1)⌉`, which solves
/// `(d−1)·x ≡ L − 1 (mod d^m)`.
///
/// Repeatedly splitting `d^e = S·(d−1)·d^{e−k−1} + d^{e−k−1}` stops at the
/// first exponent `≤ k`, which takes `T` steps. The Euclidean-division
/// variant (`T = i − 1` if `l < i` else `i`) is computed alongside and its
/// agreement reported; it undercounts or overshoots for small `k` (e.g.
/// `k = 1, m = 3` asks for `d^{−1}`).
pub fn de_bruijn_power(d: u64, m: u32, k: u32) -> Result<PowerWitness> {
    if m == 0 {
        return Err(Error::invalid("exponent m must be at least 1"));
    }
    let n = small(power(d, m)?)?;
    let g = GeneralizedDigraph::de_bruijn(n, d)?;
    let s = sums(n, d, k)?;
    let lower = small(s.lower)?;

    if m <= k {
        let cw = congruence_witness(n, d, k)?.ok_or_else(|| {
            Error::internal(format!("no congruence witness for B({d}, {m}) at k = {k}"))
        })?;
        return Ok(PowerWitness { n, lower, x: cw.x, set: cw.set, euclidean_form_agrees: true });
    }

    let power_sum = |terms: u32| -> Option<u64> {
        (1..=terms).try_fold(0u64, |acc, t| {
            let e = m.checked_sub(t * (k + 1))?;
            Some(acc + d.pow(e))
        })
    };
    let terms = (m - k).div_ceil(k + 1);
    let x = power_sum(terms).expect("exponents stay non-negative");

    let (i, l) = (m / k, m % k);
    let euclid_terms = if l < i { i - 1 } else { i };
    let euclidean_form_agrees = power_sum(euclid_terms) == Some(x);

    let solutions = solve_linear_congruence(d as i128 - 1, lower as i128 - 1, n)?;
    if !solutions.contains(&x) || max_offset(n, &s)? < 1 {
        return Err(Error::internal(format!(
            "power sum x = {x} does not satisfy (d-1)x = L-1 with L = {lower} in B({d}, {m})"
        )));
    }
    if congruence_witness(n, d, k)?.is_none() {
        return Err(Error::internal(format!("congruence search disagrees on B({d}, {m}), k = {k}")));
    }
    let set = checked_witness(&g, run_set(n, x, lower)?, k, "power-sum run")?;
    Ok(PowerWitness { n, lower, x, set, euclidean_form_agrees })
}

/// `m` with `n = d^m`, if any.
fn exact_log(n: u64, d: u64) -> Option<u32> {
    let mut m = 0;
    let mut p = 1u64;
    while p < n {
        p = p.checked_mul(d)?;
        m += 1;
    }
    (p == n).then_some(m)
}

/// `{0, …, ⌈n/(d^k + d^{k−1})⌉ − 1}`; dominates every `G_K(n, d)`.
pub fn kautz_prefix_run(n: u64, d: u64, k: u32) -> Result<VertexSet> {
    let g = GeneralizedDigraph::kautz(n, d)?;
    let len = small(bounds(&g, k)?.upper_kautz.expect("kautz bound"))?;
    checked_witness(&g, run_set(n, 0, len)?, k, "Kautz prefix run")
}

/// `(d^{k−1} + d^k)·L ≥ n` or `d^{k−1}·L ≥ ⌈n/(d+1)⌉`.
pub fn kautz_lower_prefix_holds(n: u64, d: u64, k: u32) -> Result<bool> {
    let s = sums(n, d, k)?;
    let dk1 = power(d, k - 1)?;
    let dk = power(d, k)?;
    let nw = WideInt::from(n);
    let first = dk1.checked_add(dk)?.checked_mul(s.lower)? >= nw;
    let second = dk1.checked_mul(s.lower)? >= nw.div_ceil(WideInt::from(d + 1))?;
    Ok(first || second)
}

/// When [`kautz_lower_prefix_holds`], the prefix `{0, …, L−1}` dominates.
pub fn kautz_lower_prefix_set(n: u64, d: u64, k: u32) -> Result<Option<VertexSet>> {
    if !kautz_lower_prefix_holds(n, d, k)? {
        return Ok(None);
    }
    let g = GeneralizedDigraph::kautz(n, d)?;
    let l = small(sums(n, d, k)?.lower)?;
    checked_witness(&g, run_set(n, 0, l)?, k, "Kautz prefix of L vertices").map(Some)
}

/// Which rule established a [`GammaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `(d−1)x ≡ L − h` has an admissible solution.
    CongruenceRun,
    /// `S | n` and `(d−1)x ≡ n/S` is solvable.
    DivisibleCongruenceRun,
    /// `n = d^m`; power-sum witness.
    DebruijnPower,
    /// `S | n` and `gcd(d−1, n) | n/S`.
    GcdDivisibility,
    /// `L mod gcd(d−1, n)` is an admissible offset.
    GcdResidue,
    /// `n mod S` falls in the remainder window.
    RemainderWindow,
    /// Kautz prefix of `L` vertices dominates.
    KautzLowerPrefix,
    /// Kautz, `k = 1`: `γ = ⌈n/(d+1)⌉`.
    KautzSingleStep,
    /// Kautz, the prefix-run upper bound equals `L`.
    KautzPrefixUpper,
    /// Exhaustive search decided the value.
    OracleExact,
    /// No rule fired and the search was not run.
    BracketOnly,
    /// The search ran out of budget.
    Inconclusive,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::CongruenceRun => "congruence_run",
            Method::DivisibleCongruenceRun => "divisible_congruence_run",
            Method::DebruijnPower => "debruijn_power",
            Method::GcdDivisibility => "gcd_divisibility",
            Method::GcdResidue => "gcd_residue",
            Method::RemainderWindow => "remainder_window",
            Method::KautzLowerPrefix => "kautz_lower_prefix",
            Method::KautzSingleStep => "kautz_single_step",
            Method::KautzPrefixUpper => "kautz_prefix_upper",
            Method::OracleExact => "oracle_exact",
            Method::BracketOnly => "bracket_only",
            Method::Inconclusive => "inconclusive",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Method::BracketOnly | Method::Inconclusive)
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether one sufficient condition held for the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub method: Method,
    pub fired: bool,
}

#[derive(Debug, Clone)]
pub struct GammaResult {
    pub graph: GeneralizedDigraph,
    pub k: u32,
    pub bounds: Bounds,
    /// `Some` iff the value is exact.
    pub gamma: Option<u64>,
    /// `[gamma, gamma]` when exact.
    pub bracket: (u64, u64),
    pub method: Method,
    /// Exact: a verified minimum set. Otherwise: a verified set of size `bracket.1`.
    pub witness: Option<VertexSet>,
    pub conditions: Vec<ConditionCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaRecord {
    pub family: Family,
    pub n: u64,
    pub d: u64,
    pub k: u32,
    pub lower: u64,
    pub upper: u64,
    pub gamma: Option<u64>,
    pub bracket: [u64; 2],
    pub method: Method,
    pub witness: Vec<u64>,
    pub conditions: Vec<ConditionCheck>,
}

impl GammaResult {
    pub fn is_exact(&self) -> bool {
        self.gamma.is_some()
    }

    pub fn record(&self) -> GammaRecord {
        GammaRecord {
            family: self.graph.family(),
            n: self.graph.n(),
            d: self.graph.d(),
            k: self.k,
            lower: self.bounds.lower.get() as u64,
            upper: self.bracket.1.max(self.gamma.unwrap_or(0)),
            gamma: self.gamma,
            bracket: [self.bracket.0, self.bracket.1],
            method: self.method,
            witness: self.witness.as_ref().map(VertexSet::to_vec).unwrap_or_default(),
            conditions: self.conditions.clone(),
        }
    }
}

/// Determine `γ_k(G)` or bracket it.
///
/// De Bruijn rules, first match wins: the congruence run (labelled with the
/// most specific named condition it satisfies: power of `d`, `S | n`, gcd
/// divisibility, gcd residue, plain congruence), then the remainder window,
/// then exhaustive search for a size-`L` set, else the bracket `{L, L+1}`.
///
/// Kautz: `k = 1`, the lower prefix, the prefix bound meeting `L`, then
/// exhaustive search below the prefix bound, else `[L, ⌈n/(d^k+d^{k−1})⌉]`.
pub fn classify(g: &GeneralizedDigraph, k: u32, limits: &OracleLimits) -> Result<GammaResult> {
    let b = bounds(g, k)?;
    let result = match g.family() {
        Family::DeBruijn => classify_de_bruijn(g, k, b, limits)?,
        Family::Kautz => classify_kautz(g, k, b, limits)?,
    };
    if let Some(gamma) = result.gamma {
        let w = result
            .witness
            .as_ref()
            .ok_or_else(|| Error::internal(format!("exact result for {g} without witness")))?;
        if w.len() != gamma || !verify(g, w, k)?.valid {
            return Err(Error::internal(format!("witness for {g}, k = {k} failed final check")));
        }
    }
    Ok(result)
}

fn exact(g: &GeneralizedDigraph, k: u32, b: Bounds, gamma: u64, method: Method, witness: VertexSet, conditions: Vec<ConditionCheck>) -> GammaResult {
    GammaResult { graph: *g, k, bounds: b, gamma: Some(gamma), bracket: (gamma, gamma), method, witness: Some(witness), conditions }
}

fn classify_de_bruijn(g: &GeneralizedDigraph, k: u32, b: Bounds, limits: &OracleLimits) -> Result<GammaResult> {
    let (n, d) = (g.n(), g.d());
    let l = small(b.lower)?;
    let s = sums(n, d, k)?;

    let congruence = congruence_witness(n, d, k)?;
    let power_m = exact_log(n, d);
    let divides = WideInt::from(n).checked_rem(s.s)?.get() == 0;
    let gcd_tag = gcd_condition(n, d, k)?;
    let window = remainder_window_set(n, d, k)?;

    let hit = |m: Method| match m {
        Method::DebruijnPower => power_m.is_some(),
        Method::DivisibleCongruenceRun => divides && congruence.is_some(),
        Method::GcdDivisibility => gcd_tag == Some(GcdCondition::Divisible),
        Method::GcdResidue => gcd_tag.is_some(),
        Method::CongruenceRun => congruence.is_some(),
        Method::RemainderWindow => window.is_some(),
        _ => false,
    };
    let order = [
        Method::DebruijnPower,
        Method::DivisibleCongruenceRun,
        Method::GcdDivisibility,
        Method::GcdResidue,
        Method::CongruenceRun,
        Method::RemainderWindow,
    ];
    let conditions: Vec<_> = order.iter().map(|&m| ConditionCheck { method: m, fired: hit(m) }).collect();

    if let Some(cw) = &congruence {
        if let Some(m) = power_m {
            let pw = de_bruijn_power(d, m, k)?;
            return Ok(exact(g, k, b, l, Method::DebruijnPower, pw.set, conditions));
        }
        let method = order[1..5].iter().copied().find(|&m| hit(m)).expect("congruence fired");
        return Ok(exact(g, k, b, l, method, cw.set.clone(), conditions));
    }
    if let Some(set) = window {
        return Ok(exact(g, k, b, l, Method::RemainderWindow, set, conditions));
    }

    let upper_set = build_anchor_run(n, d, k)?;
    let upper = upper_set.len();
    let bracket_only = |method| GammaResult {
        graph: *g,
        k,
        bounds: b,
        gamma: None,
        bracket: (l, upper),
        method,
        witness: Some(upper_set.clone()),
        conditions: conditions.clone(),
    };
    if !limits.admits(g) {
        return Ok(bracket_only(Method::BracketOnly));
    }
    let table = coverage_table(g, k, limits.table_ceiling)?;
    let mut budget = NodeBudget::new(limits.node_budget);
    match exists_dominating_of_size(&table, l, &mut budget)? {
        SearchOutcome::Found(w) => Ok(exact(g, k, b, l, Method::OracleExact, w, conditions)),
        SearchOutcome::Absent => Ok(exact(g, k, b, upper, Method::OracleExact, upper_set, conditions)),
        SearchOutcome::Inconclusive => Ok(bracket_only(Method::Inconclusive)),
    }
}

fn classify_kautz(g: &GeneralizedDigraph, k: u32, b: Bounds, limits: &OracleLimits) -> Result<GammaResult> {
    let (n, d) = (g.n(), g.d());
    let l = small(b.lower)?;
    let upper = small(b.upper_kautz.expect("kautz bound"))?;

    let lower_prefix = kautz_lower_prefix_set(n, d, k)?;
    let conditions = vec![
        ConditionCheck { method: Method::KautzSingleStep, fired: k == 1 },
        ConditionCheck { method: Method::KautzLowerPrefix, fired: lower_prefix.is_some() },
        ConditionCheck { method: Method::KautzPrefixUpper, fired: upper == l },
    ];
    let prefix = kautz_prefix_run(n, d, k)?;

    if k == 1 {
        return Ok(exact(g, k, b, upper, Method::KautzSingleStep, prefix, conditions));
    }
    if let Some(set) = lower_prefix {
        return Ok(exact(g, k, b, l, Method::KautzLowerPrefix, set, conditions));
    }
    if upper == l {
        return Ok(exact(g, k, b, l, Method::KautzPrefixUpper, prefix, conditions));
    }

    let bracket = |lo, method| GammaResult {
        graph: *g,
        k,
        bounds: b,
        gamma: None,
        bracket: (lo, upper),
        method,
        witness: Some(prefix.clone()),
        conditions: conditions.clone(),
    };
    if !limits.admits(g) {
        return Ok(bracket(l, Method::BracketOnly));
    }
    let table = coverage_table(g, k, limits.table_ceiling)?;
    let mut budget = NodeBudget::new(limits.node_budget);
    match min_dominating_from(&table, &mut budget, Some(upper))? {
        MinOutcome::Minimum { gamma, witness } => Ok(exact(g, k, b, gamma, Method::OracleExact, witness, conditions)),
        MinOutcome::Inconclusive { refuted_below } if refuted_below >= upper => {
            Ok(exact(g, k, b, upper, Method::OracleExact, prefix.clone(), conditions))
        }
        MinOutcome::Inconclusive { refuted_below } => Ok(bracket(refuted_below, Method::Inconclusive)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::min_dominating;

    fn gamma_by_search(g: &GeneralizedDigraph, k: u32) -> u64 {
        match min_dominating(g, k, &OracleLimits::default()).unwrap() {
            MinOutcome::Minimum { gamma, .. } => gamma,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn anchor_examples() {
        for n in 2..60u64 {
            for k in 1..4u32 {
                let l = n.div_ceil((1 << (k + 1)) - 1);
                let a = find_anchor(n, 2, k).unwrap();
                assert_eq!(a, AnchorWitness { x: l % n, h: 0 });
            }
        }
        let a = find_anchor(40, 3, 3).unwrap();
        let brute = (0..40).find(|x| [*x, *x + 1].contains(&(3 * x % 40))).unwrap();
        assert_eq!(a.x, brute);
        assert!(a.h <= 1);
        // L = 2, window [x+1, x+2]: x=0 → 0 no, x=1 → 3 yes.
        assert_eq!(find_anchor(6, 3, 1).unwrap(), AnchorWitness { x: 1, h: 0 });
    }

    #[test]
    fn anchor_exists_across_sweep() {
        for n in 2..=120 {
            for d in 2..=n.min(7) {
                for k in 1..=5 {
                    let a = find_anchor(n, d, k).unwrap();
                    let l = sums(n, d, k).unwrap().lower.get() as u64;
                    assert!(a.h <= d - 2);
                    assert_eq!((d * a.x) % n, (a.x + l + n * 2 - a.h) % n);
                }
            }
        }
    }

    #[test]
    fn anchor_run_examples() {
        let s = build_anchor_run(40, 3, 3).unwrap();
        assert_eq!(s.len(), 2);
        assert!(crate::domination::is_consecutive_set(&s).is_some());
        assert_eq!(build_anchor_run(7, 2, 1).unwrap().len(), 4);
        assert_eq!(build_anchor_run(7, 2, 2).unwrap().len(), 2);
    }

    #[test]
    fn congruence_examples() {
        assert!(congruence_witness(40, 3, 3).unwrap().is_none());
        let w = congruence_witness(7, 2, 2).unwrap().unwrap();
        assert_eq!((w.x, w.h, w.set.to_vec()), (1, 0, vec![1]));
    }

    #[test]
    fn gcd_condition_examples() {
        assert_eq!(gcd_condition(40, 3, 3).unwrap(), None);
        assert_eq!(gcd_condition(7, 2, 2).unwrap(), Some(GcdCondition::Divisible));
        // d = 2 makes gcd(d-1, n) = 1, so q = 0 always qualifies.
        for n in 2..80 {
            assert!(gcd_condition(n, 2, 2).unwrap().is_some());
        }
    }

    #[test]
    fn remainder_window_examples() {
        assert!(remainder_window_holds(41, 3, 3).unwrap());
        assert_eq!(remainder_window_set(41, 3, 3).unwrap().unwrap().len(), 2);
        assert!(!remainder_window_holds(40, 3, 3).unwrap());
        assert!(remainder_window_holds(20, 2, 2).unwrap());
        assert_eq!(remainder_window_set(20, 2, 2).unwrap().unwrap().len(), 3);
        assert!(!remainder_window_holds(6, 2, 2).unwrap());
        assert_eq!(gamma_by_search(&GeneralizedDigraph::de_bruijn(41, 3).unwrap(), 3), 2);
    }

    #[test]
    fn power_examples() {
        let p = de_bruijn_power(2, 4, 2).unwrap();
        assert_eq!((p.n, p.lower, p.x), (16, 3, 2));
        assert!(p.euclidean_form_agrees);
        assert_eq!(gamma_by_search(&GeneralizedDigraph::de_bruijn(16, 2).unwrap(), 2), 3);

        let p = de_bruijn_power(3, 3, 1).unwrap();
        assert_eq!((p.n, p.lower, p.x), (27, 7, 3));
        assert!(!p.euclidean_form_agrees);
        assert_eq!(gamma_by_search(&GeneralizedDigraph::de_bruijn(27, 3).unwrap(), 1), 7);

        for d in 2..5 {
            for k in 1..5 {
                for m in 1..=k {
                    assert_eq!(de_bruijn_power(d, m, k).unwrap().lower, 1);
                }
            }
        }
    }

    #[test]
    fn power_witness_over_range() {
        for d in 2u64..=5 {
            for m in 1u32..=9 {
                if d.pow(m) > 200_000 {
                    continue;
                }
                for k in 1..=6 {
                    let p = de_bruijn_power(d, m, k).unwrap();
                    assert_eq!(p.set.len(), p.lower);
                }
            }
        }
    }

    #[test]
    fn kautz_examples() {
        assert_eq!(kautz_prefix_run(7, 2, 2).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(kautz_prefix_run(9, 2, 1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(kautz_prefix_run(6, 2, 2).unwrap().to_vec(), vec![0]);
        assert!(!kautz_lower_prefix_holds(7, 2, 2).unwrap());
        assert!(kautz_lower_prefix_holds(12, 2, 2).unwrap());
        assert_eq!(kautz_lower_prefix_set(12, 2, 2).unwrap().unwrap().to_vec(), vec![0, 1]);
        for n in 2..60 {
            for d in 2..=n.min(5) {
                assert!(kautz_lower_prefix_holds(n, d, 1).unwrap());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let limits = OracleLimits::default();
        let r = classify(&GeneralizedDigraph::de_bruijn(40, 3).unwrap(), 3, &limits).unwrap();
        assert_eq!((r.gamma, r.method), (Some(2), Method::OracleExact));
        assert!(r.conditions.iter().all(|c| !c.fired));

        for n in 2..=60 {
            let g = GeneralizedDigraph::kautz(n, 2).unwrap();
            let r = classify(&g, 1, &limits).unwrap();
            assert_eq!((r.gamma, r.method), (Some(n.div_ceil(3)), Method::KautzSingleStep));
        }

        let r = classify(&GeneralizedDigraph::de_bruijn(7, 2).unwrap(), 2, &limits).unwrap();
        assert_eq!(r.gamma, Some(1));
        assert_eq!(r.method, Method::DivisibleCongruenceRun);
        assert_eq!(r.witness.unwrap().to_vec(), vec![1]);

        let r = classify(&GeneralizedDigraph::kautz(7, 2).unwrap(), 2, &limits).unwrap();
        assert_eq!((r.gamma, r.method), (Some(2), Method::OracleExact));

        let r = classify(&GeneralizedDigraph::de_bruijn(16, 2).unwrap(), 2, &limits).unwrap();
        assert_eq!((r.gamma, r.method), (Some(3), Method::DebruijnPower));
    }

    #[test]
    fn classify_without_oracle_brackets() {
        let off = OracleLimits { node_budget: 0, ..OracleLimits::default() };
        let r = classify(&GeneralizedDigraph::de_bruijn(40, 3).unwrap(), 3, &off).unwrap();
        assert_eq!((r.gamma, r.bracket, r.method), (None, (1, 2), Method::BracketOnly));
        assert_eq!(r.witness.unwrap().len(), 2);
        let r = classify(&GeneralizedDigraph::kautz(7, 2).unwrap(), 2, &off).unwrap();
        assert_eq!((r.gamma, r.bracket, r.method), (None, (1, 2), Method::BracketOnly));
    }

    #[test]
    fn classify_agrees_with_search() {
        let limits = OracleLimits::default();
        for family in [Family::DeBruijn, Family::Kautz] {
            for n in 2..=40 {
                for d in 2..=n.min(4) {
                    for k in 1..=3 {
                        let g = GeneralizedDigraph::new(family, n, d).unwrap();
                        let r = classify(&g, k, &limits).unwrap();
                        assert_eq!(r.gamma, Some(gamma_by_search(&g, k)), "{g} k={k} via {}", r.method);
                    }
                }
            }
        }
    }
}
