//! Distance-k domination checks and the general bounds on `γ_k`.

use serde::Serialize;

use crate::digraph::{ball, Family, GeneralizedDigraph};
use crate::error::{Error, Result};
use crate::modular::{geometric_sum, power, ModInterval, WideInt};
use crate::vertex_set::VertexSet;

/// Outcome of checking whether `set` distance-`k`-dominates `graph`.
#[derive(Debug, Clone)]
pub struct DominationCertificate {
    pub graph: GeneralizedDigraph,
    pub set: VertexSet,
    pub k: u32,
    pub valid: bool,
    /// `V ∖ ∪_{i≤k} O_i(set)`; empty iff `valid`.
    pub uncovered: VertexSet,
}

/// JSON form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub family: Family,
    pub n: u64,
    pub d: u64,
    pub k: u32,
    pub set: Vec<u64>,
    pub valid: bool,
    pub uncovered: Vec<u64>,
}

impl DominationCertificate {
    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            family: self.graph.family(),
            n: self.graph.n(),
            d: self.graph.d(),
            k: self.k,
            set: self.set.to_vec(),
            valid: self.valid,
            uncovered: self.uncovered.to_vec(),
        }
    }
}

pub fn verify(g: &GeneralizedDigraph, set: &VertexSet, k: u32) -> Result<DominationCertificate> {
    if set.modulus() != g.n() {
        return Err(Error::invalid(format!(
            "vertex set over {} residues does not match n = {}",
            set.modulus(),
            g.n()
        )));
    }
    let covered = ball(g, set, k).covered;
    let uncovered = covered.complement();
    Ok(DominationCertificate { graph: *g, set: set.clone(), k, valid: uncovered.is_empty(), uncovered })
}

/// Lower and upper bounds on `γ_k` for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `⌈n / Σ_{j=0}^k d^j⌉`; no `k`-ball is larger than the geometric sum.
    pub lower: WideInt,
    /// `⌈n / d^k⌉`.
    pub upper_naive: WideInt,
    /// `lower + 1`, achieved by the anchored consecutive run (de Bruijn only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_debruijn: Option<WideInt>,
    /// `⌈n / (d^k + d^{k−1})⌉`, achieved by the prefix run (Kautz only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_kautz: Option<WideInt>,
}

impl Bounds {
    /// The tightest applicable upper bound.
    pub fn upper(&self) -> WideInt {
        [Some(self.upper_naive), self.upper_debruijn, self.upper_kautz]
            .into_iter()
            .flatten()
            .min()
            .expect("naive bound always present")
    }
}

/// Bound quantities shared by the constructions.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Sums {
    /// `Σ_{j=0}^k d^j`
    pub s: WideInt,
    /// `Σ_{j=0}^{k−1} d^j`
    pub s_prev: WideInt,
    /// `⌈n / s⌉`
    pub lower: WideInt,
}

pub(crate) fn sums(n: u64, d: u64, k: u32) -> Result<Sums> {
    if k == 0 {
        return Err(Error::invalid("radius k must be at least 1"));
    }
    let s = geometric_sum(d, k)?;
    let s_prev = geometric_sum(d, k - 1)?;
    let lower = WideInt::from(n).div_ceil(s)?;
    Ok(Sums { s, s_prev, lower })
}

pub fn bounds(g: &GeneralizedDigraph, k: u32) -> Result<Bounds> {
    let Sums { lower, .. } = sums(g.n(), g.d(), k)?;
    let n = WideInt::from(g.n());
    let dk = power(g.d(), k)?;
    let upper_naive = n.div_ceil(dk)?;
    let (upper_debruijn, upper_kautz) = match g.family() {
        Family::DeBruijn => (Some(lower.checked_add(WideInt::ONE)?), None),
        Family::Kautz => {
            let denom = dk.checked_add(power(g.d(), k - 1)?)?;
            (None, Some(n.div_ceil(denom)?))
        }
    };
    Ok(Bounds { lower, upper_naive, upper_debruijn, upper_kautz })
}

/// The run formed by `set`, if its members are consecutive modulo `n`.
///
/// The empty set is not treated as a run.
pub fn is_consecutive_set(set: &VertexSet) -> Option<ModInterval> {
    let n = set.modulus();
    if set.is_empty() {
        return None;
    }
    if set.is_full() {
        return Some(ModInterval::full(n));
    }
    let mut starts = set.iter().filter(|&v| !set.contains((v + n - 1) % n));
    let start = starts.next()?;
    if starts.next().is_some() {
        return None;
    }
    ModInterval::new(start, set.len(), n).ok()
}
