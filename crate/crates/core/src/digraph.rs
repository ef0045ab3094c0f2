//! Implicit generalized de Bruijn and Kautz digraphs.
//!
//! Arcs are never stored. The out-neighborhood of a vertex is a run of `d`
//! consecutive residues, and so is the out-neighborhood of any run of
//! vertices; both are computed in closed form here. [`set_out_neighborhood`]
//! and [`ball`] work on arbitrary vertex sets and serve as the reference the
//! closed forms are checked against.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::ModInterval;
use crate::vertex_set::VertexSet;

/// Largest `n·d` that [`export_graph`] will materialize.
pub const EXPORT_ARC_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Arcs `x → d·x + i (mod n)`, `0 ≤ i ≤ d−1`.
    #[serde(rename = "debruijn")]
    DeBruijn,
    /// Arcs `x → −d·x − i (mod n)`, `1 ≤ i ≤ d`.
    Kautz,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::DeBruijn => "debruijn",
            Family::Kautz => "kautz",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "debruijn" | "de-bruijn" | "b" => Ok(Family::DeBruijn),
            "kautz" | "k" => Ok(Family::Kautz),
            other => Err(Error::invalid(format!("unknown family `{other}` (expected debruijn or kautz)"))),
        }
    }
}

/// `G_B(n, d)` or `G_K(n, d)`, with `d ≥ 2` and `n ≥ d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneralizedDigraph {
    family: Family,
    n: u64,
    d: u64,
}

impl GeneralizedDigraph {
    pub fn new(family: Family, n: u64, d: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::invalid(format!("degree d must be at least 2, got {d}")));
        }
        if n < d {
            return Err(Error::invalid(format!("need n >= d, got n = {n}, d = {d}")));
        }
        if n > i64::MAX as u64 / d {
            return Err(Error::RangeExceeded(format!("n·d overflows for n = {n}, d = {d}")));
        }
        Ok(GeneralizedDigraph { family, n, d })
    }

    pub fn de_bruijn(n: u64, d: u64) -> Result<Self> {
        Self::new(Family::DeBruijn, n, d)
    }

    pub fn kautz(n: u64, d: u64) -> Result<Self> {
        Self::new(Family::Kautz, n, d)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    fn check_vertex(&self, v: u64) -> Result<()> {
        if v >= self.n {
            return Err(Error::invalid(format!("vertex {v} out of range for n = {}", self.n)));
        }
        Ok(())
    }

    /// Out-slot targets of `v` in slot order (`i` ascending).
    pub fn arc_targets(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let (n, d) = (self.n as u128, self.d as u128);
        let base = (d * v as u128) % n;
        (0..d).map(move |i| match self.family {
            Family::DeBruijn => ((base + i) % n) as u64,
            Family::Kautz => ((2 * n - base - (i + 1) % n) % n) as u64,
        })
    }
}

impl fmt::Display for GeneralizedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family {
            Family::DeBruijn => "G_B",
            Family::Kautz => "G_K",
        };
        write!(f, "{tag}({}, {})", self.n, self.d)
    }
}

/// `O(v)` as a run of `d` residues.
pub fn out_neighbors(g: &GeneralizedDigraph, v: u64) -> Result<ModInterval> {
    g.check_vertex(v)?;
    let (n, d, v) = (g.n as i128, g.d as i128, v as i128);
    let start = match g.family {
        Family::DeBruijn => d * v,
        Family::Kautz => -d * v - d,
    };
    Ok(ModInterval::saturating(start, d as u128, n as u64))
}

/// Out-neighborhood of a run of vertices, again a run.
///
/// For `D = [a..b]`: de Bruijn starts at `d·a`; Kautz starts at `−d·b − d`
/// (orientation flips). Length is `min(n, d·|D|)` in both families.
pub fn interval_out_neighborhood(g: &GeneralizedDigraph, run: &ModInterval) -> Result<ModInterval> {
    if run.modulus() != g.n {
        return Err(Error::invalid(format!(
            "interval modulus {} does not match n = {}",
            run.modulus(),
            g.n
        )));
    }
    if run.is_empty() {
        return Err(Error::invalid("out-neighborhood of an empty interval"));
    }
    if run.is_full() {
        return Ok(ModInterval::full(g.n));
    }
    let d = g.d as i128;
    let len = g.d as u128 * run.len() as u128;
    let start = match g.family {
        Family::DeBruijn => d * run.start() as i128,
        Family::Kautz => {
            let last = run.last().expect("non-empty run") as i128;
            -d * last - d
        }
    };
    Ok(ModInterval::saturating(start, len, g.n))
}

/// `O_i(D)` for a run `D`, by folding [`interval_out_neighborhood`] `i` times.
pub fn ith_out_neighborhood_interval(
    g: &GeneralizedDigraph,
    run: &ModInterval,
    i: u32,
) -> Result<ModInterval> {
    let mut cur = *run;
    for _ in 0..i {
        if cur.is_full() {
            break;
        }
        cur = interval_out_neighborhood(g, &cur)?;
    }
    Ok(cur)
}

/// `O(S) = ∪_{u ∈ S} O(u)`, computed vertex by vertex.
pub fn set_out_neighborhood(g: &GeneralizedDigraph, set: &VertexSet) -> VertexSet {
    assert_eq!(set.modulus(), g.n, "vertex set modulus does not match graph");
    let mut out = VertexSet::new(g.n);
    for u in set.iter() {
        for y in g.arc_targets(u) {
            out.insert(y);
        }
        if out.is_full() {
            break;
        }
    }
    out
}

/// Vertices within directed distance `radius` of `centers`.
#[derive(Debug, Clone)]
pub struct Ball<'a> {
    pub centers: &'a VertexSet,
    pub radius: u32,
    /// `∪_{i=0}^{radius} O_i(centers)`.
    pub covered: VertexSet,
}

/// Breadth-layer expansion to depth `radius`; stops early once everything is covered.
pub fn ball<'a>(g: &GeneralizedDigraph, centers: &'a VertexSet, radius: u32) -> Ball<'a> {
    assert_eq!(centers.modulus(), g.n, "vertex set modulus does not match graph");
    let mut covered = centers.clone();
    let mut frontier = centers.clone();
    for _ in 0..radius {
        if covered.is_full() || frontier.is_empty() {
            break;
        }
        let next = set_out_neighborhood(g, &frontier);
        frontier = next.difference(&covered);
        covered.union_with(&frontier);
    }
    Ball { centers, radius, covered }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

/// Arcs `(v, y)` for `v = 0..n−1`, slots ascending, duplicates collapsed.
pub fn arcs(g: &GeneralizedDigraph) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity((g.n * g.d) as usize);
    let mut seen = Vec::with_capacity(g.d as usize);
    for v in 0..g.n {
        seen.clear();
        for y in g.arc_targets(v) {
            if !seen.contains(&y) {
                seen.push(y);
                out.push((v, y));
            }
        }
    }
    out
}

/// Render the digraph as a tab-separated edge list or a DOT digraph.
pub fn export_graph(g: &GeneralizedDigraph, format: ExportFormat) -> Result<String> {
    let slots = g.n as u128 * g.d as u128;
    if slots > EXPORT_ARC_LIMIT {
        return Err(Error::RangeRefused(format!(
            "{g} has {slots} arc slots; export is limited to {EXPORT_ARC_LIMIT}"
        )));
    }
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            writeln!(out, "# {} {} {}", g.family, g.n, g.d).unwrap();
            for (u, v) in arcs(g) {
                writeln!(out, "{u}\t{v}").unwrap();
            }
        }
        ExportFormat::Dot => {
            writeln!(out, "digraph {}_{}_{} {{", g.family, g.n, g.d).unwrap();
            for v in 0..g.n {
                writeln!(out, "  {v};").unwrap();
            }
            for (u, v) in arcs(g) {
                writeln!(out, "  {u} -> {v};").unwrap();
            }
            out.push_str("}\n");
        }
    }
    Ok(out)
}
