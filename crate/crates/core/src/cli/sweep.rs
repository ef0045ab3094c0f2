//! Parameter sweeps: one row per valid `(n, d, k)`, in lexicographic order.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::range::RangeArg;
use crate::construct::classify;
use crate::digraph::{Family, GeneralizedDigraph};
use crate::error::{Error, Result};
use crate::oracle::OracleLimits;

pub const CSV_COLUMNS: [&str; 10] = ["family", "n", "d", "k", "lower", "upper", "gamma", "method", "witness", "ms"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: Family,
    pub n: u64,
    pub d: u64,
    pub k: u32,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub gamma: Option<u64>,
    pub method: String,
    pub witness: Option<Vec<u64>>,
    pub ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: Family,
    pub n: RangeArg,
    pub d: RangeArg,
    pub k: RangeArg,
    pub limits: OracleLimits,
    pub timing: bool,
}

impl SweepSpec {
    /// Valid instances (`d ≥ 2`, `n ≥ d`, `k ≥ 1`) in `(n, d, k)` order.
    pub fn instances(&self) -> Vec<(u64, u64, u32)> {
        let mut out = Vec::new();
        for n in self.n.iter() {
            for d in self.d.iter().filter(|&d| d >= 2 && d <= n) {
                for k in self.k.iter().filter(|&k| k >= 1) {
                    out.push((n, d, k as u32));
                }
            }
        }
        out
    }
}

pub fn sweep_row(family: Family, n: u64, d: u64, k: u32, limits: &OracleLimits, timing: bool) -> SweepRow {
    let started = Instant::now();
    let outcome = GeneralizedDigraph::new(family, n, d).and_then(|g| classify(&g, k, limits));
    let ms = timing.then(|| started.elapsed().as_millis() as u64);
    match outcome {
        Ok(r) => {
            let rec = r.record();
            SweepRow {
                family,
                n,
                d,
                k,
                lower: Some(rec.lower),
                upper: Some(rec.upper),
                gamma: rec.gamma,
                method: rec.method.as_str().to_string(),
                witness: rec.gamma.map(|_| rec.witness),
                ms,
                error: None,
            }
        }
        Err(e) => SweepRow {
            family,
            n,
            d,
            k,
            lower: None,
            upper: None,
            gamma: None,
            method: "error".to_string(),
            witness: None,
            ms,
            error: Some(e.to_string()),
        },
    }
}

/// Rows are computed in parallel and returned in instance order.
pub fn run_sweep(spec: &SweepSpec) -> Vec<SweepRow> {
    spec.instances()
        .into_par_iter()
        .map(|(n, d, k)| sweep_row(spec.family, n, d, k, &spec.limits, spec.timing))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::invalid(format!("write failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS).map_err(io)?;
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        let witness = r
            .witness
            .as_ref()
            .map(|w| w.iter().map(u64::to_string).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        w.write_record([
            r.family.as_str().to_string(),
            r.n.to_string(),
            r.d.to_string(),
            r.k.to_string(),
            opt(r.lower),
            opt(r.upper),
            opt(r.gamma),
            r.method.clone(),
            witness,
            opt(r.ms),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::invalid(format!("write failed: {e}")))?;
    Ok(())
}

pub fn write_json_lines<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    for r in rows {
        let line = serde_json::to_string(r).map_err(|e| Error::internal(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::invalid(format!("write failed: {e}")))?;
    }
    Ok(())
}
