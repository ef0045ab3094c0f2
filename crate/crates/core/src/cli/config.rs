//! Optional TOML configuration. Command-line flags take precedence.
//!
//! ```toml
//! oracle_budget = 20000000
//! table_ceiling = 5000
//!
//! [sweep]
//! n = "2..60"
//! d = "2..5"
//! k = "1..4"
//! ```

use std::path::Path;

use serde::Deserialize;

use super::range::RangeArg;
use crate::error::{Error, Result};
use crate::oracle::OracleLimits;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub oracle_budget: Option<u64>,
    pub table_ceiling: Option<u64>,
    #[serde(default)]
    pub sweep: SweepEnvelope,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepEnvelope {
    pub n: Option<RangeArg>,
    pub d: Option<RangeArg>,
    pub k: Option<RangeArg>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config> {
        toml::from_str(text).map_err(|e| Error::invalid(format!("bad config: {e}")))
    }

    pub fn limits(&self, budget_flag: Option<u64>) -> OracleLimits {
        let defaults = OracleLimits::default();
        OracleLimits {
            table_ceiling: self.table_ceiling.unwrap_or(defaults.table_ceiling),
            node_budget: budget_flag.or(self.oracle_budget).unwrap_or(defaults.node_budget),
        }
    }
}
