use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer};

/// Inclusive integer range written `a..b`, `a..=b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl RangeArg {
    pub fn single(v: u64) -> Self {
        RangeArg { lo: v, hi: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + Clone {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim().parse::<u64>().map_err(|e| format!("bad integer `{}` in range `{s}`: {e}", t.trim()))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(RangeArg { lo, hi })
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl<'de> Deserialize<'de> for RangeArg {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Int(v) => Ok(RangeArg::single(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!("2..60".parse::<RangeArg>().unwrap(), RangeArg { lo: 2, hi: 60 });
        assert_eq!("2..=5".parse::<RangeArg>().unwrap(), RangeArg { lo: 2, hi: 5 });
        assert_eq!(" 7 ".parse::<RangeArg>().unwrap(), RangeArg::single(7));
        assert!("5..2".parse::<RangeArg>().is_err());
        assert!("x..3".parse::<RangeArg>().is_err());
        assert_eq!("3..4".parse::<RangeArg>().unwrap().iter().collect::<Vec<_>>(), vec![3, 4]);
    }
}
