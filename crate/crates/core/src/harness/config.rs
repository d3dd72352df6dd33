use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A group of checks run per `(l, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Hilbert,
    Betti,
    Syzygies,
    Fatpoints,
    Surface,
    Conjecture,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Hilbert,
        Check::Betti,
        Check::Syzygies,
        Check::Fatpoints,
        Check::Surface,
        Check::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Hilbert => "hilbert",
            Check::Betti => "betti",
            Check::Syzygies => "syzygies",
            Check::Fatpoints => "fatpoints",
            Check::Surface => "surface",
            Check::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown check `{s}`")))
    }
}

/// Comma-separated check names, or `all`.
pub fn parse_checks(s: &str) -> Result<BTreeSet<Check>> {
    if s.trim() == "all" {
        return Ok(Check::ALL.into_iter().collect());
    }
    s.split(',').map(|c| c.trim().parse()).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidParams(format!("unknown format `{s}`"))),
        }
    }
}

/// `a..b` (inclusive) or a single value `a`.
pub fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::InvalidParams(format!("bad range `{s}`"));
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// What `verify` runs and where the report goes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub n: usize,
    pub l_range: (u32, u32),
    pub k_range: (u32, u32),
    /// Add the points with `l = k - 1`, `2l = k` or `2l = k + 1` and `l, k <= 5`.
    pub boundary: bool,
    pub checks: BTreeSet<Check>,
    pub output: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; `None` uses the rayon default.
    pub parallelism: Option<usize>,
    /// Record wall-clock milliseconds; off gives byte-identical reports.
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n: 3,
            l_range: (1, 3),
            k_range: (1, 3),
            boundary: false,
            checks: Check::ALL.into_iter().collect(),
            output: None,
            format: Format::Json,
            parallelism: None,
            timings: true,
        }
    }
}

impl SweepConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        if !(3..=4).contains(&self.n) {
            return bad(format!("n must be 3 or 4 (exploratory), got {}", self.n));
        }
        if self.l_range.0 > self.l_range.1 || self.k_range.0 > self.k_range.1 {
            return bad("empty parameter range".into());
        }
        if self.l_range.0 == 0 {
            return bad("l must be positive".into());
        }
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        if self.parallelism == Some(0) {
            return bad("parallelism must be positive".into());
        }
        if self.n == 4 {
            if self.l_range.1 > 1 || self.k_range.1 > 1 {
                return bad("four-variable runs are capped at l, k <= 1".into());
            }
            if self.checks.iter().any(|c| *c != Check::Conjecture) {
                return bad("four-variable runs support only the conjecture check".into());
            }
            if self.boundary {
                return bad("boundary points are three-variable only".into());
            }
        }
        Ok(())
    }

    /// Grid points, then boundary points, sorted and without repeats.
    pub fn points(&self) -> Vec<(u32, u32)> {
        let mut pts = BTreeSet::new();
        for l in self.l_range.0..=self.l_range.1 {
            for k in self.k_range.0..=self.k_range.1 {
                pts.insert((l, k));
            }
        }
        if self.boundary {
            pts.extend(boundary_points(5));
        }
        pts.into_iter().collect()
    }
}

/// `(l, k)` with `1 <= l, k <= bound` on one of the branch boundaries
/// `l = k - 1`, `2l = k`, `2l = k + 1`.
pub fn boundary_points(bound: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for l in 1..=bound {
        for k in 1..=bound {
            if l + 1 == k || 2 * l == k || 2 * l == k + 1 {
                out.push((l, k));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3").unwrap(), (1, 3));
        assert_eq!(parse_range("2..=4").unwrap(), (2, 4));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a").is_err());
    }

    #[test]
    fn checks() {
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        let s = parse_checks("betti, surface").unwrap();
        assert!(s.contains(&Check::Betti) && s.contains(&Check::Surface));
        assert!(parse_checks("bogus").is_err());
    }

    #[test]
    fn validation() {
        assert!(SweepConfig::default().validate().is_ok());
        let zero_l = SweepConfig {
            l_range: (0, 2),
            ..Default::default()
        };
        assert!(zero_l.validate().is_err());
        let four = SweepConfig {
            n: 4,
            l_range: (1, 1),
            k_range: (1, 1),
            checks: [Check::Conjecture].into_iter().collect(),
            ..Default::default()
        };
        assert!(four.validate().is_ok());
        assert!(SweepConfig {
            checks: Check::ALL.into_iter().collect(),
            ..four.clone()
        }
        .validate()
        .is_err());
        assert!(SweepConfig {
            n: 2,
            ..Default::default()
        }
        .validate()
        .is_err());
    }

    #[test]
    fn boundary() {
        let b = boundary_points(5);
        assert_eq!(
            b,
            vec![(1, 1), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
        let cfg = SweepConfig {
            boundary: true,
            ..Default::default()
        };
        assert_eq!(cfg.points().len(), 9 + 4);
    }

    #[test]
    fn config_file() {
        let cfg = SweepConfig::from_json(r#"{"l_range": [1, 2], "checks": ["hilbert"]}"#).unwrap();
        assert_eq!(cfg.l_range, (1, 2));
        assert_eq!(cfg.k_range, (1, 3));
        assert!(SweepConfig::from_json(r#"{"bogus": 1}"#).is_err());
    }
}
