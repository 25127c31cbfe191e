//! Benchmark configuration and its validation.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use srkd::{Guard, MetricKind, Splitting};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("lie splitting requires --build incremental")]
    LieWithBatch,
    #[error("--queries must be at least 1")]
    NoQueries,
    #[error("--m must be at least 1")]
    ZeroNeighbors,
    #[error("size 0 in --sizes")]
    ZeroSize,
    #[error("--intersection always is a debugging mode, not a benchmark configuration")]
    UnguardedQuery,
    #[error("bad region `{0}` (expected xmin,xmax,ymin,ymax with min < max)")]
    Region(String),
    #[error("bad size `{0}` (expected an integer or 2^k)")]
    Size(String),
}

/// Planar sampling window. Headings are always drawn from `[-pi, pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl Default for Region {
    fn default() -> Self {
        Region { x: (-10.0, 10.0), y: (-10.0, 10.0) }
    }
}

impl FromStr for Region {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let bad = || ConfigError::Region(s.to_string());
        let v: Vec<f64> = s.split(',').map(|t| t.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let [x0, x1, y0, y1] = v[..] else { return Err(bad()) };
        if !(x0 < x1 && y0 < y1) || v.iter().any(|c| !c.is_finite()) {
            return Err(bad());
        }
        Ok(Region { x: (x0, x1), y: (y0, y1) })
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x.0, self.x.1, self.y.0, self.y.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuildKind {
    Batch,
    Incremental,
}

impl BuildKind {
    pub fn name(self) -> &'static str {
        match self {
            BuildKind::Batch => "batch",
            BuildKind::Incremental => "incremental",
        }
    }
}

impl FromStr for BuildKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "batch" => Ok(BuildKind::Batch),
            "incremental" => Ok(BuildKind::Incremental),
            _ => Err(format!("unknown build `{s}` (expected batch, incremental)")),
        }
    }
}

/// Parses `1024`, `2^10` or a comma list of either.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, ConfigError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let bad = || ConfigError::Size(t.to_string());
            match t.split_once('^') {
                Some((b, e)) => {
                    let b: usize = b.parse().map_err(|_| bad())?;
                    let e: u32 = e.parse().map_err(|_| bad())?;
                    b.checked_pow(e).ok_or_else(bad)
                }
                None => t.parse().map_err(|_| bad()),
            }
        })
        .collect()
}

/// One benchmark run. `metric`, `intersection`, `build` and `splitting`
/// act as filters on an experiment's fixed configuration list; `None`
/// keeps every configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub metric: Option<MetricKind>,
    pub intersection: Option<Guard>,
    pub build: Option<BuildKind>,
    pub splitting: Option<Splitting>,
    pub sizes: Vec<usize>,
    pub queries: usize,
    pub m: usize,
    pub seed: u64,
    pub region: Region,
    pub out: Option<PathBuf>,
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            metric: None,
            intersection: None,
            build: None,
            splitting: None,
            sizes: (10..=17).map(|k| 1usize << k).collect(),
            queries: 1000,
            m: 1,
            seed: 0,
            region: Region::default(),
            out: None,
            parallel: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.build == Some(BuildKind::Batch) && self.splitting == Some(Splitting::Lie) {
            return Err(ConfigError::LieWithBatch);
        }
        if self.intersection == Some(Guard::Always) {
            return Err(ConfigError::UnguardedQuery);
        }
        if self.queries == 0 {
            return Err(ConfigError::NoQueries);
        }
        if self.m == 0 {
            return Err(ConfigError::ZeroNeighbors);
        }
        if self.sizes.contains(&0) {
            return Err(ConfigError::ZeroSize);
        }
        Ok(())
    }
}
