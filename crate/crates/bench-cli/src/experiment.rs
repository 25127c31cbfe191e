//! Experiment cells: build one tree, time it, run the query set against it.

use std::hint::black_box;
use std::time::Instant;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srkd::{BuildMode, Guard, KdTree, MetricKind, QueryStats, Se2Point, Splitting};

use crate::config::{BenchConfig, BuildKind, Region};
use crate::record::BenchRecord;

/// Untimed queries run before the measured round.
const WARMUP_QUERIES: usize = 100;

/// A (build, metric, guard) combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub mode: BuildMode,
    pub metric: MetricKind,
    pub guard: Guard,
}

impl Cell {
    pub const fn new(mode: BuildMode, metric: MetricKind, guard: Guard) -> Self {
        Cell { mode, metric, guard }
    }

    pub fn build_kind(&self) -> BuildKind {
        match self.mode {
            BuildMode::Batch => BuildKind::Batch,
            BuildMode::Incremental(_) => BuildKind::Incremental,
        }
    }

    /// Batch trees split on cardinal axes, so they count as classic.
    pub fn splitting(&self) -> Splitting {
        match self.mode {
            BuildMode::Batch => Splitting::Classic,
            BuildMode::Incremental(s) => s,
        }
    }

    /// Legend label in the `build/metric/guard` notation used by the plots.
    pub fn label(&self) -> String {
        let build = match self.mode {
            BuildMode::Batch => "batch-classic",
            other => other.name(),
        };
        match self.metric {
            MetricKind::Euclidean => format!("{build}/d_E"),
            MetricKind::ReedsShepp => format!("{build}/d_RS/{}", self.guard.name().to_uppercase()),
        }
    }

    fn matches(&self, cfg: &BenchConfig) -> bool {
        cfg.metric.is_none_or(|m| m == self.metric)
            && cfg.intersection.is_none_or(|g| g == self.guard)
            && cfg.build.is_none_or(|b| b == self.build_kind())
            && cfg.splitting.is_none_or(|s| s == self.splitting())
    }
}

const INC_CLASSIC: BuildMode = BuildMode::Incremental(Splitting::Classic);
const INC_LIE: BuildMode = BuildMode::Incremental(Splitting::Lie);

/// Leaf-count scaling: batch Euclidean, batch Reeds-Shepp, and incremental
/// Euclidean for comparison. The Euclidean box guard is the classic
/// coordinate-slab test.
pub fn exp1_cells() -> Vec<Cell> {
    vec![
        Cell::new(BuildMode::Batch, MetricKind::Euclidean, Guard::Bb),
        Cell::new(BuildMode::Batch, MetricKind::ReedsShepp, Guard::Bb),
        Cell::new(INC_CLASSIC, MetricKind::Euclidean, Guard::Bb),
    ]
}

/// Build and query comparison across guards and splitting sequences.
pub fn exp2_cells() -> Vec<Cell> {
    vec![
        Cell::new(INC_CLASSIC, MetricKind::Euclidean, Guard::Bb),
        Cell::new(INC_CLASSIC, MetricKind::ReedsShepp, Guard::Eb),
        Cell::new(INC_CLASSIC, MetricKind::ReedsShepp, Guard::Bb),
        Cell::new(BuildMode::Batch, MetricKind::ReedsShepp, Guard::Bb),
        Cell::new(INC_LIE, MetricKind::ReedsShepp, Guard::Bb),
    ]
}

pub fn sample_points<R: Rng + ?Sized>(region: &Region, n: usize, rng: &mut R) -> Vec<Se2Point> {
    use std::f64::consts::PI;
    (0..n)
        .map(|_| {
            Se2Point::new(
                rng.gen_range(region.x.0..region.x.1),
                rng.gen_range(region.y.0..region.y.1),
                rng.gen_range(-PI..PI),
            )
        })
        .collect()
}

/// Data and query sets for size `n`. Every cell of a run sees the same
/// sequences, drawn from their own ChaCha streams so sizes don't overlap.
pub fn workload(cfg: &BenchConfig, n: usize) -> (Vec<Se2Point>, Vec<Se2Point>) {
    let mut data = ChaCha8Rng::seed_from_u64(cfg.seed);
    data.set_stream(2 * n as u64);
    let mut queries = ChaCha8Rng::seed_from_u64(cfg.seed);
    queries.set_stream(2 * n as u64 + 1);
    (sample_points(&cfg.region, n, &mut data), sample_points(&cfg.region, cfg.queries, &mut queries))
}

/// Measures one cell on a prepared workload.
pub fn run_cell(experiment: &str, cell: Cell, cfg: &BenchConfig, points: &[Se2Point], queries: &[Se2Point]) -> Result<BenchRecord> {
    let metric = cell.metric.metric();

    let t = Instant::now();
    let tree = KdTree::build(points, cell.mode);
    let build_time = t.elapsed();

    for q in queries.iter().take(WARMUP_QUERIES) {
        black_box(tree.query(q, cfg.m, metric, cell.guard)?);
    }

    let mut stats = QueryStats::default();
    let mut query_time = std::time::Duration::ZERO;
    for q in queries {
        let t = Instant::now();
        let (found, s) = tree.query(q, cfg.m, metric, cell.guard)?;
        query_time += t.elapsed();
        black_box(found);
        stats += s;
    }

    let n = points.len();
    let count = queries.len() as f64;
    let leaves_mean = stats.leaves_visited as f64 / count;
    Ok(BenchRecord {
        experiment: experiment.to_string(),
        config: cell.label(),
        metric: cell.metric.name().to_string(),
        intersection: cell.guard.name().to_string(),
        build: cell.build_kind().name().to_string(),
        splitting: cell.splitting().name().to_string(),
        m: cfg.m as u64,
        queries: queries.len() as u64,
        seed: cfg.seed,
        n: n as u64,
        leaves_mean,
        vertices_mean: stats.vertices_visited as f64 / count,
        dist_evals_mean: stats.distance_evaluations as f64 / count,
        build_dist_evals: 0,
        build_time_us: build_time.as_secs_f64() * 1e6,
        query_time_us_mean: query_time.as_secs_f64() * 1e6 / count,
        leaves_norm: (cell.metric == MetricKind::ReedsShepp).then(|| leaves_mean / (n as f64).powf(1.0 / 6.0)),
    })
}

/// Runs every cell matching `cfg` at every size, rows ordered by size then
/// by cell. With `cfg.parallel` the (size, cell) jobs run on rayon.
pub fn run_cells(experiment: &str, cells: &[Cell], cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let cells: Vec<Cell> = cells.iter().copied().filter(|c| c.matches(cfg)).collect();
    let jobs: Vec<(usize, Cell)> = cfg.sizes.iter().flat_map(|&n| cells.iter().map(move |&c| (n, c))).collect();
    let job = |&(n, cell): &(usize, Cell)| {
        let (points, queries) = workload(cfg, n);
        run_cell(experiment, cell, cfg, &points, &queries)
    };
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        use rayon::prelude::*;
        return jobs.par_iter().map(job).collect();
    }
    jobs.iter().map(job).collect()
}

pub fn run_exp1(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    run_cells("exp1", &exp1_cells(), cfg)
}

pub fn run_exp2(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    run_cells("exp2", &exp2_cells(), cfg)
}
