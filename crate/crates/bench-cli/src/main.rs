use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srkd::oracle::linear_scan;
use srkd::{BuildMode, Guard, KdTree, MetricKind, Splitting};
use srkd_bench_cli::config::parse_sizes;
use srkd_bench_cli::experiment::sample_points;
use srkd_bench_cli::record::write_records;
use srkd_bench_cli::{complexity_exponent, run_exp1, run_exp2, write_csv, BenchConfig, BenchRecord, BuildKind, Region};

#[derive(Parser)]
#[command(name = "srkd-bench", version, about = "k-d tree nearest-neighbor benchmarks on SE(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mean leaves visited vs N for batch trees (Euclidean and Reeds-Shepp).
    Exp1(RunArgs),
    /// Distance evaluations and timings across guards and splittings.
    Exp2(RunArgs),
    /// Print the complexity exponent for a list of weights.
    Exponent {
        /// Comma-separated positive weights.
        #[arg(long, default_value = "1,1,2", value_delimiter = ',')]
        weights: Vec<u32>,
    },
    /// Quick exactness check of every configuration against a linear scan.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Tree sizes: integers or 2^k, comma-separated.
    #[arg(long, default_value = "2^10,2^11,2^12,2^13,2^14,2^15,2^16,2^17")]
    sizes: String,
    #[arg(long, default_value_t = 1000)]
    queries: usize,
    /// Neighbors per query.
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only configurations with this metric (euclidean, reeds-shepp).
    #[arg(long)]
    metric: Option<MetricKind>,
    /// Keep only configurations with this guard (eb, bb).
    #[arg(long)]
    intersection: Option<Guard>,
    /// Keep only configurations with this build (batch, incremental).
    #[arg(long)]
    build: Option<BuildKind>,
    /// Keep only configurations with this splitting (classic, lie).
    #[arg(long)]
    splitting: Option<Splitting>,
    /// CSV output path; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Planar sampling box `xmin,xmax,ymin,ymax`.
    #[arg(long, default_value_t = Region::default())]
    region: Region,
    /// Run independent (configuration, N) cells in parallel.
    #[arg(long)]
    parallel: bool,
}

impl RunArgs {
    fn into_config(self) -> Result<BenchConfig> {
        let cfg = BenchConfig {
            metric: self.metric,
            intersection: self.intersection,
            build: self.build,
            splitting: self.splitting,
            sizes: parse_sizes(&self.sizes)?,
            queries: self.queries,
            m: self.m,
            seed: self.seed,
            region: self.region,
            out: self.out,
            parallel: self.parallel,
        };
        cfg.validate()?;
        if cfg.parallel && !cfg!(feature = "parallel") {
            eprintln!("warning: built without the `parallel` feature, running sequentially");
        }
        Ok(cfg)
    }
}

fn emit(cfg: &BenchConfig, records: &[BenchRecord]) -> Result<()> {
    match &cfg.out {
        Some(path) => write_csv(path, records),
        None => write_records(io::stdout().lock(), records),
    }
}

fn selftest(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let region = Region::default();
    let modes = [BuildMode::Batch, BuildMode::Incremental(Splitting::Classic), BuildMode::Incremental(Splitting::Lie)];
    let mut failures = 0;
    for n in [1usize, 2, 10, 100, 2000] {
        let points = sample_points(&region, n, &mut rng);
        let queries = sample_points(&region, 50, &mut rng);
        for mode in modes {
            let tree = KdTree::build(&points, mode);
            for kind in [MetricKind::Euclidean, MetricKind::ReedsShepp] {
                for guard in [Guard::Eb, Guard::Bb] {
                    let metric = kind.metric();
                    let mut ok = true;
                    for q in &queries {
                        let (got, _) = tree.query(q, 4, metric, guard)?;
                        let want = linear_scan(&points, q, 4, metric)?;
                        ok &= got.len() == want.len()
                            && got.iter().zip(&want).all(|(g, w)| (g.distance - w.distance).abs() <= 1e-12);
                    }
                    if !ok {
                        failures += 1;
                        println!("FAIL n={n} {mode} {kind} {guard}");
                    }
                }
            }
        }
    }
    if failures > 0 {
        bail!("{failures} configurations disagree with the linear scan");
    }
    println!("selftest ok: 60 configurations agree with the linear scan");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Exp1(args) => {
            let cfg = args.into_config()?;
            emit(&cfg, &run_exp1(&cfg)?)
        }
        Command::Exp2(args) => {
            let cfg = args.into_config()?;
            emit(&cfg, &run_exp2(&cfg)?)
        }
        Command::Exponent { weights } => {
            let p = complexity_exponent(&weights)?;
            println!("{p}");
            Ok(())
        }
        Command::Selftest { seed } => selftest(seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
