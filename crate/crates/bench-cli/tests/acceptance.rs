//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p srkd-bench-cli --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srkd::geometry::{inner_box, outer_box};
use srkd::metrics::{angular_gap, reeds_shepp_distance};
use srkd::oracle::{rs_distance_upper_bound, sample_in_box, simulate_reachable};
use srkd::{BuildMode, Guard, KdTree, Metric, MetricKind, ReedsShepp, Se2Point, Splitting};
use srkd_bench_cli::analysis::max_min_ratio;
use srkd_bench_cli::experiment::{run_cells, sample_points, Cell};
use srkd_bench_cli::{complexity_exponent, run_exp1, BenchConfig, BenchRecord, Region};

const SEED: u64 = 0;
const TOL_EXACT: f64 = 1e-12;
const TOL_METRIC: f64 = 1e-9;
const OUTER_SLACK: f64 = 1e-6;
const INNER_SLACK: f64 = 1e-3;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn exactness() -> Outcome {
    let modes = [BuildMode::Batch, BuildMode::Incremental(Splitting::Classic), BuildMode::Incremental(Splitting::Lie)];
    let region = Region::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut combos, mut mismatches, mut worst) = (0usize, 0usize, 0.0f64);
    for n in [1usize, 2, 10, 100, 5000] {
        let count = if n == 5000 { 1000 } else { 100 };
        let points = sample_points(&region, n, &mut rng);
        let queries = sample_points(&region, count, &mut rng);
        for kind in [MetricKind::Euclidean, MetricKind::ReedsShepp] {
            let metric = kind.metric();
            // one sorted scan per query serves every m
            let scans: Vec<Vec<f64>> = queries
                .iter()
                .map(|q| {
                    let mut d: Vec<f64> = points.iter().map(|p| metric.distance(q, p)).collect();
                    d.sort_by(f64::total_cmp);
                    d
                })
                .collect();
            for mode in modes {
                let tree = KdTree::build(&points, mode);
                for guard in [Guard::Eb, Guard::Bb] {
                    for m in [1usize, 4, 8] {
                        combos += 1;
                        let mut bad = false;
                        for (q, scan) in queries.iter().zip(&scans) {
                            let (got, _) = tree.query(q, m, metric, guard).expect("query");
                            let want = &scan[..m.min(n)];
                            if got.len() != want.len() {
                                bad = true;
                                continue;
                            }
                            for (g, w) in got.iter().zip(want) {
                                let e = (g.distance - w).abs();
                                worst = worst.max(e);
                                bad |= e > TOL_EXACT;
                            }
                        }
                        mismatches += bad as usize;
                    }
                }
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{combos} configurations, {mismatches} mismatching, max |d - d_scan| = {worst:.1e} (tol {TOL_EXACT:.0e})"),
    )
}

fn series(rows: &[BenchRecord], config: &str, from: u64) -> Vec<(u64, f64, Option<f64>)> {
    rows.iter()
        .filter(|r| r.config == config && r.n >= from)
        .map(|r| (r.n, r.leaves_mean, r.leaves_norm))
        .collect()
}

fn scaling() -> Outcome {
    let cfg = BenchConfig { seed: SEED, ..BenchConfig::default() };
    let rows = run_exp1(&cfg).expect("exp1");
    let from = 1 << 13;
    let rs = series(&rows, "batch-classic/d_RS/BB", from);
    let eu = series(&rows, "batch-classic/d_E", from);
    let norm: Vec<f64> = rs.iter().map(|r| r.2.expect("normalised column")).collect();
    let norm_ratio = max_min_ratio(&norm).unwrap_or(f64::INFINITY);
    let growth = rs.last().unwrap().1 / rs.first().unwrap().1;
    let eu_ratio = max_min_ratio(&eu.iter().map(|r| r.1).collect::<Vec<_>>()).unwrap_or(f64::INFINITY);
    let raw: Vec<String> = rs.iter().map(|r| format!("{:.2}", r.1)).collect();
    outcome(
        norm_ratio <= 1.7 && growth >= 1.5 && eu_ratio <= 1.5,
        format!(
            "RS leaves/N^(1/6) max/min {norm_ratio:.3} (<= 1.7); RS leaves growth 2^13->2^17 {growth:.3} (>= 1.5); \
             Euclidean max/min {eu_ratio:.3} (<= 1.5); RS leaves [{}]",
            raw.join(", ")
        ),
    )
}

fn exponent() -> Outcome {
    let mut ok = complexity_exponent(&[1, 1, 2]) == Ok(Rational64::new(1, 6));
    ok &= (1..=8).all(|k| complexity_exponent(&vec![1; k]) == Ok(Rational64::from_integer(0)));
    ok &= complexity_exponent(&[1, 1, 2, 2, 3]) == Ok(Rational64::new(8, 45));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out_of_range = 0;
    for _ in 0..10_000 {
        let k = rng.gen_range(1..=8);
        let w: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
        let p = complexity_exponent(&w).expect("positive weights");
        if !(p >= Rational64::from_integer(0) && p < Rational64::from_integer(1)) {
            out_of_range += 1;
        }
    }
    outcome(
        ok && out_of_range == 0,
        format!("(1,1,2) -> 1/6, ones -> 0, (1,1,2,2,3) -> 8/45; {out_of_range}/10000 fuzz cases outside [0, 1)"),
    )
}

fn mean_by(rows: &[BenchRecord], config: &str, n: u64, f: fn(&BenchRecord) -> f64) -> f64 {
    rows.iter().find(|r| r.config == config && r.n == n).map(f).expect("row present")
}

fn bb_vs_eb() -> Outcome {
    let classic = BuildMode::Incremental(Splitting::Classic);
    let cells = [
        Cell::new(classic, MetricKind::ReedsShepp, Guard::Eb),
        Cell::new(classic, MetricKind::ReedsShepp, Guard::Bb),
    ];
    let sizes = vec![1 << 13, 100_000, 1 << 17];
    let cfg = BenchConfig { seed: SEED, sizes, ..BenchConfig::default() };
    let rows = run_cells("acceptance", &cells, &cfg).expect("cells");
    let evals = |guard: &str, n: usize| mean_by(&rows, &format!("incremental-classic/d_RS/{guard}"), n as u64, |r| r.dist_evals_mean);
    let (eb, bb) = (evals("EB", 100_000), evals("BB", 100_000));
    let lo = evals("EB", 1 << 13) / evals("BB", 1 << 13);
    let hi = evals("EB", 1 << 17) / evals("BB", 1 << 17);
    outcome(
        bb < eb && hi > lo,
        format!("N=1e5 mean distance evals BB {bb:.2} < EB {eb:.2}; EB/BB ratio {lo:.3} at 2^13 < {hi:.3} at 2^17"),
    )
}

fn lie_vs_classic() -> Outcome {
    let cells = [
        Cell::new(BuildMode::Incremental(Splitting::Classic), MetricKind::ReedsShepp, Guard::Bb),
        Cell::new(BuildMode::Incremental(Splitting::Lie), MetricKind::ReedsShepp, Guard::Bb),
    ];
    let cfg = BenchConfig { seed: SEED, sizes: vec![100_000], ..BenchConfig::default() };
    let rows = run_cells("acceptance", &cells, &cfg).expect("cells");
    let classic = mean_by(&rows, "incremental-classic/d_RS/BB", 100_000, |r| r.vertices_mean);
    let lie = mean_by(&rows, "incremental-lie/d_RS/BB", 100_000, |r| r.vertices_mean);
    outcome(lie < classic, format!("N=1e5 mean vertices visited Lie {lie:.2} < classic {classic:.2}"))
}

fn ball_box() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let center = |rng: &mut ChaCha8Rng| Se2Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-PI..PI));
    let (mut outer_violations, mut inner_violations) = (0usize, 0usize);
    let mut inner_worst = 0.0f64;
    for eps in [0.02, 0.05, 0.1] {
        for _ in 0..100 {
            let q = center(&mut rng);
            let outer = outer_box(&q, eps * (1.0 + OUTER_SLACK)).expect("box");
            for y in simulate_reachable(&q, eps, 100, &mut rng).expect("simulate") {
                outer_violations += !outer.contains(&y) as usize;
            }
        }
        for _ in 0..1000 {
            let q = center(&mut rng);
            let y = sample_in_box(&inner_box(&q, eps).expect("box"), &mut rng);
            let ratio = reeds_shepp_distance(&q, &y) / eps;
            inner_worst = inner_worst.max(ratio);
            inner_violations += (ratio > 1.0 + INNER_SLACK) as usize;
        }
    }
    outcome(
        outer_violations == 0 && inner_violations == 0,
        format!(
            "eps in {{0.02, 0.05, 0.1}}: {outer_violations}/30000 reachable points outside the outer box; \
             {inner_violations}/3000 inner-box samples beyond eps(1+1e-3), max d/eps {inner_worst:.4}"
        ),
    )
}

fn rs_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let pt = |rng: &mut ChaCha8Rng, h: f64| Se2Point::new(rng.gen_range(-h..h), rng.gen_range(-h..h), rng.gen_range(-PI..PI));

    let resolutions = [100usize, 200, 400];
    let mut above = 0usize;
    let mut gaps = [0.0f64; 3];
    for _ in 0..200 {
        let (a, b) = (pt(&mut rng, 2.0), pt(&mut rng, 2.0));
        let d = reeds_shepp_distance(&a, &b);
        for (i, &res) in resolutions.iter().enumerate() {
            let ub = rs_distance_upper_bound(&a, &b, res).expect("oracle");
            above += (d > ub + TOL_METRIC) as usize;
            gaps[i] += (ub - d) / 200.0;
        }
    }
    let shrinking = gaps[1] < gaps[0] && gaps[2] < gaps[1];

    let mut lower = 0usize;
    for _ in 0..10_000 {
        let (a, b) = (pt(&mut rng, 10.0), pt(&mut rng, 10.0));
        let d = reeds_shepp_distance(&a, &b);
        let planar = (b.x - a.x).hypot(b.y - a.y);
        lower += (d + TOL_METRIC < planar || d + TOL_METRIC < angular_gap(&a, &b)) as usize;
    }

    let (mut asym, mut triangle) = (0usize, 0usize);
    for _ in 0..10_000 {
        let (a, b, c) = (pt(&mut rng, 3.0), pt(&mut rng, 3.0), pt(&mut rng, 3.0));
        let ab = ReedsShepp.distance(&a, &b);
        asym += ((ab - ReedsShepp.distance(&b, &a)).abs() > TOL_METRIC) as usize;
        triangle += (ReedsShepp.distance(&a, &c) > ab + ReedsShepp.distance(&b, &c) + TOL_METRIC) as usize;
    }
    outcome(
        above == 0 && shrinking && lower == 0 && asym == 0 && triangle == 0,
        format!(
            "{above}/600 closed-form values above the oracle; mean gap {:.2e} -> {:.2e} -> {:.2e} at resolution 100/200/400; \
             {lower}/10000 lower-bound, {asym}/10000 symmetry, {triangle}/10000 triangle violations",
            gaps[0], gaps[1], gaps[2]
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("exactness vs linear scan", exactness),
        ("leaf-count scaling law", scaling),
        ("complexity exponent formula", exponent),
        ("box guard vs cylinder guard", bb_vs_eb),
        ("Lie splitting vs classic splitting", lie_vs_classic),
        ("ball-box containment", ball_box),
        ("Reeds-Shepp metric validation", rs_validation),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let o = run();
        failed += !o.pass as usize;
        println!("{} {name}: {} [{:.1}s]", if o.pass { "PASS" } else { "FAIL" }, o.detail, t.elapsed().as_secs_f64());
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
