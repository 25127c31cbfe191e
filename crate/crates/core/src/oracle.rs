//! Ground-truth references.
//!
//! Nothing here shares code with the fast paths it checks: the linear scan
//! evaluates every distance, the reachable-set simulator integrates the car
//! dynamics in closed form, and the Reeds-Shepp upper bound builds feasible
//! paths from circle-tangent geometry instead of the word formulas.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{wrap, Se2Point, WeightedBox};
use crate::kdtree::Neighbor;
use crate::metrics::Metric;

/// Exhaustive m-NN. Ties keep index order.
pub fn linear_scan<M: Metric + ?Sized>(points: &[Se2Point], q: &Se2Point, m: usize, metric: &M) -> Result<Vec<Neighbor>> {
    if m == 0 {
        return Err(Error::ZeroNeighbors);
    }
    let mut all: Vec<Neighbor> = points
        .iter()
        .enumerate()
        .map(|(index, p)| Neighbor { index, distance: metric.distance(q, p) })
        .collect();
    all.sort_by(|a, b| a.distance.total_cmp(&b.distance).then(a.index.cmp(&b.index)));
    all.truncate(m);
    Ok(all)
}

/// One piece of a piecewise-constant control: `u1` is the signed speed,
/// `u2` the steering (`+1` left, `-1` right, `0` straight).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlSegment {
    pub speed: f64,
    pub steer: f64,
    pub duration: f64,
}

#[derive(Debug, Clone, Copy)]
struct Pose {
    x: f64,
    y: f64,
    th: f64,
}

impl Pose {
    fn from_point(p: &Se2Point) -> Self {
        Pose { x: p.x, y: p.y, th: p.theta() }
    }

    /// Moves along the unit circle turning in direction `k` by signed arc
    /// length `a` (negative = reverse gear).
    #[inline]
    fn arc(self, k: f64, a: f64) -> Pose {
        let (s0, c0) = self.th.sin_cos();
        let cx = self.x - k * s0;
        let cy = self.y + k * c0;
        let th = self.th + k * a;
        let (s1, c1) = th.sin_cos();
        Pose { x: cx + k * s1, y: cy - k * c1, th }
    }

    #[inline]
    fn straight(self, u: f64) -> Pose {
        let (s, c) = self.th.sin_cos();
        Pose { x: self.x + u * c, y: self.y + u * s, th: self.th }
    }

    /// Centre of the unit turning circle in direction `k`.
    #[inline]
    fn center(&self, k: f64) -> (f64, f64) {
        let (s, c) = self.th.sin_cos();
        (self.x - k * s, self.y + k * c)
    }
}

/// Integrates `x' = u1 cos th, y' = u1 sin th, th' = u1 u2` exactly.
pub fn integrate(start: &Se2Point, controls: &[ControlSegment]) -> Se2Point {
    let mut pose = Pose::from_point(start);
    for seg in controls {
        let a = seg.speed * seg.duration;
        pose = if seg.steer == 0.0 {
            pose.straight(a)
        } else {
            pose.arc(seg.steer.signum(), a)
        };
    }
    Se2Point::new(pose.x, pose.y, pose.th)
}

/// Draws `samples` endpoints of random bang-bang controls (at most four
/// pieces) of total duration `horizon` started at `q`.
pub fn simulate_reachable<R: Rng + ?Sized>(q: &Se2Point, horizon: f64, samples: usize, rng: &mut R) -> Result<Vec<Se2Point>> {
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::NonPositiveHorizon(horizon));
    }
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let controls = random_controls(horizon, rng);
        out.push(integrate(q, &controls));
    }
    Ok(out)
}

/// Uniform sample from the interior of `b`, in chart coordinates around its
/// centre (angle wrapped).
pub fn sample_in_box<R: Rng + ?Sized>(b: &WeightedBox, rng: &mut R) -> Se2Point {
    let mut y = b.center.coords();
    for i in 0..3 {
        let c = rng.gen_range(-1.0..1.0) * b.extents[i];
        for j in 0..3 {
            y[j] += c * b.axes[i][j];
        }
    }
    Se2Point::new(y[0], y[1], y[2])
}

fn random_controls<R: Rng + ?Sized>(horizon: f64, rng: &mut R) -> Vec<ControlSegment> {
    let pieces = rng.gen_range(1..=4);
    let mut cuts: Vec<f64> = (1..pieces).map(|_| rng.gen_range(0.0..horizon)).collect();
    cuts.push(0.0);
    cuts.push(horizon);
    cuts.sort_by(f64::total_cmp);
    cuts.windows(2)
        .map(|w| ControlSegment {
            speed: if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
            steer: [-1.0, 0.0, 1.0][rng.gen_range(0..3)],
            duration: w[1] - w[0],
        })
        .collect()
}

/// Shortest C-S-C connection between two poses over all turn directions
/// and gears, from the tangent lines of the two turning circles.
fn csc_tail(s: &Pose, g: &Pose) -> f64 {
    let mut best = f64::INFINITY;
    for k1 in [1.0, -1.0] {
        let (c1x, c1y) = s.center(k1);
        for k2 in [1.0, -1.0] {
            let (c2x, c2y) = g.center(k2);
            let (dx, dy) = (c2x - c1x, c2y - c1y);
            let d2 = dx * dx + dy * dy;
            let ang = dy.atan2(dx);
            let mut consider = |h: f64, u: f64| {
                let len = wrap(h - s.th).abs() + u.abs() + wrap(g.th - h).abs();
                if len < best {
                    best = len;
                }
            };
            if k1 == k2 {
                let d = d2.sqrt();
                consider(ang, d);
                consider(ang + PI, d);
            } else if d2 >= 4.0 {
                let u = (d2 - 4.0).sqrt();
                for u in [u, -u] {
                    consider(ang - (k2 - k1).atan2(u), u);
                }
            }
        }
    }
    best
}

/// Shortest C|C|C connection: a middle circle tangent to both end circles.
fn ccc_tail(s: &Pose, g: &Pose) -> f64 {
    let mut best = f64::INFINITY;
    for k in [1.0, -1.0] {
        let (c1x, c1y) = s.center(k);
        let (c3x, c3y) = g.center(k);
        let (dx, dy) = (c3x - c1x, c3y - c1y);
        let d = dx.hypot(dy);
        if !(1e-12..=4.0).contains(&d) {
            continue;
        }
        let h = (4.0 - 0.25 * d * d).max(0.0).sqrt();
        let (px, py) = (-dy / d, dx / d);
        for sign in [1.0, -1.0] {
            let mx = c1x + 0.5 * dx + sign * h * px;
            let my = c1y + 0.5 * dy + sign * h * py;
            // l(h1) = (m - c1) / (-2k), l(h2) = (c3 - m) / (2k), l(h) = (-sin h, cos h)
            let (v1x, v1y) = ((mx - c1x) / (-2.0 * k), (my - c1y) / (-2.0 * k));
            let h1 = (-v1x).atan2(v1y);
            let (v2x, v2y) = ((c3x - mx) / (2.0 * k), (c3y - my) / (2.0 * k));
            let h2 = (-v2x).atan2(v2y);
            let len = wrap(h1 - s.th).abs() + wrap(h2 - h1).abs() + wrap(g.th - h2).abs();
            if len < best {
                best = len;
            }
        }
    }
    best
}

/// Minimum resolution accepted by [`rs_distance_upper_bound`].
pub const MIN_RESOLUTION: usize = 100;

/// Length of the best feasible Reeds-Shepp path found by scanning a leading
/// and a trailing arc on a grid of `resolution` angles per turn direction,
/// closing the middle with an exact C-S-C or C|C|C connection.
///
/// Covers CSC, CCC, CCSC, CSCC, CCSCC and CCCC words; always at least the
/// true distance, converging to it as the grid is refined.
pub fn rs_distance_upper_bound(a: &Se2Point, b: &Se2Point, resolution: usize) -> Result<f64> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::ResolutionTooLow { min: MIN_RESOLUTION, got: resolution });
    }
    if a == b {
        return Ok(0.0);
    }
    let mut arcs = vec![(0.0, 0.0)];
    for k in [1.0, -1.0] {
        for j in 0..resolution {
            let t = -PI + TAU * j as f64 / resolution as f64;
            if t != 0.0 {
                arcs.push((k, t));
            }
        }
    }
    let s0 = Pose::from_point(a);
    let g0 = Pose::from_point(b);
    let heads: Vec<(Pose, f64)> = arcs.iter().map(|&(k, t)| (if k == 0.0 { s0 } else { s0.arc(k, t) }, t.abs())).collect();
    let tails: Vec<(Pose, f64)> = arcs.iter().map(|&(k, t)| (if k == 0.0 { g0 } else { g0.arc(k, -t) }, t.abs())).collect();

    let mut best = f64::INFINITY;
    for (s, ls) in &heads {
        for (g, lg) in &tails {
            let fixed = ls + lg;
            if fixed >= best {
                continue;
            }
            let len = fixed + csc_tail(s, g).min(ccc_tail(s, g));
            if len < best {
                best = len;
            }
        }
    }
    Ok(best)
}
