//! Distances on SE(2) and ball-hyperplane intersection guards.
//!
//! A guard answers "may the ball `B(q, r)` reach the far side of this
//! hyperplane?". It must never answer `false` when the true ball crosses the
//! plane; false positives only cost extra vertex visits.
//!
//! Both guards work in the chart `R^2 x [-pi, pi)`. A ball whose angular
//! extent crosses the seam has several chart images (shifted by multiples of
//! `2 pi`). The guard collects the signed plane offsets of every image and
//! prunes only if all of them lie strictly on the same side.

mod reeds_shepp;

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

pub use reeds_shepp::{reeds_shepp_distance, reeds_shepp_length};

use crate::error::{Error, Result};
use crate::geometry::{dot, wrap, PrivilegedFrame, Se2Point, REEDS_SHEPP_BALL_BOX};

/// Relative and absolute radius inflation applied inside the guards so that
/// rounding in the distance evaluation cannot prune a neighbor sitting on
/// the bounding surface.
const RADIUS_REL_SLACK: f64 = 1e-9;
const RADIUS_ABS_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Negative,
    Positive,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Negative => Side::Positive,
            Side::Positive => Side::Negative,
        }
    }
}

/// The plane `<n, y> = <n, anchor>` in chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperplane {
    pub anchor: Se2Point,
    pub normal: [f64; 3],
}

impl Hyperplane {
    pub fn new(anchor: Se2Point, normal: [f64; 3]) -> Result<Self> {
        if normal.iter().all(|&c| c == 0.0) || normal.iter().any(|c| !c.is_finite()) {
            return Err(Error::ZeroNormal);
        }
        Ok(Self { anchor, normal })
    }

    /// `<n, y - anchor>` for a chart point `y` (angle not wrapped).
    #[inline]
    pub fn signed_offset(&self, y: &[f64; 3]) -> f64 {
        let a = self.anchor.coords();
        self.normal[0] * (y[0] - a[0]) + self.normal[1] * (y[1] - a[1]) + self.normal[2] * (y[2] - a[2])
    }

    /// Positive iff `x` lies strictly in the positive halfspace; the plane
    /// itself belongs to the negative side.
    #[inline]
    pub fn side(&self, x: &Se2Point) -> Side {
        if self.signed_offset(&x.coords()) > 0.0 {
            Side::Positive
        } else {
            Side::Negative
        }
    }
}

/// Which halfspace of `h(p, n)` contains `x`.
pub fn side_of(x: &Se2Point, p: &Se2Point, n: [f64; 3]) -> Result<Side> {
    Ok(Hyperplane::new(*p, n)?.side(x))
}

/// Ball-hyperplane strategy used to prune the sibling subtree during a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Guard {
    /// Cylinder `{planar distance <= r, |wrapped dtheta| <= 2r}`.
    Eb,
    /// The metric's outer bounding box.
    Bb,
    /// Never prune. Reference behaviour for tests.
    Always,
}

impl Guard {
    pub fn name(self) -> &'static str {
        match self {
            Guard::Eb => "eb",
            Guard::Bb => "bb",
            Guard::Always => "always",
        }
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Guard {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "eb" => Ok(Guard::Eb),
            "bb" => Ok(Guard::Bb),
            "always" => Ok(Guard::Always),
            _ => Err(format!("unknown intersection guard `{s}` (expected eb, bb)")),
        }
    }
}

/// A distance on SE(2) together with a bounding box for its balls.
pub trait Metric: Send + Sync {
    fn kind(&self) -> MetricKind;

    fn distance(&self, a: &Se2Point, b: &Se2Point) -> f64;

    /// Axes and half-extents of a box around `q` that contains `B(q, r)`
    /// for every `r >= 0` (angular offsets measured unwrapped).
    fn bounding_box(&self, q: &Se2Point, r: f64) -> ([[f64; 3]; 3], [f64; 3]);

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    fn ball_hyperplane(&self, guard: Guard, q: &Se2Point, r: f64, plane: &Hyperplane) -> bool {
        match guard {
            Guard::Eb => ball_hyperplane_eb(q, r, plane),
            Guard::Bb => {
                if !r.is_finite() {
                    return true;
                }
                let (axes, extents) = self.bounding_box(q, inflate(r));
                box_straddles(q, &axes, &extents, plane)
            }
            Guard::Always => true,
        }
    }
}

#[inline]
fn inflate(r: f64) -> f64 {
    r * (1.0 + RADIUS_REL_SLACK) + RADIUS_ABS_SLACK
}

/// Range of integers `k` such that `[c + 2 pi k - h, c + 2 pi k + h]` meets
/// the chart interval `[-pi, pi]`.
#[inline]
fn chart_images(center: f64, half: f64) -> std::ops::RangeInclusive<i64> {
    let lo = ((-PI - center - half) / TAU).ceil() as i64;
    let hi = ((PI - center + half) / TAU).floor() as i64;
    lo.min(0)..=hi.max(0)
}

/// Exact cylinder-plane test with wrap-aware angular images.
pub fn ball_hyperplane_eb(q: &Se2Point, r: f64, plane: &Hyperplane) -> bool {
    if !r.is_finite() {
        return true;
    }
    let r = inflate(r);
    let n = &plane.normal;
    let half_theta = 2.0 * r;
    let reach = r * n[0].hypot(n[1]) + half_theta * n[2].abs();
    let base = plane.signed_offset(&q.coords());
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in chart_images(q.theta(), half_theta) {
        let s = base + n[2] * TAU * k as f64;
        lo = lo.min(s - reach);
        hi = hi.max(s + reach);
    }
    !(hi < 0.0 || lo > 0.0)
}

/// Outer-box test against the Reeds-Shepp ball, using the body frame at `q`.
pub fn ball_hyperplane_bb(q: &Se2Point, r: f64, plane: &Hyperplane) -> bool {
    ReedsShepp.ball_hyperplane(Guard::Bb, q, r, plane)
}

/// Whether the 8 corners of any chart image of the box fail to lie strictly
/// on a single side of `plane`.
fn box_straddles(q: &Se2Point, axes: &[[f64; 3]; 3], extents: &[f64; 3], plane: &Hyperplane) -> bool {
    let n = &plane.normal;
    let base = plane.signed_offset(&q.coords());
    // the box is symmetric: its offsets span base +/- sum_i extent_i |<n, a_i>|
    let mut reach = 0.0;
    let mut half_theta = 0.0;
    for i in 0..3 {
        reach += extents[i] * dot(n, &axes[i]).abs();
        half_theta += extents[i] * axes[i][2].abs();
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in chart_images(q.theta(), half_theta) {
        let s = base + n[2] * TAU * k as f64;
        lo = lo.min(s - reach);
        hi = hi.max(s + reach);
    }
    !(hi < 0.0 || lo > 0.0)
}

/// `sqrt(dx^2 + dy^2 + wrap(dtheta)^2)`.
pub fn euclidean_distance(a: &Se2Point, b: &Se2Point) -> f64 {
    let d = a.offset_to(b);
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Euclidean;

impl Metric for Euclidean {
    fn kind(&self) -> MetricKind {
        MetricKind::Euclidean
    }

    #[inline]
    fn distance(&self, a: &Se2Point, b: &Se2Point) -> f64 {
        euclidean_distance(a, b)
    }

    fn bounding_box(&self, _q: &Se2Point, r: f64) -> ([[f64; 3]; 3], [f64; 3]) {
        ([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], [r; 3])
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReedsShepp;

impl Metric for ReedsShepp {
    fn kind(&self) -> MetricKind {
        MetricKind::ReedsShepp
    }

    #[inline]
    fn distance(&self, a: &Se2Point, b: &Se2Point) -> f64 {
        reeds_shepp_distance(a, b)
    }

    fn bounding_box(&self, q: &Se2Point, r: f64) -> ([[f64; 3]; 3], [f64; 3]) {
        let mut extents = [0.0; 3];
        for i in 0..3 {
            extents[i] = REEDS_SHEPP_BALL_BOX.outer[i] * r.powi(PrivilegedFrame::WEIGHTS[i] as i32);
        }
        (PrivilegedFrame::at(q).axes(), extents)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Euclidean,
    ReedsShepp,
}

impl MetricKind {
    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Euclidean => "euclidean",
            MetricKind::ReedsShepp => "reeds-shepp",
        }
    }

    pub fn metric(self) -> &'static dyn Metric {
        match self {
            MetricKind::Euclidean => &Euclidean,
            MetricKind::ReedsShepp => &ReedsShepp,
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "euclidean" => Ok(MetricKind::Euclidean),
            "reeds-shepp" => Ok(MetricKind::ReedsShepp),
            _ => Err(format!("unknown metric `{s}` (expected euclidean, reeds-shepp)")),
        }
    }
}

/// Wrapped absolute heading difference.
#[inline]
pub fn angular_gap(a: &Se2Point, b: &Se2Point) -> f64 {
    wrap(b.theta() - a.theta()).abs()
}
