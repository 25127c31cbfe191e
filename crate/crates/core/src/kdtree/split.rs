//! Splitting sequences: the hyperplane normal given to a vertex inserted at
//! a given depth.

use std::fmt;
use std::str::FromStr;

use crate::geometry::{PrivilegedFrame, Se2Point};

pub trait SplittingSequence {
    /// A nonzero normal for a vertex at `depth` holding `point`.
    fn normal_for(&self, depth: u32, point: &Se2Point) -> [f64; 3];
}

/// Cycles the cardinal chart axes: `e_{depth mod 3}`.
pub fn classic_split(depth: u32, _point: &Se2Point) -> [f64; 3] {
    let mut n = [0.0; 3];
    n[(depth % 3) as usize] = 1.0;
    n
}

/// Reeds-Shepp Lie splitting: `l, l, f, theta` repeating, evaluated in the
/// body frame of the point. The lateral axis (weight 2) is used twice as
/// often as the weight-1 axes.
pub fn lie_split_rs(depth: u32, point: &Se2Point) -> [f64; 3] {
    let frame = PrivilegedFrame::at(point);
    match depth % 4 {
        0 | 1 => frame.l,
        2 => frame.f,
        _ => frame.theta,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Splitting {
    Classic,
    Lie,
}

impl Splitting {
    pub fn name(self) -> &'static str {
        match self {
            Splitting::Classic => "classic",
            Splitting::Lie => "lie",
        }
    }
}

impl SplittingSequence for Splitting {
    fn normal_for(&self, depth: u32, point: &Se2Point) -> [f64; 3] {
        match self {
            Splitting::Classic => classic_split(depth, point),
            Splitting::Lie => lie_split_rs(depth, point),
        }
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Splitting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "classic" => Ok(Splitting::Classic),
            "lie" => Ok(Splitting::Lie),
            _ => Err(format!("unknown splitting sequence `{s}` (expected classic, lie)")),
        }
    }
}
