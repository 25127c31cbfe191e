//! SE(2) configuration-space primitives.
//!
//! A configuration is `(x, y, theta)` with the heading kept in the canonical
//! range `[-pi, pi)`. The Reeds-Shepp car moves along its body frame: the
//! front axis `f` and the rotation axis `theta` are directly actuated
//! (weight 1), the lateral axis `l` is only reachable through their Lie
//! bracket (weight 2). Reachable sets of time `eps` are sandwiched between
//! an inner and an outer weighted box whose sides scale as `eps^w`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Wraps an angle into `[-pi, pi)`.
///
/// Rejects non-finite input; see [`wrap`] for the unchecked variant used on
/// hot paths.
pub fn wrap_angle(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFiniteAngle(a));
    }
    Ok(wrap(a))
}

/// Unchecked [`wrap_angle`]. Non-finite input yields NaN.
#[inline]
pub fn wrap(a: f64) -> f64 {
    if (-PI..PI).contains(&a) {
        return a;
    }
    let mut r = a - TAU * ((a + PI) / TAU).floor();
    // floor() rounding can land exactly on the excluded endpoint
    if r >= PI {
        r -= TAU;
    } else if r < -PI {
        r += TAU;
    }
    r
}

/// A configuration on SE(2). The heading is always canonical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Se2Point {
    pub x: f64,
    pub y: f64,
    theta: f64,
}

impl Se2Point {
    /// Builds a point, wrapping `theta` into `[-pi, pi)`.
    #[inline]
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Self { x, y, theta: wrap(theta) }
    }

    /// Like [`Se2Point::new`] but rejects non-finite coordinates.
    pub fn try_new(x: f64, y: f64, theta: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFiniteAngle(if x.is_finite() { y } else { x }));
        }
        Ok(Self { x, y, theta: wrap_angle(theta)? })
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Chart coordinates `(x, y, theta)`.
    #[inline]
    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.theta]
    }

    /// Offset `q - self` with the angular part wrapped.
    #[inline]
    pub fn offset_to(&self, q: &Se2Point) -> [f64; 3] {
        [q.x - self.x, q.y - self.y, wrap(q.theta - self.theta)]
    }
}

#[inline]
pub(crate) fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Reeds-Shepp privileged directions at a point: front, lateral, rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrivilegedFrame {
    pub f: [f64; 3],
    pub l: [f64; 3],
    pub theta: [f64; 3],
}

impl PrivilegedFrame {
    /// Lie-bracket order of `(f, l, theta)`.
    pub const WEIGHTS: [u32; 3] = [1, 2, 1];

    pub fn at(p: &Se2Point) -> Self {
        let (s, c) = p.theta.sin_cos();
        Self { f: [c, s, 0.0], l: [-s, c, 0.0], theta: [0.0, 0.0, 1.0] }
    }

    /// Axes in weight order `(f, l, theta)`.
    pub fn axes(&self) -> [[f64; 3]; 3] {
        [self.f, self.l, self.theta]
    }
}

pub fn frame_at(p: &Se2Point) -> PrivilegedFrame {
    PrivilegedFrame::at(p)
}

/// Multipliers of the Reeds-Shepp ball-box sandwich, ordered `(f, l, theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallBoxConstants {
    pub inner: [f64; 3],
    pub outer: [f64; 3],
}

pub const REEDS_SHEPP_BALL_BOX: BallBoxConstants = BallBoxConstants {
    // sqrt(3/2) - 1
    inner: [0.224_744_871_391_589_05, 0.125, 1.0],
    outer: [1.0, 0.5, 1.0],
};

/// Anisotropic box `{y : |<y - p, a_i>| < mu_i eps^w_i}` around `center`.
///
/// The angular component of `y - p` is taken wrap-aware. Extents are stored
/// alongside `(mu, eps)` so the query loop never recomputes powers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedBox {
    pub center: Se2Point,
    pub axes: [[f64; 3]; 3],
    pub weights: [u32; 3],
    pub multipliers: [f64; 3],
    pub size: f64,
    pub extents: [f64; 3],
}

impl WeightedBox {
    pub fn new(
        center: Se2Point,
        axes: [[f64; 3]; 3],
        weights: [u32; 3],
        multipliers: [f64; 3],
        size: f64,
    ) -> Result<Self> {
        if !(size > 0.0 && size.is_finite()) {
            return Err(Error::NonPositiveSize(size));
        }
        let mut extents = [0.0; 3];
        for i in 0..3 {
            extents[i] = multipliers[i] * size.powi(weights[i] as i32);
        }
        Ok(Self { center, axes, weights, multipliers, size, extents })
    }

    /// The 8 chart-space vertices `center +/- extent_i * axis_i`.
    ///
    /// The angular coordinate is not re-wrapped: corners live in the chart
    /// around `center`, possibly beyond `+/-pi`.
    pub fn corners(&self) -> [[f64; 3]; 8] {
        let c = self.center.coords();
        let mut out = [[0.0; 3]; 8];
        for (k, corner) in out.iter_mut().enumerate() {
            *corner = c;
            for i in 0..3 {
                let sign = if k >> i & 1 == 1 { 1.0 } else { -1.0 };
                for j in 0..3 {
                    corner[j] += sign * self.extents[i] * self.axes[i][j];
                }
            }
        }
        out
    }

    /// Strict containment per axis, angular offset wrapped.
    pub fn contains(&self, q: &Se2Point) -> bool {
        let d = self.center.offset_to(q);
        (0..3).all(|i| dot(&d, &self.axes[i]).abs() < self.extents[i])
    }
}

/// Outer Reeds-Shepp box `Box^{w,C}(p, eps)`.
pub fn outer_box(p: &Se2Point, eps: f64) -> Result<WeightedBox> {
    WeightedBox::new(
        *p,
        PrivilegedFrame::at(p).axes(),
        PrivilegedFrame::WEIGHTS,
        REEDS_SHEPP_BALL_BOX.outer,
        eps,
    )
}

/// Inner Reeds-Shepp box `Box^{w,c}(p, eps)`.
pub fn inner_box(p: &Se2Point, eps: f64) -> Result<WeightedBox> {
    WeightedBox::new(
        *p,
        PrivilegedFrame::at(p).axes(),
        PrivilegedFrame::WEIGHTS,
        REEDS_SHEPP_BALL_BOX.inner,
        eps,
    )
}
