//! Closed-form Reeds-Shepp shortest path length, turning radius 1.
//!
//! The goal is expressed in the start frame and every canonical word family
//! (CSC, CCC, CCCC, CCSC, CCSCC) is tried under the time-flip, reflection
//! and backwards symmetries, which together enumerate the 48 candidate
//! curves. Only lengths are kept; the path itself is never materialised.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::geometry::Se2Point;

// Segment-sign tolerance. Short goals lose digits to cancellation in the
// circle-centre offsets; any signed solution is still a feasible path, so
// a loose tolerance admits extra candidates but never an infeasible one.
const ZERO: f64 = 1e-10;

#[inline]
fn mod2pi(x: f64) -> f64 {
    let v = x % TAU;
    if v < -PI {
        v + TAU
    } else if v > PI {
        v - TAU
    } else {
        v
    }
}

#[inline]
fn polar(x: f64, y: f64) -> (f64, f64) {
    (x.hypot(y), y.atan2(x))
}

#[inline]
fn tau_omega(u: f64, v: f64, xi: f64, eta: f64, phi: f64) -> (f64, f64) {
    let delta = mod2pi(u - v);
    let a = u.sin() - delta.sin();
    let b = u.cos() - delta.cos() - 1.0;
    let t1 = (eta * a - xi * b).atan2(xi * a + eta * b);
    let t2 = 2.0 * (delta.cos() - v.cos() - u.cos()) + 3.0;
    let tau = if t2 < 0.0 { mod2pi(t1 + PI) } else { mod2pi(t1) };
    (tau, mod2pi(tau - u + v - phi))
}

// L+ S+ L+
fn lp_sp_lp(x: f64, y: f64, phi: f64) -> Option<f64> {
    let (u, t) = polar(x - phi.sin(), y - 1.0 + phi.cos());
    if t >= -ZERO {
        let v = mod2pi(phi - t);
        if v >= -ZERO {
            return Some(t.abs() + u.abs() + v.abs());
        }
    }
    None
}

// L+ S+ R+
fn lp_sp_rp(x: f64, y: f64, phi: f64) -> Option<f64> {
    let (u1, t1) = polar(x + phi.sin(), y - 1.0 - phi.cos());
    let u1 = u1 * u1;
    if u1 >= 4.0 {
        let u = (u1 - 4.0).sqrt();
        let t = mod2pi(t1 + 2.0f64.atan2(u));
        let v = mod2pi(t - phi);
        if t >= -ZERO && v >= -ZERO {
            return Some(t.abs() + u.abs() + v.abs());
        }
    }
    None
}

// L+ R- L
fn lp_rm_l(x: f64, y: f64, phi: f64) -> Option<f64> {
    let (u1, theta) = polar(x - phi.sin(), y - 1.0 + phi.cos());
    if u1 <= 4.0 {
        let u = -2.0 * (0.25 * u1).asin();
        let t = mod2pi(theta + 0.5 * u + PI);
        let v = mod2pi(phi - t + u);
        if t >= -ZERO && u <= ZERO {
            return Some(t.abs() + u.abs() + v.abs());
        }
    }
    None
}

// L+ R+ L- R-
fn lp_rup_lum_rm(x: f64, y: f64, phi: f64) -> Option<f64> {
    let xi = x + phi.sin();
    let eta = y - 1.0 - phi.cos();
    let rho = 0.25 * (2.0 + xi.hypot(eta));
    if rho <= 1.0 {
        let u = rho.acos();
        let (t, v) = tau_omega(u, -u, xi, eta, phi);
        if t >= -ZERO && v <= ZERO {
            return Some(t.abs() + 2.0 * u.abs() + v.abs());
        }
    }
    None
}

// L+ R- L- R+
fn lp_rum_lum_rp(x: f64, y: f64, phi: f64) -> Option<f64> {
    let xi = x + phi.sin();
    let eta = y - 1.0 - phi.cos();
    let rho = (20.0 - xi * xi - eta * eta) / 16.0;
    if (0.0..=1.0).contains(&rho) {
        let u = -rho.acos();
        if u >= -FRAC_PI_2 {
            let (t, v) = tau_omega(u, u, xi, eta, phi);
            if t >= -ZERO && v >= -ZERO {
                return Some(t.abs() + 2.0 * u.abs() + v.abs());
            }
        }
    }
    None
}

// L+ R-(pi/2) S- L-
fn lp_rm_sm_lm(x: f64, y: f64, phi: f64) -> Option<f64> {
    let (rho, theta) = polar(x - phi.sin(), y - 1.0 + phi.cos());
    if rho >= 2.0 {
        let r = (rho * rho - 4.0).sqrt();
        let u = 2.0 - r;
        let t = mod2pi(theta + r.atan2(-2.0));
        let v = mod2pi(phi - FRAC_PI_2 - t);
        if t >= -ZERO && u <= ZERO && v <= ZERO {
            return Some(t.abs() + u.abs() + v.abs() + FRAC_PI_2);
        }
    }
    None
}

// L+ R-(pi/2) S- R-
fn lp_rm_sm_rm(x: f64, y: f64, phi: f64) -> Option<f64> {
    let xi = x + phi.sin();
    let eta = y - 1.0 - phi.cos();
    let (rho, theta) = polar(-eta, xi);
    if rho >= 2.0 {
        let t = theta;
        let u = 2.0 - rho;
        let v = mod2pi(t + FRAC_PI_2 - phi);
        if t >= -ZERO && u <= ZERO && v <= ZERO {
            return Some(t.abs() + u.abs() + v.abs() + FRAC_PI_2);
        }
    }
    None
}

// L+ R-(pi/2) S- L-(pi/2) R+
fn lp_rm_s_lm_rp(x: f64, y: f64, phi: f64) -> Option<f64> {
    let xi = x + phi.sin();
    let eta = y - 1.0 - phi.cos();
    let (rho, _) = polar(xi, eta);
    if rho >= 2.0 {
        let u = 4.0 - (rho * rho - 4.0).sqrt();
        if u <= ZERO {
            let t = mod2pi(((4.0 - u) * xi - 2.0 * eta).atan2(-2.0 * xi + (u - 4.0) * eta));
            let v = mod2pi(t - phi);
            if t >= -ZERO && v >= -ZERO {
                return Some(t.abs() + u.abs() + v.abs() + PI);
            }
        }
    }
    None
}

type Family = fn(f64, f64, f64) -> Option<f64>;

/// Minimum over the four time-flip / reflection images of a base word.
#[inline]
fn symmetric_min(f: Family, x: f64, y: f64, phi: f64, best: &mut f64) {
    for (sx, sy, sp) in [(1.0, 1.0, 1.0), (-1.0, 1.0, -1.0), (1.0, -1.0, -1.0), (-1.0, -1.0, 1.0)] {
        if let Some(len) = f(sx * x, sy * y, sp * phi) {
            if len < *best {
                *best = len;
            }
        }
    }
}

/// Normalised optimal length for a goal `(x, y, phi)` in the start frame.
pub fn reeds_shepp_length(x: f64, y: f64, phi: f64) -> f64 {
    let mut best = f64::INFINITY;
    // words read backwards are solved in the goal frame
    let (sp, cp) = phi.sin_cos();
    let xb = x * cp + y * sp;
    let yb = x * sp - y * cp;

    symmetric_min(lp_sp_lp, x, y, phi, &mut best);
    symmetric_min(lp_sp_rp, x, y, phi, &mut best);

    symmetric_min(lp_rm_l, x, y, phi, &mut best);
    symmetric_min(lp_rm_l, xb, yb, phi, &mut best);

    symmetric_min(lp_rup_lum_rm, x, y, phi, &mut best);
    symmetric_min(lp_rum_lum_rp, x, y, phi, &mut best);

    symmetric_min(lp_rm_sm_lm, x, y, phi, &mut best);
    symmetric_min(lp_rm_sm_rm, x, y, phi, &mut best);
    symmetric_min(lp_rm_sm_lm, xb, yb, phi, &mut best);
    symmetric_min(lp_rm_sm_rm, xb, yb, phi, &mut best);

    symmetric_min(lp_rm_s_lm_rp, x, y, phi, &mut best);
    best
}

/// Reeds-Shepp distance between two configurations (unit turning radius,
/// unit speed). Invariant under rigid motions applied to both arguments.
pub fn reeds_shepp_distance(a: &Se2Point, b: &Se2Point) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let (s, c) = a.theta().sin_cos();
    let x = c * dx + s * dy;
    let y = -s * dx + c * dy;
    let phi = b.theta() - a.theta();
    if x == 0.0 && y == 0.0 && phi == 0.0 {
        return 0.0;
    }
    reeds_shepp_length(x, y, phi)
}
