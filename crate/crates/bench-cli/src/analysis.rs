//! Closed-form complexity exponent and small series helpers.

use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExponentError {
    #[error("weight list is empty")]
    Empty,
    #[error("weights must be positive, got 0 at position {0}")]
    ZeroWeight(usize),
}

/// `p = sum over w_i <= W/k of (1/k - w_i/W)` with `W = sum w_i`, exactly.
///
/// The query cost of a classic k-d tree under a metric with privileged
/// weights `w` grows like `N^p log N`; `p = 0` for holonomic systems.
pub fn complexity_exponent(weights: &[u32]) -> Result<Rational64, ExponentError> {
    if weights.is_empty() {
        return Err(ExponentError::Empty);
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(ExponentError::ZeroWeight(i));
    }
    let k = weights.len() as i64;
    let total: i64 = weights.iter().map(|&w| w as i64).sum();
    // w_i <= W/k  <=>  k w_i <= W
    Ok(weights
        .iter()
        .map(|&w| w as i64)
        .filter(|&w| k * w <= total)
        .map(|w| Rational64::new(1, k) - Rational64::new(w, total))
        .sum())
}

/// `max / min` of a positive series; `None` if empty or not positive.
pub fn max_min_ratio(series: &[f64]) -> Option<f64> {
    let max = series.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = series.iter().copied().fold(f64::INFINITY, f64::min);
    (min > 0.0 && min.is_finite() && max.is_finite()).then(|| max / min)
}
