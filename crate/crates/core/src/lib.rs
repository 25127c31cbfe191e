//! Exact m-nearest-neighbor search with k-d trees under sub-Riemannian
//! metrics, instantiated for the Reeds-Shepp car on SE(2).
//!
//! The crate is organised bottom-up:
//!
//! * [`geometry`]: SE(2) configurations, body frames and weighted boxes that
//!   bound Reeds-Shepp reachable sets.
//! * [`metrics`]: the Euclidean chart distance, the closed-form Reeds-Shepp
//!   distance, and the ball-hyperplane guards used to prune the search.
//! * [`kdtree`]: batch and incremental k-d trees with classic and Lie
//!   splitting sequences, plus the instrumented m-NN query.
//! * [`oracle`]: brute-force references used to validate everything above.
//!
//! With the default `parallel` feature, batch operations ([`par`]) fan out
//! over rayon; without it they run sequentially with identical results.

pub mod error;
pub mod geometry;
pub mod kdtree;
pub mod metrics;
pub mod oracle;
pub mod par;

pub use error::{Error, Result};
pub use geometry::{Se2Point, WeightedBox};
pub use kdtree::{BuildMode, KdTree, Neighbor, QueryStats, Splitting};
pub use metrics::{Euclidean, Guard, Hyperplane, Metric, MetricKind, ReedsShepp, Side};
