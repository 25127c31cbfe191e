//! Batch queries over many query points.
//!
//! The plain functions use rayon when the `parallel` feature is on and fall
//! back to a sequential loop otherwise. The `_sequential` variants always
//! run on the calling thread. Output order always follows input order, so
//! both paths return identical results.

use crate::error::Result;
use crate::geometry::Se2Point;
use crate::kdtree::{KdTree, Neighbor, QueryStats};
use crate::metrics::{Guard, Metric};
use crate::oracle::linear_scan;

pub type QueryResult = (Vec<Neighbor>, QueryStats);

pub fn query_batch<M: Metric + ?Sized>(
    tree: &KdTree,
    queries: &[Se2Point],
    m: usize,
    metric: &M,
    guard: Guard,
) -> Result<Vec<QueryResult>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        queries.par_iter().map(|q| tree.query(q, m, metric, guard)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        query_batch_sequential(tree, queries, m, metric, guard)
    }
}

pub fn query_batch_sequential<M: Metric + ?Sized>(
    tree: &KdTree,
    queries: &[Se2Point],
    m: usize,
    metric: &M,
    guard: Guard,
) -> Result<Vec<QueryResult>> {
    queries.iter().map(|q| tree.query(q, m, metric, guard)).collect()
}

pub fn linear_scan_batch<M: Metric + ?Sized>(
    points: &[Se2Point],
    queries: &[Se2Point],
    m: usize,
    metric: &M,
) -> Result<Vec<Vec<Neighbor>>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        queries.par_iter().map(|q| linear_scan(points, q, m, metric)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        linear_scan_batch_sequential(points, queries, m, metric)
    }
}

pub fn linear_scan_batch_sequential<M: Metric + ?Sized>(
    points: &[Se2Point],
    queries: &[Se2Point],
    m: usize,
    metric: &M,
) -> Result<Vec<Vec<Neighbor>>> {
    queries.iter().map(|q| linear_scan(points, q, m, metric)).collect()
}
