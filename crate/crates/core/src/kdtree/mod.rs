//! k-d trees over SE(2) with one data point per vertex.
//!
//! Every vertex `(x, n)` splits the chart into `h-(x, n) = {<n, y> <= <n, x>}`
//! and `h+(x, n)`; left descendants live in `h-`, right descendants in `h+`.
//! Trees are built either in one pass from a point set (median splits along
//! the axis of largest spread) or by incremental insertion with a
//! [`Splitting`] sequence choosing each new vertex's normal.
//!
//! Queries are exact for any metric whose guard is sound; see
//! [`crate::metrics::Guard`]. All traversals are iterative, so degenerate
//! incremental trees of depth `N` are fine.

mod queue;
mod split;
mod text;

use std::cmp::Ordering;
use std::fmt;

pub use queue::BoundedPriorityQueue;
pub use split::{classic_split, lie_split_rs, Splitting, SplittingSequence};

use crate::error::{Error, Result};
use crate::geometry::Se2Point;
use crate::metrics::{Guard, Hyperplane, Metric, Side};

/// A query result: position of the point in build/insertion order and its
/// distance to the query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub index: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub point: Se2Point,
    pub normal: [f64; 3],
    pub left: Option<u32>,
    pub right: Option<u32>,
    pub depth: u32,
    /// Index of the point in the input slice (batch) or insertion order.
    pub index: usize,
}

impl Vertex {
    #[inline]
    pub fn hyperplane(&self) -> Hyperplane {
        Hyperplane { anchor: self.point, normal: self.normal }
    }

    #[inline]
    pub fn child(&self, side: Side) -> Option<u32> {
        match side {
            Side::Negative => self.left,
            Side::Positive => self.right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuildMode {
    Batch,
    Incremental(Splitting),
}

impl BuildMode {
    pub fn name(self) -> &'static str {
        match self {
            BuildMode::Batch => "batch",
            BuildMode::Incremental(Splitting::Classic) => "incremental-classic",
            BuildMode::Incremental(Splitting::Lie) => "incremental-lie",
        }
    }
}

impl fmt::Display for BuildMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-query instrumentation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub vertices_visited: u64,
    /// Visited vertices with at least one empty child reached by the
    /// search, either on the query's side or through the guard. Each such
    /// vertex owns one bucket, so this is the number of buckets touched.
    pub leaves_visited: u64,
    pub distance_evaluations: u64,
    pub ball_hyperplane_calls: u64,
}

impl std::ops::AddAssign for QueryStats {
    fn add_assign(&mut self, o: Self) {
        self.vertices_visited += o.vertices_visited;
        self.leaves_visited += o.leaves_visited;
        self.distance_evaluations += o.distance_evaluations;
        self.ball_hyperplane_calls += o.ball_hyperplane_calls;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KdTree {
    vertices: Vec<Vertex>,
    root: Option<u32>,
    mode: BuildMode,
}

/// Cardinal axis of largest coordinate range; ties go to the smaller index.
/// Angles are compared on their canonical values, without wrapping.
pub fn max_range(points: &[Se2Point]) -> Result<usize> {
    max_range_of(points.iter())
}

fn max_range_of<'a>(points: impl Iterator<Item = &'a Se2Point>) -> Result<usize> {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    let mut any = false;
    for p in points {
        any = true;
        let c = p.coords();
        for i in 0..3 {
            lo[i] = lo[i].min(c[i]);
            hi[i] = hi[i].max(c[i]);
        }
    }
    if !any {
        return Err(Error::EmptySet);
    }
    let mut best = 0;
    for i in 1..3 {
        if hi[i] - lo[i] > hi[best] - lo[best] {
            best = i;
        }
    }
    Ok(best)
}

/// Total order used for medians: coordinate along `axis`, then the full
/// lexicographic chart order, then position.
#[inline]
fn median_order(points: &[Se2Point], axis: usize, a: usize, b: usize) -> Ordering {
    let (pa, pb) = (points[a].coords(), points[b].coords());
    pa[axis]
        .total_cmp(&pb[axis])
        .then_with(|| pa[0].total_cmp(&pb[0]))
        .then_with(|| pa[1].total_cmp(&pb[1]))
        .then_with(|| pa[2].total_cmp(&pb[2]))
        .then(a.cmp(&b))
}

/// Position in `points` of the lower median along `axis` (rank
/// `floor((n - 1) / 2)`).
pub fn median(points: &[Se2Point], axis: usize) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut idx: Vec<usize> = (0..points.len()).collect();
    let k = (points.len() - 1) / 2;
    idx.select_nth_unstable_by(k, |&a, &b| median_order(points, axis, a, b));
    Ok(idx[k])
}

fn cardinal(axis: usize) -> [f64; 3] {
    let mut n = [0.0; 3];
    n[axis] = 1.0;
    n
}

impl KdTree {
    /// An empty tree that grows by [`KdTree::insert`].
    pub fn incremental(splitting: Splitting) -> Self {
        Self { vertices: Vec::new(), root: None, mode: BuildMode::Incremental(splitting) }
    }

    /// Balanced tree from median splits on the axis of largest range.
    pub fn batch(points: &[Se2Point]) -> Self {
        let mut tree = Self { vertices: Vec::with_capacity(points.len()), root: None, mode: BuildMode::Batch };
        if points.is_empty() {
            return tree;
        }
        let mut idx: Vec<usize> = (0..points.len()).collect();
        // (start, end, parent, side, depth) over idx
        let mut work = vec![(0usize, points.len(), None::<(u32, Side)>, 0u32)];
        while let Some((start, end, parent, depth)) = work.pop() {
            if start == end {
                continue;
            }
            let slice = &mut idx[start..end];
            let axis = max_range_of(slice.iter().map(|&i| &points[i])).expect("nonempty");
            let k = (slice.len() - 1) / 2;
            slice.select_nth_unstable_by(k, |&a, &b| median_order(points, axis, a, b));
            let med = slice[k];
            let split = points[med].coords()[axis];
            // ties with the median coordinate belong to the negative side
            let rest = &mut slice[k + 1..];
            let mut ties = 0;
            for j in 0..rest.len() {
                if points[rest[j]].coords()[axis] <= split {
                    rest.swap(ties, j);
                    ties += 1;
                }
            }
            slice.swap(k, k + ties);
            let pivot = start + k + ties;

            let id = tree.vertices.len() as u32;
            tree.vertices.push(Vertex {
                point: points[med],
                normal: cardinal(axis),
                left: None,
                right: None,
                depth,
                index: med,
            });
            match parent {
                None => tree.root = Some(id),
                Some((p, Side::Negative)) => tree.vertices[p as usize].left = Some(id),
                Some((p, Side::Positive)) => tree.vertices[p as usize].right = Some(id),
            }
            work.push((pivot + 1, end, Some((id, Side::Positive)), depth + 1));
            work.push((start, pivot, Some((id, Side::Negative)), depth + 1));
        }
        tree
    }

    /// Builds incrementally by inserting `points` in order.
    pub fn incremental_from(points: &[Se2Point], splitting: Splitting) -> Self {
        let mut tree = Self::incremental(splitting);
        tree.vertices.reserve(points.len());
        for p in points {
            tree.insert(*p).expect("incremental tree");
        }
        tree
    }

    pub fn build(points: &[Se2Point], mode: BuildMode) -> Self {
        match mode {
            BuildMode::Batch => Self::batch(points),
            BuildMode::Incremental(s) => Self::incremental_from(points, s),
        }
    }

    /// Inserts a point below the leaf reached by descending with
    /// `sideOf`; the new vertex gets the splitting sequence's normal at its
    /// depth. Points on a splitting plane go left.
    pub fn insert(&mut self, x: Se2Point) -> Result<()> {
        let BuildMode::Incremental(splitting) = self.mode else {
            return Err(Error::NotIncremental);
        };
        let index = self.vertices.len();
        let id = index as u32;
        let Some(mut cur) = self.root else {
            self.vertices.push(Vertex {
                point: x,
                normal: splitting.normal_for(0, &x),
                left: None,
                right: None,
                depth: 0,
                index,
            });
            self.root = Some(id);
            return Ok(());
        };
        loop {
            let v = &self.vertices[cur as usize];
            let side = v.hyperplane().side(&x);
            match v.child(side) {
                Some(c) => cur = c,
                None => {
                    let depth = v.depth + 1;
                    self.vertices.push(Vertex {
                        point: x,
                        normal: splitting.normal_for(depth, &x),
                        left: None,
                        right: None,
                        depth,
                        index,
                    });
                    let parent = &mut self.vertices[cur as usize];
                    match side {
                        Side::Negative => parent.left = Some(id),
                        Side::Positive => parent.right = Some(id),
                    }
                    return Ok(());
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mode(&self) -> BuildMode {
        self.mode
    }

    pub fn root(&self) -> Option<u32> {
        self.root
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: u32) -> &Vertex {
        &self.vertices[id as usize]
    }

    /// Largest vertex depth (root = 0); `None` for an empty tree.
    pub fn depth(&self) -> Option<u32> {
        self.vertices.iter().map(|v| v.depth).max()
    }

    /// Exact m-nearest-neighbor query.
    ///
    /// Descends to the child on the query's side, records the vertex, then
    /// visits the other child only if `guard` says the current m-th
    /// neighbor ball may reach across the vertex's hyperplane. Results are
    /// sorted by distance, `min(m, len)` long.
    pub fn query<M: Metric + ?Sized>(
        &self,
        q: &Se2Point,
        m: usize,
        metric: &M,
        guard: Guard,
    ) -> Result<(Vec<Neighbor>, QueryStats)> {
        let (queue, stats) = self.query_queue(q, m, metric, guard)?;
        let out = queue
            .into_sorted_vec()
            .into_iter()
            .map(|(distance, v)| Neighbor { index: self.vertices[v as usize].index, distance })
            .collect();
        Ok((out, stats))
    }

    /// [`KdTree::query`] returning the raw queue of vertex ids.
    pub fn query_queue<M: Metric + ?Sized>(
        &self,
        q: &Se2Point,
        m: usize,
        metric: &M,
        guard: Guard,
    ) -> Result<(BoundedPriorityQueue<u32>, QueryStats)> {
        if m == 0 {
            return Err(Error::ZeroNeighbors);
        }
        let mut queue = BoundedPriorityQueue::new(m);
        let mut stats = QueryStats::default();
        let Some(root) = self.root else {
            return Ok((queue, stats));
        };

        enum Step {
            Descend(u32),
            Backtrack(u32, Side),
        }
        let mut stack = Vec::with_capacity(64);
        stack.push(Step::Descend(root));
        while let Some(step) = stack.pop() {
            match step {
                Step::Descend(id) => {
                    stats.vertices_visited += 1;
                    let v = &self.vertices[id as usize];
                    let side = v.hyperplane().side(q);
                    stack.push(Step::Backtrack(id, side));
                    match v.child(side) {
                        Some(c) => stack.push(Step::Descend(c)),
                        None => stats.leaves_visited += 1,
                    }
                }
                Step::Backtrack(id, side) => {
                    let v = &self.vertices[id as usize];
                    stats.distance_evaluations += 1;
                    queue.insert(metric.distance(q, &v.point), id);
                    stats.ball_hyperplane_calls += 1;
                    if metric.ball_hyperplane(guard, q, queue.worst(), &v.hyperplane()) {
                        match v.child(side.opposite()) {
                            Some(other) => stack.push(Step::Descend(other)),
                            // an empty sibling reached through the guard; a
                            // vertex counts as one bucket however often
                            None if v.child(side).is_some() => stats.leaves_visited += 1,
                            None => {}
                        }
                    }
                }
            }
        }
        Ok((queue, stats))
    }
}
