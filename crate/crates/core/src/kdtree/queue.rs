//! Size-bounded, distance-ordered result buffer.

/// Keeps the `capacity` smallest `(distance, payload)` pairs seen so far in
/// ascending distance order.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedPriorityQueue<T> {
    capacity: usize,
    entries: Vec<(f64, T)>,
}

impl<T: Copy> BoundedPriorityQueue<T> {
    pub fn new(capacity: usize) -> Self {
        Self { capacity, entries: Vec::with_capacity(capacity + 1) }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() >= self.capacity
    }

    /// Largest retained distance, or infinity while unfilled.
    #[inline]
    pub fn worst(&self) -> f64 {
        if self.is_full() {
            self.entries.last().map_or(f64::INFINITY, |e| e.0)
        } else {
            f64::INFINITY
        }
    }

    /// Inserts if `distance < worst()`, evicting the current worst when full.
    /// Returns whether the entry was kept.
    pub fn insert(&mut self, distance: f64, item: T) -> bool {
        if self.capacity == 0 || !(distance < self.worst()) {
            return false;
        }
        // after existing equal distances: earlier arrivals win ties
        let at = self.entries.partition_point(|e| e.0 <= distance);
        self.entries.insert(at, (distance, item));
        self.entries.truncate(self.capacity);
        debug_assert!(self.entries.windows(2).all(|w| w[0].0 <= w[1].0));
        true
    }

    pub fn entries(&self) -> &[(f64, T)] {
        &self.entries
    }

    pub fn into_sorted_vec(self) -> Vec<(f64, T)> {
        self.entries
    }
}
