//! Packed storage for symmetric second-order kernels.
//!
//! A symmetric kernel `h(t1, t2) = h(t2, t1)` over lags `0..n` has
//! `n(n+1)/2` unique coefficients. [`TriangularIndexMap`] is the bijection
//! between unordered lag pairs and flat indices into the packed coefficient
//! vector: pairs are normalized to `(a, b)` with `a <= b` and enumerated
//! lexicographically, so
//!
//! ```text
//! index(a, b) = a*n - a(a-1)/2 + (b - a)
//! ```
//!
//! Both the regressor and the prior covariance use this one ordering; they
//! only have to agree with each other.

use crate::error::{Error, Result};

/// Bijection between symmetric lag pairs `(t1, t2)` and flat indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularIndexMap {
    n: usize,
}

impl TriangularIndexMap {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("memory length n must be >= 1"));
        }
        Ok(Self { n })
    }

    /// Memory length the map was built for.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of unique coefficients, `n(n+1)/2`.
    #[inline]
    pub fn len(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Flat index of the (unordered) lag pair `(t1, t2)`.
    pub fn index(&self, t1: usize, t2: usize) -> Result<usize> {
        if t1 >= self.n || t2 >= self.n {
            return Err(Error::invalid(format!(
                "lag pair ({t1}, {t2}) out of range for memory length {}",
                self.n
            )));
        }
        Ok(self.index_unchecked(t1, t2))
    }

    #[inline]
    pub(crate) fn index_unchecked(&self, t1: usize, t2: usize) -> usize {
        let (a, b) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        a * self.n - a * (a.saturating_sub(1)) / 2 + (b - a)
    }

    /// Normalized lag pair `(min, max)` for a flat index.
    pub fn inverse(&self, index: usize) -> Result<(usize, usize)> {
        if index >= self.len() {
            return Err(Error::invalid(format!(
                "flat index {index} out of range [0, {})",
                self.len()
            )));
        }
        // Solve a*n - a(a-1)/2 <= index for the largest such a, then read b.
        let mut a = 0usize;
        let mut row_start = 0usize;
        while row_start + (self.n - a) <= index {
            row_start += self.n - a;
            a += 1;
        }
        let b = a + (index - row_start);
        Ok((a, b))
    }

    /// All normalized pairs in flat-index order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (a..self.n).map(move |b| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_pair_maps_to_zero() {
        let map = TriangularIndexMap::new(5).unwrap();
        assert_eq!(map.index(0, 0).unwrap(), 0);
    }

    #[test]
    fn symmetric_in_arguments() {
        let map = TriangularIndexMap::new(3).unwrap();
        assert_eq!(map.index(2, 1).unwrap(), map.index(1, 2).unwrap());
        assert_eq!(map.index(2, 1).unwrap(), 4);
    }

    #[test]
    fn round_trip_n6() {
        let map = TriangularIndexMap::new(6).unwrap();
        for (a, b) in map.pairs() {
            let idx = map.index(a, b).unwrap();
            assert_eq!(map.inverse(idx).unwrap(), (a, b));
        }
        assert_eq!(map.pairs().count(), 21);
    }

    #[test]
    fn bijection_exhaustive_up_to_n50() {
        for n in 1..=50 {
            let map = TriangularIndexMap::new(n).unwrap();
            let mut seen = vec![false; map.len()];
            for (a, b) in map.pairs() {
                let idx = map.index(a, b).unwrap();
                assert!(idx < map.len());
                assert!(!seen[idx], "index {idx} hit twice for n={n}");
                seen[idx] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn pairs_follow_flat_order() {
        let map = TriangularIndexMap::new(7).unwrap();
        for (expected, (a, b)) in map.pairs().enumerate() {
            assert_eq!(map.index(a, b).unwrap(), expected);
        }
    }

    #[test]
    fn out_of_range_rejected() {
        let map = TriangularIndexMap::new(4).unwrap();
        assert!(map.index(4, 0).is_err());
        assert!(map.index(0, 4).is_err());
        assert!(map.inverse(10).is_err());
        assert!(TriangularIndexMap::new(0).is_err());
    }
}
