use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(k, i)`: `k` is the distance parameter, `i` the boundary label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryConfig {
    k: usize,
    i: usize,
}

impl BoundaryConfig {
    /// `k = 1` is rejected: there would be no component partitions at all.
    pub fn new(k: i64, i: i64) -> Result<Self> {
        if k < 2 || i < 1 || i > k {
            return Err(Error::InvalidConfig { k, i });
        }
        Ok(Self {
            k: k as usize,
            i: i as usize,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// Number of component partitions, `k - 1`. Also the largest charge.
    pub fn max_charge(&self) -> usize {
        self.k - 1
    }

    /// Height at which paths start.
    pub fn start_height(&self) -> usize {
        self.k - self.i
    }

    /// Every configuration with `k` in `k_range`, in `(k, i)` order.
    pub fn all(k_range: std::ops::RangeInclusive<usize>) -> Vec<Self> {
        k_range
            .flat_map(|k| (1..=k).map(move |i| Self { k, i }))
            .filter(|c| c.k >= 2)
            .collect()
    }
}

impl std::fmt::Display for BoundaryConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(k={}, i={})", self.k, self.i)
    }
}
