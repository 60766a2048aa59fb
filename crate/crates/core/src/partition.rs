//! Partitions, frequency vectors and the two equivalent restriction
//! predicates: "difference 2 at distance k-1" and the frequency-window form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::BoundaryConfig;
use crate::error::{Error, Result};

/// A non-increasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u64>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(r.parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn frequency(&self) -> FrequencyVector {
        let mut freq = BTreeMap::new();
        for &p in &self.parts {
            *freq.entry(p).or_insert(0) += 1;
        }
        FrequencyVector { freq }
    }

    /// `p_l >= p_{l+k-1} + 2` everywhere, and at most `i - 1` parts equal to 1.
    pub fn satisfies_difference(&self, cfg: BoundaryConfig) -> bool {
        gap_at_distance(&self.parts, cfg.max_charge()) && self.ones() < cfg.i()
    }

    /// `f_j + f_{j+1} <= k - 1` for all `j`, and `f_1 <= i - 1`.
    pub fn satisfies_frequency(&self, cfg: BoundaryConfig) -> bool {
        let f = self.frequency();
        if f.get(1) >= cfg.i() {
            return false;
        }
        let ok = f.iter().all(|(j, fj)| fj + f.get(j + 1) <= cfg.max_charge());
        ok
    }

    fn ones(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `parts[l] >= parts[l + d] + 2` for every valid `l`.
pub(crate) fn gap_at_distance(parts: &[u64], d: usize) -> bool {
    parts.iter().zip(parts.iter().skip(d)).all(|(&a, &b)| a >= b + 2)
}

/// Multiplicity of each part value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrequencyVector {
    freq: BTreeMap<u64, usize>,
}

impl FrequencyVector {
    pub fn get(&self, j: u64) -> usize {
        self.freq.get(&j).copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing part order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.freq.iter().map(|(&j, &f)| (j, f))
    }

    pub fn weight(&self) -> u64 {
        self.iter().map(|(j, f)| j * f as u64).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .freq
            .iter()
            .rev()
            .flat_map(|(&j, &f)| std::iter::repeat_n(j, f))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl FromIterator<(u64, usize)> for FrequencyVector {
    fn from_iter<T: IntoIterator<Item = (u64, usize)>>(iter: T) -> Self {
        let freq = iter.into_iter().filter(|&(j, f)| j > 0 && f > 0).collect();
        Self { freq }
    }
}

/// All partitions of weight `n` satisfying the restriction (and of length
/// `m_filter`, if given), in lexicographically decreasing order.
pub fn enumerate_restricted(cfg: BoundaryConfig, n: u64, m_filter: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut search = RestrictedSearch {
        window: cfg.max_charge(),
        max_ones: cfg.i() - 1,
        m_filter,
        freq: vec![0; n as usize + 2],
        parts: Vec::new(),
        out: &mut out,
    };
    search.run(n, n);
    out
}

/// `counts[m]` = number of restricted partitions of `n` with `m` parts.
pub fn restricted_counts(cfg: BoundaryConfig, n: u64) -> Vec<u64> {
    let mut counts = Vec::new();
    for p in enumerate_restricted(cfg, n, None) {
        if counts.len() <= p.len() {
            counts.resize(p.len() + 1, 0);
        }
        counts[p.len()] += 1;
    }
    counts
}

struct RestrictedSearch<'a> {
    window: usize,
    max_ones: usize,
    m_filter: Option<usize>,
    freq: Vec<usize>,
    parts: Vec<u64>,
    out: &'a mut Vec<Partition>,
}

impl RestrictedSearch<'_> {
    fn run(&mut self, remaining: u64, max_part: u64) {
        if remaining == 0 {
            if self.m_filter.is_none_or(|m| m == self.parts.len()) {
                self.out.push(Partition::from_sorted_unchecked(self.parts.clone()));
            }
            return;
        }
        if self.m_filter.is_some_and(|m| self.parts.len() >= m) {
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            let vi = v as usize;
            if self.freq[vi] + self.freq[vi + 1] + 1 > self.window {
                continue;
            }
            if v == 1 && self.freq[1] + 1 > self.max_ones {
                continue;
            }
            self.freq[vi] += 1;
            self.parts.push(v);
            self.run(remaining - v, v);
            self.parts.pop();
            self.freq[vi] -= 1;
        }
    }
}

/// Every partition of `n`, unrestricted, lexicographically decreasing.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            cur.push(v);
            go(remaining - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
