//! Ordered `(k-1)`-tuples of partitions. Component `j` has parts spaced by at
//! least `2j`, and its smallest part is bounded below by a floor that depends
//! on the lengths of the later components.

use serde::{Deserialize, Serialize};

use crate::config::BoundaryConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiPartition {
    components: Vec<Vec<u64>>,
}

impl MultiPartition {
    /// Wraps raw components. Parts must be positive; the spacing and floor
    /// conditions are checked by [`MultiPartition::is_valid`].
    pub fn new(components: Vec<Vec<u64>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidMultiPartition("no components".into()));
        }
        if components.iter().flatten().any(|&p| p == 0) {
            return Err(Error::InvalidMultiPartition("zero part".into()));
        }
        Ok(Self { components })
    }

    pub fn empty(cfg: BoundaryConfig) -> Self {
        Self {
            components: vec![Vec::new(); cfg.max_charge()],
        }
    }

    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }

    /// Component of charge `j` (1-based).
    pub fn component(&self, j: usize) -> &[u64] {
        &self.components[j - 1]
    }

    /// The `k` this tuple belongs to.
    pub fn implied_k(&self) -> usize {
        self.components.len() + 1
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// `(n, m)`: total of all parts, and `sum_j j * m_j`.
    pub fn weight_and_charge(&self) -> (u64, usize) {
        let n = self.components.iter().flatten().sum();
        let m = self
            .components
            .iter()
            .enumerate()
            .map(|(idx, c)| (idx + 1) * c.len())
            .sum();
        (n, m)
    }

    pub fn is_valid(&self, cfg: BoundaryConfig) -> Result<bool> {
        self.check_count(cfg)?;
        Ok(self.violation(cfg).is_none())
    }

    pub(crate) fn check_count(&self, cfg: BoundaryConfig) -> Result<()> {
        if self.components.len() != cfg.max_charge() {
            return Err(Error::ComponentCount {
                expected: cfg.max_charge(),
                found: self.components.len(),
            });
        }
        Ok(())
    }

    /// First broken condition, described for error messages.
    pub(crate) fn violation(&self, cfg: BoundaryConfig) -> Option<String> {
        let lengths = self.lengths();
        for (idx, comp) in self.components.iter().enumerate() {
            let j = idx + 1;
            let gap = 2 * j as u64;
            if let Some(w) = comp.windows(2).find(|w| w[0] < w[1] + gap) {
                return Some(format!("component {j}: {} - {} < {gap}", w[0], w[1]));
            }
            if let Some(&last) = comp.last() {
                let floor = delta_bound(cfg, j, &lengths[j..]).expect("j in range");
                if last < floor {
                    return Some(format!("component {j}: smallest part {last} < {floor}"));
                }
            }
        }
        None
    }

    pub fn validate(&self, cfg: BoundaryConfig) -> Result<()> {
        self.check_count(cfg)?;
        match self.violation(cfg) {
            Some(msg) => Err(Error::InvalidMultiPartition(msg)),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (idx, comp) in self.components.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (n, p) in comp.iter().enumerate() {
                if n > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

/// Floor for the smallest part of component `j`:
/// `j + max(j - i + 1, 0) + 2j (m_{j+1} + ... + m_{k-1})`.
///
/// `tail_lengths` holds `m_{j+1}, ..., m_{k-1}`; missing trailing entries
/// count as zero.
pub fn delta_bound(cfg: BoundaryConfig, j: usize, tail_lengths: &[usize]) -> Result<u64> {
    if j == 0 || j > cfg.max_charge() {
        return Err(Error::ChargeOutOfRange {
            j,
            max: cfg.max_charge(),
        });
    }
    let boundary = (j + 1).saturating_sub(cfg.i());
    let tail: usize = tail_lengths.iter().sum();
    Ok((j + boundary + 2 * j * tail) as u64)
}

/// Lowest weight among valid tuples with component lengths `lengths`.
pub fn minimal_weight(cfg: BoundaryConfig, lengths: &[usize]) -> u64 {
    (1..=cfg.max_charge())
        .map(|j| {
            let mj = lengths.get(j - 1).copied().unwrap_or(0) as u64;
            let tail = lengths.get(j..).unwrap_or(&[]);
            let floor = delta_bound(cfg, j, tail).expect("j in range");
            mj * floor + j as u64 * mj * mj.saturating_sub(1)
        })
        .sum()
}

/// Component lengths paired with the residual partitions left after removing
/// the minimal staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    pub length: usize,
    /// Exactly `length` entries, non-increasing, possibly zero.
    pub residual: Vec<u64>,
}

/// `lambda_l = n_l - floor_j - 2j (m_j - l)` for every component.
pub fn staircase_decompose(mp: &MultiPartition, cfg: BoundaryConfig) -> Result<Vec<Staircase>> {
    mp.validate(cfg)?;
    let lengths = mp.lengths();
    let mut out = Vec::with_capacity(lengths.len());
    for (idx, comp) in mp.components().iter().enumerate() {
        let j = idx + 1;
        let floor = delta_bound(cfg, j, &lengths[j..])?;
        let mj = comp.len();
        let residual = comp
            .iter()
            .enumerate()
            .map(|(l, &x)| x - floor - 2 * (j * (mj - 1 - l)) as u64)
            .collect();
        out.push(Staircase { length: mj, residual });
    }
    Ok(out)
}

/// Inverse of [`staircase_decompose`].
pub fn staircase_compose(cfg: BoundaryConfig, parts: &[Staircase]) -> Result<MultiPartition> {
    if parts.len() != cfg.max_charge() {
        return Err(Error::ComponentCount {
            expected: cfg.max_charge(),
            found: parts.len(),
        });
    }
    let lengths: Vec<usize> = parts.iter().map(|s| s.length).collect();
    let mut components = Vec::with_capacity(parts.len());
    for (idx, s) in parts.iter().enumerate() {
        let j = idx + 1;
        if s.residual.len() != s.length || s.residual.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidMultiPartition(format!(
                "residual {:?} is not a partition padded to {} entries",
                s.residual, s.length
            )));
        }
        let floor = delta_bound(cfg, j, &lengths[j..])?;
        components.push(
            s.residual
                .iter()
                .enumerate()
                .map(|(l, &r)| r + floor + 2 * (j * (s.length - 1 - l)) as u64)
                .collect(),
        );
    }
    Ok(MultiPartition { components })
}

/// Length vectors `(m_1, ..., m_{k-1})` whose minimal weight is at most `n`,
/// in lexicographic order.
pub fn length_vectors(cfg: BoundaryConfig, n: u64) -> Vec<Vec<usize>> {
    fn go(cfg: BoundaryConfig, j: usize, tail: usize, budget: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == 0 {
            let mut v = cur.clone();
            v.reverse();
            out.push(v);
            return;
        }
        let mut mj = 0usize;
        loop {
            let floor = (j + (j + 1).saturating_sub(cfg.i()) + 2 * j * tail) as u64;
            let m = mj as u64;
            let cost = m * floor + j as u64 * m * m.saturating_sub(1);
            if cost > budget {
                break;
            }
            cur.push(mj);
            go(cfg, j - 1, tail + mj, budget - cost, cur, out);
            cur.pop();
            mj += 1;
        }
    }
    let mut out = Vec::new();
    go(cfg, cfg.max_charge(), 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every valid tuple of total weight `n` (and charge `m_filter`, if given).
/// Ordered by length vector, then by residuals.
pub fn enumerate_multipartitions(cfg: BoundaryConfig, n: u64, m_filter: Option<usize>) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for lengths in length_vectors(cfg, n) {
        let charge: usize = lengths.iter().enumerate().map(|(idx, m)| (idx + 1) * m).sum();
        if m_filter.is_some_and(|m| m != charge) {
            continue;
        }
        let residual = n - minimal_weight(cfg, &lengths);
        for residuals in residual_tuples(&lengths, residual) {
            let parts: Vec<Staircase> = lengths
                .iter()
                .zip(residuals)
                .map(|(&length, residual)| Staircase { length, residual })
                .collect();
            out.push(staircase_compose(cfg, &parts).expect("residuals are well formed"));
        }
    }
    out
}

/// Tuples of partitions, the `j`-th with at most `lengths[j]` parts (zero
/// padded), of total weight `total`.
fn residual_tuples(lengths: &[usize], total: u64) -> Vec<Vec<Vec<u64>>> {
    fn go(lengths: &[usize], remaining: u64, cur: &mut Vec<Vec<u64>>, out: &mut Vec<Vec<Vec<u64>>>) {
        let Some((&len, rest)) = lengths.split_first() else {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        };
        if len == 0 {
            cur.push(Vec::new());
            go(rest, remaining, cur, out);
            cur.pop();
            return;
        }
        // Everything left goes here when this is the last non-empty component.
        let last = rest.iter().all(|&l| l == 0);
        let lo = if last { remaining } else { 0 };
        for w in (lo..=remaining).rev() {
            for lam in bounded_partitions(w, len) {
                cur.push(lam);
                go(rest, remaining - w, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(lengths, total, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into at most `slots` parts, zero padded to `slots`,
/// lexicographically decreasing.
pub(crate) fn bounded_partitions(n: u64, slots: usize) -> Vec<Vec<u64>> {
    fn go(remaining: u64, max_part: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            let mut v = cur.clone();
            v.resize(cur.len() + slots, 0);
            out.push(v);
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            cur.push(v);
            go(remaining - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, slots, &mut Vec::new(), &mut out);
    out
}
