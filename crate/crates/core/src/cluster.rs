//! Weight/charge clusters and the interchange rule
//! `x^(i) y^(j) -> (y + r)^(j) (x - r)^(i)` with `r = 2 min(i, j)`.
//!
//! A path's peaks, read right to left, form a cluster sequence with strictly
//! decreasing weights and zero interaction energy. Sorting the same clusters
//! by charge with interchanges yields the multipartition.

use serde::{Deserialize, Serialize};

use crate::config::BoundaryConfig;
use crate::error::{Error, Result};
use crate::multipartition::MultiPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cluster {
    #[serde(rename = "w")]
    pub weight: i64,
    #[serde(rename = "c")]
    pub charge: usize,
}

impl Cluster {
    pub fn new(weight: i64, charge: usize) -> Self {
        Self { weight, charge }
    }
}

impl std::fmt::Display for Cluster {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}^({})", self.weight, self.charge)
    }
}

/// `r_ij = 2 min(i, j)`.
pub fn shift(i: usize, j: usize) -> i64 {
    2 * i.min(j) as i64
}

/// Minimal weight gap `r_ij + [i > j] + 2c` between a cluster of charge `i`
/// and a later one of charge `j` separated by lower clusters of total charge `c`.
pub fn required_gap(i: usize, j: usize, between: usize) -> i64 {
    shift(i, j) + i64::from(i > j) + 2 * between as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClusterSequence {
    clusters: Vec<Cluster>,
}

/// Order in which [`ClusterSequence::canonical_order_with`] resolves inversions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    LeftmostFirst,
    RightmostFirst,
}

impl ClusterSequence {
    pub fn new(clusters: Vec<Cluster>) -> Self {
        Self { clusters }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn total_weight(&self) -> i64 {
        self.clusters.iter().map(|c| c.weight).sum()
    }

    pub fn total_charge(&self) -> usize {
        self.clusters.iter().map(|c| c.charge).sum()
    }

    /// Charges sorted, for multiset comparisons.
    pub fn charge_multiset(&self) -> Vec<usize> {
        let mut v: Vec<_> = self.clusters.iter().map(|c| c.charge).collect();
        v.sort_unstable();
        v
    }

    /// Swap the clusters at `pos` and `pos + 1`.
    pub fn interchange(&self, pos: usize) -> Result<Self> {
        let mut out = self.clone();
        out.interchange_in_place(pos)?;
        Ok(out)
    }

    pub(crate) fn interchange_in_place(&mut self, pos: usize) -> Result<()> {
        if pos + 1 >= self.clusters.len() {
            return Err(Error::IndexOutOfRange {
                index: pos + 1,
                len: self.clusters.len(),
            });
        }
        self.swap_pair(pos, pos + 1)
    }

    /// Exchange clusters `a < b` across everything between them. Intermediate
    /// clusters must have charge below both; they are left unchanged, and the
    /// outer pair moves by `r_ij + 2c`. With `b = a + 1` this is the plain
    /// interchange.
    fn swap_pair(&mut self, a: usize, b: usize) -> Result<()> {
        let x = self.clusters[a];
        let y = self.clusters[b];
        let between: usize = self.clusters[a + 1..b].iter().map(|c| c.charge).sum();
        let delta = shift(x.charge, y.charge) + 2 * between as i64;
        let left = Cluster::new(y.weight + delta, y.charge);
        let right = Cluster::new(x.weight - delta, x.charge);
        if right.weight <= 0 {
            return Err(Error::NonPositiveWeight {
                pos: b,
                weight: right.weight,
            });
        }
        if left.weight <= 0 {
            return Err(Error::NonPositiveWeight {
                pos: a,
                weight: left.weight,
            });
        }
        self.clusters[a] = left;
        self.clusters[b] = right;
        Ok(())
    }

    /// Interaction energy of the pair `(a, b)`, `a < b`. Zero when some
    /// cluster strictly between them has charge `>= min` of the pair's charges.
    pub fn pair_energy(&self, a: usize, b: usize) -> u64 {
        assert!(a < b && b < self.clusters.len(), "bad pair ({a}, {b})");
        let x = self.clusters[a];
        let y = self.clusters[b];
        let floor = x.charge.min(y.charge);
        let mut between = 0;
        for c in &self.clusters[a + 1..b] {
            if c.charge >= floor {
                return 0;
            }
            between += c.charge;
        }
        let deficit = required_gap(x.charge, y.charge, between) - (x.weight - y.weight);
        deficit.max(0) as u64
    }

    pub fn total_energy(&self) -> u64 {
        let n = self.clusters.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .map(|(a, b)| self.pair_energy(a, b))
            .sum()
    }

    /// Strictly decreasing weights and zero energy: the shape of a path.
    pub fn is_settled(&self) -> bool {
        self.clusters.windows(2).all(|w| w[0].weight > w[1].weight) && self.total_energy() == 0
    }

    /// Sort by charge with interchanges; clusters of equal charge keep their
    /// relative order.
    pub fn canonical_order(&self) -> Result<Self> {
        self.canonical_order_with(Schedule::LeftmostFirst)
    }

    pub fn canonical_order_with(&self, schedule: Schedule) -> Result<Self> {
        let mut out = self.clone();
        loop {
            let inversions = out
                .clusters
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0].charge > w[1].charge);
            let pos = match schedule {
                Schedule::LeftmostFirst => inversions.map(|(p, _)| p).next(),
                Schedule::RightmostFirst => inversions.map(|(p, _)| p).next_back(),
            };
            match pos {
                Some(p) => out.interchange_in_place(p)?,
                None => return Ok(out),
            }
        }
    }

    /// Canonical rewriting of a settled sequence as a multipartition.
    pub fn canonicalize(&self, cfg: BoundaryConfig) -> Result<MultiPartition> {
        self.to_multipartition(cfg, Schedule::LeftmostFirst)
    }

    pub fn to_multipartition(&self, cfg: BoundaryConfig, schedule: Schedule) -> Result<MultiPartition> {
        self.check_charges(cfg)?;
        let sorted = self.canonical_order_with(schedule)?;
        let mut components = vec![Vec::new(); cfg.max_charge()];
        for c in sorted.clusters {
            components[c.charge - 1].push(c.weight as u64);
        }
        let mp = MultiPartition::new(components)?;
        mp.validate(cfg)?;
        Ok(mp)
    }

    fn check_charges(&self, cfg: BoundaryConfig) -> Result<()> {
        for c in &self.clusters {
            if c.charge == 0 || c.charge > cfg.max_charge() {
                return Err(Error::ChargeOutOfRange {
                    j: c.charge,
                    max: cfg.max_charge(),
                });
            }
            if c.weight <= 0 {
                return Err(Error::NonPositiveWeight {
                    pos: 0,
                    weight: c.weight,
                });
            }
        }
        Ok(())
    }

    /// Lay the clusters of `mp` out in canonical order (charge 1 first).
    pub fn from_multipartition(mp: &MultiPartition) -> Self {
        let clusters = mp
            .components()
            .iter()
            .enumerate()
            .flat_map(|(idx, comp)| comp.iter().map(move |&w| Cluster::new(w as i64, idx + 1)))
            .collect();
        Self { clusters }
    }

    /// The leftmost pair breaking the separation inequality: adjacent pairs
    /// first, then pairs separated only by lower-charge clusters.
    fn first_violation(&self) -> Option<(usize, usize)> {
        let n = self.clusters.len();
        let adjacent = (0..n.saturating_sub(1)).find(|&a| self.pair_energy(a, a + 1) > 0);
        if let Some(a) = adjacent {
            return Some((a, a + 1));
        }
        for a in 0..n {
            let floor = self.clusters[a].charge;
            for b in a + 2..n {
                // once a cluster of charge >= the pair minimum sits between, later b are shielded too
                if self.clusters[b - 1].charge >= floor {
                    break;
                }
                if self.pair_energy(a, b) > 0 {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

impl From<Vec<Cluster>> for ClusterSequence {
    fn from(clusters: Vec<Cluster>) -> Self {
        Self { clusters }
    }
}

impl std::fmt::Display for ClusterSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (n, c) in self.clusters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Reorder the clusters of `mp` into the zero-energy, decreasing-weight
/// sequence of its path. Repeatedly fixes the leftmost adjacent violation,
/// then separated violations, until none remain.
pub fn settle_to_path(mp: &MultiPartition, cfg: BoundaryConfig) -> Result<ClusterSequence> {
    mp.validate(cfg)?;
    let mut seq = ClusterSequence::from_multipartition(mp);
    let cap = 10 * seq.len().pow(2).max(1);
    for _ in 0..cap {
        match seq.first_violation() {
            Some((a, b)) => seq.swap_pair(a, b)?,
            None => return Ok(seq),
        }
    }
    Err(Error::SettleCap { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[(i64, usize)]) -> ClusterSequence {
        v.iter().map(|&(w, c)| Cluster::new(w, c)).collect::<Vec<_>>().into()
    }

    fn cfg(k: i64, i: i64) -> BoundaryConfig {
        BoundaryConfig::new(k, i).unwrap()
    }

    fn mp(c: &[&[u64]]) -> MultiPartition {
        MultiPartition::new(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn interchange_examples() {
        assert_eq!(
            seq(&[(19, 3), (15, 1)]).interchange(0).unwrap(),
            seq(&[(17, 1), (17, 3)])
        );
        assert_eq!(seq(&[(7, 2), (8, 4)]).interchange(0).unwrap(), seq(&[(12, 4), (3, 2)]));
        let s = seq(&[(21, 3), (19, 1), (16, 2)]);
        assert_eq!(s.interchange(1).unwrap().interchange(1).unwrap(), s);
    }

    #[test]
    fn interchange_errors() {
        assert!(matches!(
            seq(&[(3, 1)]).interchange(0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            seq(&[(2, 3), (9, 1)]).interchange(0),
            Err(Error::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn energy_examples() {
        let bad = seq(&[(21, 3), (19, 1), (16, 2), (12, 3)]);
        assert_eq!(bad.pair_energy(0, 3), 3);
        // 21^(3) 19^(1): gap 2 < r + 1 = 3
        assert_eq!(bad.pair_energy(0, 1), 1);
        assert_eq!(bad.pair_energy(1, 2), 0);
        assert_eq!(bad.pair_energy(2, 3), 0);
        assert_eq!(bad.pair_energy(1, 3), 0);
        assert_eq!(bad.pair_energy(0, 2), 2);
        assert_eq!(bad.total_energy(), 6);
        assert!(!bad.is_settled());

        let good = seq(&[(24, 3), (19, 1), (16, 2), (12, 3)]);
        assert_eq!(good.pair_energy(0, 3), 0);
        assert_eq!(good.total_energy(), 0);
        assert!(good.is_settled());

        let path = seq(&[(19, 3), (15, 1), (12, 1), (10, 2), (6, 1), (3, 2)]);
        assert_eq!(path.total_energy(), 0);
        assert_eq!(seq(&[(5, 2)]).total_energy(), 0);
    }

    #[test]
    fn canonicalize_examples() {
        let path = seq(&[(19, 3), (15, 1), (12, 1), (10, 2), (6, 1), (3, 2)]);
        assert_eq!(
            path.canonical_order().unwrap(),
            seq(&[(17, 1), (14, 1), (10, 1), (12, 2), (7, 2), (5, 3)])
        );
        assert_eq!(
            path.canonicalize(cfg(4, 4)).unwrap(),
            mp(&[&[17, 14, 10], &[12, 7], &[5]])
        );
        assert_eq!(seq(&[(9, 3)]).canonicalize(cfg(4, 4)).unwrap(), mp(&[&[], &[], &[9]]));
        let canon = seq(&[(17, 1), (14, 1), (10, 1), (12, 2), (7, 2), (5, 3)]);
        assert_eq!(canon.canonical_order().unwrap(), canon);
        assert!(seq(&[(21, 3), (19, 1), (16, 2), (12, 3)])
            .canonicalize(cfg(4, 4))
            .is_err());
        assert!(seq(&[(9, 4)]).canonicalize(cfg(4, 4)).is_err());
    }

    #[test]
    fn settle_examples() {
        let c = cfg(4, 4);
        let got = settle_to_path(&mp(&[&[17, 14, 10], &[12, 7], &[5]]), c).unwrap();
        assert_eq!(got, seq(&[(19, 3), (15, 1), (12, 1), (10, 2), (6, 1), (3, 2)]));

        let got = settle_to_path(&mp(&[&[9, 5, 2]]), cfg(2, 2)).unwrap();
        assert_eq!(got, seq(&[(9, 1), (5, 1), (2, 1)]));

        let c5 = cfg(5, 5);
        let x = mp(&[&[], &[7], &[], &[8]]);
        let got = settle_to_path(&x, c5).unwrap();
        assert_eq!(got, seq(&[(12, 4), (3, 2)]));
        assert_eq!(got.total_energy(), 0);
        assert_eq!(got.canonicalize(c5).unwrap(), x);
    }

    #[test]
    fn json_shape() {
        let s = seq(&[(19, 3), (15, 1)]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"[{"w":19,"c":3},{"w":15,"c":1}]"#);
    }
}
