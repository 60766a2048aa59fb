//! Restricted partitions <-> multipartitions, and through the cluster
//! algebra, <-> paths.
//!
//! Forward: for `c = k-1` down to 2, group runs of `c` adjacent parts whose
//! ends differ by at most 1 into charge-`c` clusters and push them to the
//! right with interchanges. The parts left over form the first component.
//!
//! Backward: starting from the first component, insert each cluster (charge 2
//! first) at the rightmost position where its unfolding leaves a partition
//! with `p_l - p_{l+j} >= 2`.

use crate::cluster::settle_to_path;
use crate::cluster::ClusterSequence;
use crate::config::BoundaryConfig;
use crate::error::{Error, Result};
use crate::lattice::{self, PathWord};
use crate::multipartition::MultiPartition;
use crate::partition::{gap_at_distance, Partition};

/// Optional sink for human-readable steps.
pub type Trace<'a> = Option<&'a mut Vec<String>>;

fn note(trace: &mut Trace<'_>, msg: impl FnOnce() -> String) {
    if let Some(t) = trace.as_deref_mut() {
        t.push(msg());
    }
}

/// `j` parts differing by at most 1, largest first, summing to `weight`.
pub fn unfold(weight: u64, charge: usize) -> Vec<u64> {
    assert!(charge >= 1, "charge must be positive");
    let j = charge as u64;
    let (s, r) = (weight / j, weight % j);
    (0..j).map(|l| if l < r { s + 1 } else { s }).collect()
}

/// Where runs are looked for while grouping parts into clusters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunScan {
    LeftToRight,
    RightToLeft,
}

pub fn partition_to_multipartition(p: &Partition, cfg: BoundaryConfig) -> Result<MultiPartition> {
    forward(p, cfg, RunScan::LeftToRight, None)
}

pub fn partition_to_multipartition_traced(
    p: &Partition,
    cfg: BoundaryConfig,
    trace: &mut Vec<String>,
) -> Result<MultiPartition> {
    forward(p, cfg, RunScan::LeftToRight, Some(trace))
}

pub fn partition_to_multipartition_with(p: &Partition, cfg: BoundaryConfig, scan: RunScan) -> Result<MultiPartition> {
    forward(p, cfg, scan, None)
}

/// Start indices of non-overlapping runs of `c` parts with `first - last <= 1`.
fn find_runs(parts: &[u64], c: usize, scan: RunScan) -> Vec<usize> {
    let mut starts = Vec::new();
    if parts.len() < c {
        return starts;
    }
    match scan {
        RunScan::LeftToRight => {
            let mut s = 0;
            while s + c <= parts.len() {
                if parts[s] - parts[s + c - 1] <= 1 {
                    starts.push(s);
                    s += c;
                } else {
                    s += 1;
                }
            }
        }
        RunScan::RightToLeft => {
            let mut end = parts.len();
            while end >= c {
                let s = end - c;
                if parts[s] - parts[end - 1] <= 1 {
                    starts.push(s);
                    end = s;
                } else {
                    end -= 1;
                }
            }
            starts.reverse();
        }
    }
    starts
}

fn forward(p: &Partition, cfg: BoundaryConfig, scan: RunScan, mut trace: Trace<'_>) -> Result<MultiPartition> {
    if !p.satisfies_difference(cfg) {
        return Err(Error::Restriction { k: cfg.k(), i: cfg.i() });
    }
    let mut parts: Vec<u64> = p.parts().to_vec();
    let mut components = vec![Vec::new(); cfg.max_charge()];
    for c in (2..=cfg.max_charge()).rev() {
        let starts = find_runs(&parts, c, scan);
        if starts.is_empty() {
            continue;
        }
        // clusters keep their order; a cluster crosses every remaining part
        // to its right, each crossing moves 2 from the cluster to the part
        let mut rest = Vec::with_capacity(parts.len());
        let mut clusters: Vec<(u64, usize)> = Vec::new();
        let mut next = starts.iter().peekable();
        let mut idx = 0;
        while idx < parts.len() {
            if next.peek() == Some(&&idx) {
                next.next();
                let run = &parts[idx..idx + c];
                let w: u64 = run.iter().sum();
                note(&mut trace, || format!("group {run:?} -> {w}^({c})"));
                clusters.push((w, rest.len()));
                idx += c;
            } else {
                rest.push(parts[idx]);
                idx += 1;
            }
        }
        let remaining = rest.len();
        let mut raised = rest.clone();
        for (n, part) in raised.iter_mut().enumerate() {
            *part += 2 * clusters.iter().filter(|&&(_, at)| at <= n).count() as u64;
        }
        for &(w, at) in &clusters {
            let crossed = (remaining - at) as u64;
            let moved = w
                .checked_sub(2 * crossed)
                .filter(|&v| v > 0)
                .ok_or(Error::NonPositiveWeight {
                    pos: at,
                    weight: w as i64 - 2 * crossed as i64,
                })?;
            note(&mut trace, || {
                format!("move {w}^({c}) right past {crossed} part(s) -> {moved}^({c})")
            });
            components[c - 1].push(moved);
        }
        parts = raised;
        note(&mut trace, || format!("parts now {parts:?}"));
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} after extracting charge {c}")));
        }
    }
    components[0] = parts;
    let mp = MultiPartition::new(components)?;
    mp.validate(cfg)?;
    Ok(mp)
}

/// The sequence obtained by moving a cluster `weight^(charge)` leftwards
/// past the last `crossed` parts and unfolding it there, or `None` if a part
/// would drop to zero.
pub fn place_at(parts: &[u64], weight: u64, charge: usize, crossed: usize) -> Option<Vec<u64>> {
    let at = parts.len().checked_sub(crossed)?;
    let unfolded = unfold(weight + 2 * crossed as u64, charge);
    if unfolded.contains(&0) {
        return None;
    }
    let mut out = Vec::with_capacity(parts.len() + charge);
    out.extend_from_slice(&parts[..at]);
    out.extend(unfolded);
    for &q in &parts[at..] {
        out.push(q.checked_sub(2).filter(|&v| v > 0)?);
    }
    Some(out)
}

/// Non-increasing, and `p_l - p_{l+j} >= 2`.
pub fn insertion_criteria(seq: &[u64], charge: usize) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1]) && gap_at_distance(seq, charge)
}

/// Insert one cluster: returns the number of parts crossed and the result.
/// Any other admissible position must give the same partition.
pub fn insert_cluster(parts: &[u64], weight: u64, charge: usize) -> Result<(usize, Vec<u64>)> {
    let mut chosen: Option<(usize, Vec<u64>)> = None;
    for crossed in 0..=parts.len() {
        let Some(seq) = place_at(parts, weight, charge, crossed) else {
            continue;
        };
        if !insertion_criteria(&seq, charge) {
            continue;
        }
        match &chosen {
            None => chosen = Some((crossed, seq)),
            Some((_, first)) if *first == seq => {}
            Some(_) => {
                return Err(Error::AmbiguousInsertion {
                    weight: weight as i64,
                    charge,
                })
            }
        }
    }
    chosen.ok_or(Error::NoInsertion {
        weight: weight as i64,
        charge,
    })
}

pub fn multipartition_to_partition(mp: &MultiPartition, cfg: BoundaryConfig) -> Result<Partition> {
    backward(mp, cfg, None, &mut |_| {})
}

pub fn multipartition_to_partition_traced(
    mp: &MultiPartition,
    cfg: BoundaryConfig,
    trace: &mut Vec<String>,
) -> Result<Partition> {
    backward(mp, cfg, Some(trace), &mut |_| {})
}

/// Runs the inverse map, handing every intermediate partition to `observe`.
pub fn multipartition_to_partition_observed(
    mp: &MultiPartition,
    cfg: BoundaryConfig,
    observe: &mut dyn FnMut(&[u64]),
) -> Result<Partition> {
    backward(mp, cfg, None, observe)
}

fn backward(
    mp: &MultiPartition,
    cfg: BoundaryConfig,
    mut trace: Trace<'_>,
    observe: &mut dyn FnMut(&[u64]),
) -> Result<Partition> {
    mp.validate(cfg)?;
    let mut parts = mp.component(1).to_vec();
    observe(&parts);
    for j in 2..=cfg.max_charge() {
        for &w in mp.component(j) {
            let (crossed, next) = insert_cluster(&parts, w, j)?;
            note(&mut trace, || {
                format!(
                    "insert {w}^({j}) into {parts:?} past {crossed} part(s) as {}^({j}) -> {next:?}",
                    w + 2 * crossed as u64
                )
            });
            parts = next;
            observe(&parts);
        }
    }
    let p = Partition::new(parts)?;
    debug_assert!(p.satisfies_difference(cfg));
    Ok(p)
}

pub fn path_to_multipartition(path: &PathWord, cfg: BoundaryConfig) -> Result<MultiPartition> {
    path.check(cfg)?;
    path.clusters()?.canonicalize(cfg)
}

pub fn multipartition_to_path(mp: &MultiPartition, cfg: BoundaryConfig) -> Result<PathWord> {
    let settled: ClusterSequence = settle_to_path(mp, cfg)?;
    lattice::from_clusters(cfg, &settled)
}

pub fn path_to_partition(path: &PathWord, cfg: BoundaryConfig) -> Result<Partition> {
    multipartition_to_partition(&path_to_multipartition(path, cfg)?, cfg)
}

pub fn partition_to_path(p: &Partition, cfg: BoundaryConfig) -> Result<PathWord> {
    multipartition_to_path(&partition_to_multipartition(p, cfg)?, cfg)
}
