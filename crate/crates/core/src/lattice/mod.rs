//! Restricted lattice paths. A path starts at `(0, k - i)`, moves by
//! `A: (x, y) -> (x + 1, max(0, y - 1))` or `B: (x, y) -> (x + 1, y + 1)`,
//! keeps every height below `k` and ends on the axis.

mod render;

use serde::{Deserialize, Serialize};

pub use render::{render, Format};

use crate::cluster::{Cluster, ClusterSequence};
use crate::config::BoundaryConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathRepr", into = "PathRepr")]
pub struct PathWord {
    start: usize,
    moves: Vec<Move>,
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    start: usize,
    word: String,
}

impl TryFrom<PathRepr> for PathWord {
    type Error = Error;

    fn try_from(r: PathRepr) -> Result<Self> {
        PathWord::parse(r.start, &r.word)
    }
}

impl From<PathWord> for PathRepr {
    fn from(p: PathWord) -> Self {
        PathRepr {
            start: p.start,
            word: p.word(),
        }
    }
}

/// A local maximum: preceded by `B`, followed by `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Peak {
    pub x: u64,
    #[serde(rename = "h")]
    pub height: usize,
    #[serde(rename = "c")]
    pub charge: usize,
}

impl PathWord {
    pub fn new(start: usize, moves: Vec<Move>) -> Self {
        Self { start, moves }
    }

    /// Parses a word over `{A, B}`. Whitespace is ignored.
    pub fn parse(start: usize, word: &str) -> Result<Self> {
        let moves = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'A' | 'a' => Ok(Move::A),
                'B' | 'b' => Ok(Move::B),
                other => Err(Error::InvalidPath(format!("unexpected move {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { start, moves })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn word(&self) -> String {
        self.moves
            .iter()
            .map(|m| match m {
                Move::A => 'A',
                Move::B => 'B',
            })
            .collect()
    }

    /// Height of every vertex, `moves.len() + 1` entries.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        let mut y = self.start;
        out.push(y);
        for m in &self.moves {
            y = match m {
                Move::A => y.saturating_sub(1),
                Move::B => y + 1,
            };
            out.push(y);
        }
        out
    }

    fn peak_positions(&self) -> Vec<usize> {
        self.moves
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Move::B && w[1] == Move::A)
            .map(|(t, _)| t + 1)
            .collect()
    }

    /// Peaks left to right with their charges.
    ///
    /// The charge of a peak at height `h` is `h - max(lo_left, lo_right)`, where
    /// `lo_left` is the lowest height between the nearest peak to the left of
    /// height `>= h` and this one, and `lo_right` the lowest height between
    /// this peak and the nearest peak to the right of height `> h`.
    pub fn peaks(&self) -> Result<Vec<Peak>> {
        let heights = self.heights();
        if *heights.last().unwrap() != 0 {
            return Err(Error::InvalidPath("does not end on the axis".into()));
        }
        Ok(charges_for(&heights, &self.peak_positions()))
    }

    pub fn weight(&self) -> u64 {
        self.peak_positions().iter().map(|&t| t as u64).sum()
    }

    pub fn total_charge(&self) -> Result<usize> {
        Ok(self.peaks()?.iter().map(|p| p.charge).sum())
    }

    /// Peaks read right to left as clusters `x^(c)`.
    pub fn clusters(&self) -> Result<ClusterSequence> {
        Ok(self
            .peaks()?
            .iter()
            .rev()
            .map(|p| Cluster::new(p.x as i64, p.charge))
            .collect::<Vec<_>>()
            .into())
    }

    pub fn validate(&self, cfg: BoundaryConfig) -> bool {
        self.check(cfg).is_ok()
    }

    /// Like [`PathWord::validate`] but says what is wrong.
    pub fn check(&self, cfg: BoundaryConfig) -> Result<()> {
        if self.start != cfg.start_height() {
            return Err(Error::InvalidPath(format!(
                "starts at height {}, expected {}",
                self.start,
                cfg.start_height()
            )));
        }
        let heights = self.heights();
        if let Some(h) = heights.iter().find(|&&h| h > cfg.max_charge()) {
            return Err(Error::InvalidPath(format!("reaches height {h} > {}", cfg.max_charge())));
        }
        if *heights.last().unwrap() != 0 {
            return Err(Error::InvalidPath("does not end on the axis".into()));
        }
        let from = self.peak_positions().last().copied().unwrap_or(0);
        let first_zero = (from..heights.len()).find(|&t| heights[t] == 0).unwrap();
        if first_zero != heights.len() - 1 {
            return Err(Error::InvalidPath("moves after the final return to the axis".into()));
        }
        Ok(())
    }
}

impl std::fmt::Display for PathWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.start, self.word())
    }
}

fn charges_for(heights: &[usize], positions: &[usize]) -> Vec<Peak> {
    positions
        .iter()
        .enumerate()
        .map(|(n, &t)| {
            let h = heights[t];
            let left = positions[..n]
                .iter()
                .rev()
                .find(|&&s| heights[s] >= h)
                .map_or(0, |&s| s + 1);
            let right = positions[n + 1..]
                .iter()
                .find(|&&s| heights[s] > h)
                .copied()
                .unwrap_or(heights.len());
            let lo_left = *heights[left..t].iter().min().unwrap();
            let lo_right = *heights[t + 1..right].iter().min().unwrap();
            Peak {
                x: t as u64,
                height: h,
                charge: h - lo_left.max(lo_right),
            }
        })
        .collect()
}

/// Moves from a vertex at `from` (a peak when `after_peak`) to a peak of
/// height `to` that is `d` columns further right: `A^p B^q`.
fn connect(from: usize, after_peak: bool, d: u64, to: usize) -> std::result::Result<(u64, u64), String> {
    if to == 0 {
        return Err("peak height must be positive".into());
    }
    if d == 0 {
        return Err("peaks overlap".into());
    }
    let (from_i, to_i, d_i) = (from as i64, to as i64, d as i64);
    if d_i >= from_i + to_i {
        // touches the axis, flat steps absorb the rest
        return Ok(((d_i - to_i) as u64, to as u64));
    }
    let twice_valley = from_i + to_i - d_i;
    if twice_valley % 2 != 0 {
        return Err(format!("parity: heights {from} and {to} cannot be joined in {d} steps"));
    }
    let valley = twice_valley / 2;
    let (p, q) = (from_i - valley, to_i - valley);
    if q < 1 || p < i64::from(after_peak) {
        return Err(format!("heights {from} and {to} are too far apart for {d} steps"));
    }
    Ok((p as u64, q as u64))
}

/// The canonical word with the given peaks `(x, height)`, listed left to right.
/// Errors name the offending pair; `#0` is the starting point, peaks count from 1.
pub fn from_peaks(start: usize, peaks: &[(u64, usize)]) -> Result<PathWord> {
    let mut moves = Vec::new();
    let (mut x, mut y, mut after_peak) = (0u64, start, false);
    for (n, &(px, ph)) in peaks.iter().enumerate() {
        let d = px.saturating_sub(x);
        let (p, q) = connect(y, after_peak, d, ph).map_err(|reason| Error::InfeasiblePeaks {
            left: n,
            right: n + 1,
            reason,
        })?;
        moves.extend(std::iter::repeat_n(Move::A, p as usize));
        moves.extend(std::iter::repeat_n(Move::B, q as usize));
        (x, y, after_peak) = (px, ph, true);
    }
    moves.extend(std::iter::repeat_n(Move::A, y));
    Ok(PathWord { start, moves })
}

/// The path whose peaks, read right to left, are `seq` (weights = x, plus
/// charges). Heights are recovered by a pruned search.
pub fn from_clusters(cfg: BoundaryConfig, seq: &ClusterSequence) -> Result<PathWord> {
    let targets: Vec<(u64, usize)> = seq
        .clusters()
        .iter()
        .rev()
        .map(|c| (c.weight.max(0) as u64, c.charge))
        .collect();
    if targets.windows(2).any(|w| w[0].0 >= w[1].0) || targets.iter().any(|t| t.0 == 0) {
        return Err(Error::NoPathForClusters);
    }
    let mut search = HeightSearch {
        cfg,
        targets: &targets,
        heights: Vec::new(),
    };
    search.run().ok_or(Error::NoPathForClusters)
}

struct HeightSearch<'a> {
    cfg: BoundaryConfig,
    targets: &'a [(u64, usize)],
    heights: Vec<usize>,
}

impl HeightSearch<'_> {
    fn run(&mut self) -> Option<PathWord> {
        let t = self.heights.len();
        if t == self.targets.len() {
            let peaks: Vec<_> = self
                .targets
                .iter()
                .zip(&self.heights)
                .map(|(&(x, _), &h)| (x, h))
                .collect();
            let path = from_peaks(self.cfg.start_height(), &peaks).ok()?;
            let got = path.peaks().ok()?;
            let ok = got.len() == t
                && got
                    .iter()
                    .zip(self.targets)
                    .all(|(p, &(x, c))| p.x == x && p.charge == c);
            return ok.then_some(path);
        }
        let want = self.targets[t].1;
        for h in want..=self.cfg.max_charge() {
            self.heights.push(h);
            if self.prefix_consistent() {
                if let Some(p) = self.run() {
                    return Some(p);
                }
            }
            self.heights.pop();
        }
        None
    }

    /// Charges already forced by the prefix must match; the others can only
    /// grow as the path extends, so they must not already exceed the target.
    fn prefix_consistent(&self) -> bool {
        let t = self.heights.len();
        let peaks: Vec<_> = self.targets[..t]
            .iter()
            .zip(&self.heights)
            .map(|(&(x, _), &h)| (x, h))
            .collect();
        let Ok(path) = from_peaks(self.cfg.start_height(), &peaks) else {
            return false;
        };
        let mut heights = path.heights();
        // drop the closing descent; only the prefix up to the last peak is fixed
        let descent = self.heights[t - 1];
        heights.truncate(heights.len() - descent);
        let positions: Vec<usize> = peaks.iter().map(|&(x, _)| x as usize).collect();
        for (n, &pos) in positions.iter().enumerate() {
            let h = heights[pos];
            let closed = positions[n + 1..].iter().any(|&s| heights[s] > h);
            let left = positions[..n]
                .iter()
                .rev()
                .find(|&&s| heights[s] >= h)
                .map_or(0, |&s| s + 1);
            let lo_left = *heights[left..pos].iter().min().unwrap();
            let want = self.targets[n].1;
            if n + 1 == t {
                if h < want || h - want < lo_left {
                    return false;
                }
                continue;
            }
            let right = positions[n + 1..]
                .iter()
                .find(|&&s| heights[s] > h)
                .copied()
                .unwrap_or(heights.len());
            let lo_right = *heights[pos + 1..right].iter().min().unwrap();
            let charge = h - lo_left.max(lo_right);
            if (closed && charge != want) || charge > want {
                return false;
            }
        }
        true
    }
}

/// All canonical valid paths of weight `n` (and total charge `m_filter`).
pub fn enumerate_paths(cfg: BoundaryConfig, n: u64, m_filter: Option<usize>) -> Vec<PathWord> {
    let mut words = Vec::new();
    let mut dfs = PathDfs {
        n,
        top: cfg.max_charge(),
        moves: Vec::new(),
        out: &mut words,
    };
    let start = cfg.start_height();
    dfs.step(0, start, None, 0, false);
    words
        .into_iter()
        .map(|moves| PathWord { start, moves })
        .filter(|p| m_filter.is_none_or(|m| p.total_charge().expect("canonical") == m))
        .collect()
}

/// `counts[m]` = number of paths of weight `n` and total charge `m`.
pub fn path_counts(cfg: BoundaryConfig, n: u64) -> Vec<u64> {
    let mut counts = Vec::new();
    for p in enumerate_paths(cfg, n, None) {
        let m = p.total_charge().expect("canonical");
        if counts.len() <= m {
            counts.resize(m + 1, 0);
        }
        counts[m] += 1;
    }
    counts
}

struct PathDfs<'a> {
    n: u64,
    top: usize,
    moves: Vec<Move>,
    out: &'a mut Vec<Vec<Move>>,
}

impl PathDfs<'_> {
    /// `x`, `y`: current vertex; `weight`: peaks so far; `grounded`: the
    /// path touched the axis before this vertex, since the last peak.
    fn step(&mut self, x: u64, y: usize, last: Option<Move>, weight: u64, grounded: bool) {
        if y == 0 && !grounded && weight == self.n {
            self.out.push(self.moves.clone());
            return;
        }
        let grounded = grounded || y == 0;

        let forms_peak = last == Some(Move::B);
        let after = if forms_peak { weight + x } else { weight };
        // either finish by descending, or leave room for a peak at x + 2 or later
        if after == self.n || after + x + 2 <= self.n {
            self.moves.push(Move::A);
            self.step(
                x + 1,
                y.saturating_sub(1),
                Some(Move::A),
                after,
                grounded && !forms_peak,
            );
            self.moves.pop();
        }

        if y < self.top && weight + x < self.n {
            self.moves.push(Move::B);
            self.step(x + 1, y + 1, Some(Move::B), weight, grounded);
            self.moves.pop();
        }
    }
}
