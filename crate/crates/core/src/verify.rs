//! Cross-check of the four counts per cell `(k, i, n, m)`: restricted
//! partitions, multipartitions, paths, and the multiple-sum coefficient.

use rayon::prelude::*;

use crate::config::BoundaryConfig;
use crate::error::{Error, Result};
use crate::lattice::path_counts;
use crate::multipartition::enumerate_multipartitions;
use crate::partition::restricted_counts;
use crate::qseries::andrews_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub cfg: BoundaryConfig,
    pub n: usize,
    pub m: usize,
    pub partitions: u64,
    pub multipartitions: u64,
    pub paths: u64,
    pub series: i64,
}

impl Cell {
    pub fn agrees(&self) -> bool {
        self.partitions == self.multipartitions
            && self.partitions == self.paths
            && i64::try_from(self.partitions) == Ok(self.series)
    }

    pub fn is_zero(&self) -> bool {
        self.partitions == 0 && self.multipartitions == 0 && self.paths == 0 && self.series == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    /// Every cell with `m <= max_n`, ordered by `(k, i, n, m)`.
    pub cells: Vec<Cell>,
}

impl Report {
    pub fn mismatches(&self) -> Vec<Cell> {
        self.cells.iter().filter(|c| !c.agrees()).copied().collect()
    }

    pub fn all_agree(&self) -> bool {
        self.cells.iter().all(Cell::agrees)
    }
}

fn at(v: &[u64], m: usize) -> u64 {
    v.get(m).copied().unwrap_or(0)
}

fn cells_for(cfg: BoundaryConfig, n: usize, max_n: usize, series: &crate::qseries::TruncatedSeries) -> Vec<Cell> {
    let f = restricted_counts(cfg, n as u64);
    let p = path_counts(cfg, n as u64);
    let mut g = Vec::new();
    for mp in enumerate_multipartitions(cfg, n as u64, None) {
        let m = mp.weight_and_charge().1;
        if g.len() <= m {
            g.resize(m + 1, 0);
        }
        g[m] += 1;
    }
    (0..=max_n)
        .map(|m| Cell {
            cfg,
            n,
            m,
            partitions: at(&f, m),
            multipartitions: at(&g, m),
            paths: at(&p, m),
            series: series.get(m, n),
        })
        .collect()
}

/// Run every cell for `k` in `k_range`, `0 <= n <= max_n`. Work is spread
/// over `jobs` threads; the report does not depend on `jobs`.
pub fn run(k_range: std::ops::RangeInclusive<usize>, max_n: usize, jobs: usize) -> Result<Report> {
    let configs = BoundaryConfig::all(k_range);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let series: Vec<_> = configs
            .par_iter()
            .map(|&cfg| andrews_sum(cfg, max_n, max_n))
            .collect::<Result<_>>()?;
        let work: Vec<(usize, usize)> = (0..configs.len())
            .flat_map(|c| (0..=max_n).map(move |n| (c, n)))
            .collect();
        let cells = work
            .par_iter()
            .flat_map_iter(|&(c, n)| cells_for(configs[c], n, max_n, &series[c]))
            .collect();
        Ok::<_, Error>(Report { cells })
    })
}

/// Perturbs one cell so the harness can prove it notices.
pub fn inject_fault(report: &mut Report) {
    let target = report.cells.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if let Some(cell) = report.cells.get_mut(target) {
        cell.paths += 1;
    }
}
