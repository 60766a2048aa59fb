//! Exact enumeration of three equinumerous families and the bijections
//! between them:
//!
//! * partitions with `p_l >= p_{l+k-1} + 2` and at most `i - 1` ones,
//! * ordered `(k-1)`-tuples of partitions with spacing `2j` and floors,
//! * restricted lattice paths weighted by peak positions and charges,
//!
//! plus a truncated bivariate series engine for the multiple-sum generating
//! function of all three.

pub mod bijection;
pub mod cluster;
pub mod config;
pub mod convert;
pub mod error;
pub mod lattice;
pub mod multipartition;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use cluster::{Cluster, ClusterSequence};
pub use config::BoundaryConfig;
pub use error::{Error, Result};
pub use lattice::{PathWord, Peak};
pub use multipartition::MultiPartition;
pub use partition::{FrequencyVector, Partition};
pub use qseries::TruncatedSeries;
