//! JSON-level conversion between the three families.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijection;
use crate::cluster::settle_to_path;
use crate::config::BoundaryConfig;
use crate::error::{Error, Result};
use crate::lattice::{self, PathWord};
use crate::multipartition::MultiPartition;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Partition,
    Multipartition,
    Path,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partition" => Ok(Family::Partition),
            "multipartition" => Ok(Family::Multipartition),
            "path" => Ok(Family::Path),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Partition => "partition",
            Family::Multipartition => "multipartition",
            Family::Path => "path",
        })
    }
}

/// A validated member of one of the families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Partition(Partition),
    Multipartition(MultiPartition),
    Path(PathWord),
}

impl Object {
    pub fn family(&self) -> Family {
        match self {
            Object::Partition(_) => Family::Partition,
            Object::Multipartition(_) => Family::Multipartition,
            Object::Path(_) => Family::Path,
        }
    }

    /// Parse `text` as JSON and check it against `cfg`.
    pub fn parse(cfg: BoundaryConfig, family: Family, text: &str) -> Result<Self> {
        fn json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
        }
        Ok(match family {
            Family::Partition => {
                let p: Partition = json(text)?;
                if !p.satisfies_difference(cfg) {
                    return Err(Error::Restriction { k: cfg.k(), i: cfg.i() });
                }
                Object::Partition(p)
            }
            Family::Multipartition => {
                let mp: MultiPartition = json(text)?;
                mp.validate(cfg)?;
                Object::Multipartition(mp)
            }
            Family::Path => {
                let p: PathWord = json(text)?;
                p.check(cfg)?;
                Object::Path(p)
            }
        })
    }

    pub fn to_json(&self) -> String {
        fn ser<T: Serialize>(v: &T) -> String {
            serde_json::to_string(v).expect("plain data serializes")
        }
        match self {
            Object::Partition(p) => ser(p),
            Object::Multipartition(mp) => ser(mp),
            Object::Path(p) => ser(p),
        }
    }

    /// Image of `self` in family `to`. Every route passes through the
    /// multipartition side.
    pub fn convert(&self, cfg: BoundaryConfig, to: Family, trace: bijection::Trace<'_>) -> Result<Object> {
        if self.family() == to {
            return Ok(self.clone());
        }
        let mut scratch = Vec::new();
        let steps = trace.unwrap_or(&mut scratch);
        let mp = match self {
            Object::Partition(p) => bijection::partition_to_multipartition_traced(p, cfg, steps)?,
            Object::Multipartition(mp) => mp.clone(),
            Object::Path(p) => {
                let seq = p.clusters()?;
                steps.push(format!("peaks {seq}"));
                let mp = bijection::path_to_multipartition(p, cfg)?;
                steps.push(format!("canonical form {mp}"));
                mp
            }
        };
        Ok(match to {
            Family::Multipartition => Object::Multipartition(mp),
            Family::Partition => Object::Partition(bijection::multipartition_to_partition_traced(&mp, cfg, steps)?),
            Family::Path => {
                let settled = settle_to_path(&mp, cfg)?;
                steps.push(format!("settled {settled}"));
                Object::Path(lattice::from_clusters(cfg, &settled)?)
            }
        })
    }
}

/// Parse, convert and serialize in one step.
pub fn convert_json(
    cfg: BoundaryConfig,
    from: Family,
    to: Family,
    text: &str,
    trace: bijection::Trace<'_>,
) -> Result<String> {
    Ok(Object::parse(cfg, from, text)?.convert(cfg, to, trace)?.to_json())
}
