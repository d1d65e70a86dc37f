//! Dataset readers and writers.

mod builtin;
mod konect;
mod projection;
mod tsv;

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

pub use builtin::builtin_southern_women;
pub use konect::{parse_konect, parse_konect_str};
pub use projection::{parse_projection, parse_projection_str, write_projection};
pub use tsv::{parse_tsv, parse_tsv_str};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Konect,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "konect" => Ok(Format::Konect),
            other => Err(Error::InvalidConfig(format!("unknown format '{other}'"))),
        }
    }
}

pub fn load(path: &Path, format: Format) -> Result<BipartiteGraph> {
    match format {
        Format::Tsv => parse_tsv(path),
        Format::Konect => parse_konect(path),
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}
