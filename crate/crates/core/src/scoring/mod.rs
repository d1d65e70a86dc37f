//! Influence scores for the nodes of one mode, plus the comparison
//! machinery shared by all measures.

pub mod centrality;
mod hh;
mod stats;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Mode;

pub use centrality::{
    betweenness_centrality, closeness_centrality, degree_centrality, eigenvector_centrality,
};
pub use hh::{event_effect, hh_scores, EffectBreakdown, HhScores};
pub use stats::{
    compare_measures, min_max_normalize, normalize, r_squared, top_k, Direction, R2Matrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Measure {
    #[serde(rename = "HH")]
    HH,
    Degree,
    Betweenness,
    Closeness,
    Eigenvector,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::HH,
        Measure::Degree,
        Measure::Betweenness,
        Measure::Closeness,
        Measure::Eigenvector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::HH => "HH",
            Measure::Degree => "Degree",
            Measure::Betweenness => "Betweenness",
            Measure::Closeness => "Closeness",
            Measure::Eigenvector => "Eigenvector",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hh" | "h.h" => Ok(Measure::HH),
            "degree" => Ok(Measure::Degree),
            "betweenness" => Ok(Measure::Betweenness),
            "closeness" => Ok(Measure::Closeness),
            "eigenvector" => Ok(Measure::Eigenvector),
            other => Err(Error::InvalidConfig(format!("unknown measure '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScoreEntry {
    pub node: String,
    pub raw: f64,
    pub normalized: f64,
}

/// Raw and min-max normalized scores of one measure over the nodes of
/// `target_mode`, in graph node order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScoreTable {
    pub measure: Measure,
    pub target_mode: Mode,
    pub entries: Vec<ScoreEntry>,
}

impl ScoreTable {
    /// Builds a table from raw values and fills in the normalized column.
    pub fn from_raw(
        measure: Measure,
        target_mode: Mode,
        raw: impl IntoIterator<Item = (String, f64)>,
    ) -> Self {
        let (nodes, values): (Vec<String>, Vec<f64>) = raw.into_iter().unzip();
        let normalized = min_max_normalize(&values);
        let entries = nodes
            .into_iter()
            .zip(values)
            .zip(normalized)
            .map(|((node, raw), normalized)| ScoreEntry {
                node,
                raw,
                normalized,
            })
            .collect();
        ScoreTable {
            measure,
            target_mode,
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, node: &str) -> Option<&ScoreEntry> {
        self.entries.iter().find(|e| e.node == node)
    }

    pub fn raw(&self, node: &str) -> Option<f64> {
        self.get(node).map(|e| e.raw)
    }

    pub fn raw_values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.raw).collect()
    }

    pub fn normalized_values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.normalized).collect()
    }
}
