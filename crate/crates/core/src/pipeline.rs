//! End-to-end helpers shared by the CLI and the C bindings.

use crate::ablation::{run_ablation, AblationConfig, AblationReport};
use crate::community::{find_communities, CommunitySet};
use crate::error::Result;
use crate::graph::{project, BipartiteGraph, Mode, ProjectedGraph};
use crate::scoring::{
    betweenness_centrality, closeness_centrality, compare_measures, degree_centrality,
    eigenvector_centrality, hh_scores, Measure, R2Matrix, ScoreTable,
};

/// A projection and its communities.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub projection: ProjectedGraph,
    pub communities: CommunitySet,
}

impl Analysis {
    pub fn new(g: &BipartiteGraph, onto: Mode, min_size: usize) -> Result<Self> {
        let projection = project(g, onto);
        let communities = find_communities(&projection, min_size)?;
        Ok(Analysis {
            projection,
            communities,
        })
    }
}

/// Scores the mode opposite `onto` with `measure`. `min_size` only
/// matters for H.H.
pub fn score(
    g: &BipartiteGraph,
    onto: Mode,
    measure: Measure,
    min_size: usize,
) -> Result<ScoreTable> {
    let target = onto.opposite();
    match measure {
        Measure::HH => {
            let a = Analysis::new(g, onto, min_size)?;
            Ok(hh_scores(&a.projection, &a.communities)?.table)
        }
        Measure::Degree => Ok(degree_centrality(g, target)),
        Measure::Betweenness => Ok(betweenness_centrality(g, target)),
        Measure::Closeness => Ok(closeness_centrality(g, target)),
        Measure::Eigenvector => eigenvector_centrality(g, target),
    }
}

pub fn score_many(
    g: &BipartiteGraph,
    onto: Mode,
    measures: &[Measure],
    min_size: usize,
) -> Result<Vec<ScoreTable>> {
    measures
        .iter()
        .map(|&m| score(g, onto, m, min_size))
        .collect()
}

/// R² between every pair of the five measures.
pub fn compare_all(g: &BipartiteGraph, onto: Mode, min_size: usize) -> Result<R2Matrix> {
    compare_measures(&score_many(g, onto, &Measure::ALL, min_size)?)
}

/// Runs the same ablation once per measure, at equal removal budget.
pub fn ablate_many(
    g: &BipartiteGraph,
    measures: &[Measure],
    config: &AblationConfig,
) -> Result<Vec<AblationReport>> {
    measures
        .iter()
        .map(|&m| {
            let table = score(g, config.onto, m, config.min_size)?;
            run_ablation(g, &table, config)
        })
        .collect()
}
