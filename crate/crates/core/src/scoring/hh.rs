//! The H.H score: how much each opposite-mode node contributes to the
//! communities of a projection.
//!
//! Every community edge carries one unit of credit, split evenly across the
//! nodes in its provenance. A node's effect on a community is the credit it
//! collects over that community's edges; its score is the sum of those
//! effects, each weighted by the community's size.

use serde::Serialize;

use super::{Measure, ScoreTable};
use crate::community::{Community, CommunitySet};
use crate::error::{Error, Result};
use crate::graph::ProjectedGraph;

/// Share of `c`'s edges credited to `event`: the sum of `1 / w` over the
/// community edges whose provenance contains `event`, where `w` is the
/// provenance size.
pub fn event_effect(event: &str, c: &Community, p: &ProjectedGraph) -> Result<f64> {
    let source = p.source_index(event).ok_or_else(|| Error::UnknownNode {
        label: event.to_owned(),
        mode: p.onto().opposite(),
    })?;
    let mut effect = 0.0;
    for (x, y) in c.edges(p)? {
        let prov = p.provenance(x, y).expect("community edges exist");
        if prov.binary_search(&source).is_ok() {
            effect += 1.0 / prov.len() as f64;
        }
    }
    Ok(effect)
}

/// Per-community effects of one node and its resulting score.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EffectBreakdown {
    pub event: String,
    /// `(community index, effect)` for every community with a non-zero effect.
    pub per_community: Vec<(usize, f64)>,
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HhScores {
    pub table: ScoreTable,
    pub breakdowns: Vec<EffectBreakdown>,
}

/// H.H score of every opposite-mode node of `p` over the communities `cs`.
/// Nodes that touch no community edge score 0.
pub fn hh_scores(p: &ProjectedGraph, cs: &CommunitySet) -> Result<HhScores> {
    let n_sources = p.sources().len();
    let mut per_community: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n_sources];
    let mut effect = vec![0.0f64; n_sources];
    let mut touched = Vec::new();

    for (j, c) in cs.iter().enumerate() {
        for (x, y) in c.edges(p)? {
            let prov = p.provenance(x, y).expect("community edges exist");
            let share = 1.0 / prov.len() as f64;
            for &s in prov {
                if effect[s] == 0.0 {
                    touched.push(s);
                }
                effect[s] += share;
            }
        }
        touched.sort_unstable();
        for s in touched.drain(..) {
            per_community[s].push((j, effect[s]));
            effect[s] = 0.0;
        }
    }

    let sizes: Vec<f64> = cs.iter().map(|c| c.size() as f64).collect();
    let breakdowns: Vec<EffectBreakdown> = p
        .sources()
        .iter()
        .zip(per_community)
        .map(|(event, per_community)| {
            let total = per_community.iter().map(|&(j, e)| sizes[j] * e).sum();
            EffectBreakdown {
                event: event.clone(),
                per_community,
                total,
            }
        })
        .collect();
    let table = ScoreTable::from_raw(
        Measure::HH,
        p.onto().opposite(),
        breakdowns.iter().map(|b| (b.event.clone(), b.total)),
    );
    Ok(HhScores { table, breakdowns })
}
