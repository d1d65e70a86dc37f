//! Node-removal experiments: delete the highest (or lowest) scoring nodes,
//! recompute the communities and classify how each one changed.
//!
//! Before and after communities are linked when they share at least two
//! members, i.e. at least one projected edge. Identical communities are
//! paired first as unchanged. Remaining links are taken greedily by
//! descending overlap (ties by member labels), and a link is dropped if
//! both of its ends are already linked, so every linked group is one-to-one,
//! one-to-many (split) or many-to-one (merge).

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::community::{find_communities, Community, CommunitySet};
use crate::error::{Error, Result};
use crate::graph::{project, BipartiteGraph, Mode};
use crate::scoring::{top_k, Direction, Measure, ScoreTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AnomalyType {
    Born,
    Vanish,
    Grow,
    Merge,
    Split,
    Shrink,
    Unchanged,
}

impl AnomalyType {
    pub const ALL: [AnomalyType; 7] = [
        AnomalyType::Born,
        AnomalyType::Vanish,
        AnomalyType::Grow,
        AnomalyType::Merge,
        AnomalyType::Split,
        AnomalyType::Shrink,
        AnomalyType::Unchanged,
    ];
}

/// Labels for every before- and after-community, by position in their sets.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChangeClassification {
    pub before: Vec<AnomalyType>,
    pub after: Vec<AnomalyType>,
    /// Before-side labels plus one `Born` per new after-community.
    pub counts: BTreeMap<AnomalyType, usize>,
    /// Fraction of before-communities whose label is not `Unchanged`.
    pub change_rate: f64,
}

pub fn classify_changes(before: &CommunitySet, after: &CommunitySet) -> ChangeClassification {
    let bs = before.communities();
    let as_ = after.communities();
    let mut before_labels: Vec<Option<AnomalyType>> = vec![None; bs.len()];
    let mut after_labels: Vec<Option<AnomalyType>> = vec![None; as_.len()];

    let after_index: BTreeMap<&[usize], usize> = as_
        .iter()
        .enumerate()
        .map(|(j, c)| (c.members(), j))
        .collect();
    for (i, b) in bs.iter().enumerate() {
        if let Some(&j) = after_index.get(b.members()) {
            before_labels[i] = Some(AnomalyType::Unchanged);
            after_labels[j] = Some(AnomalyType::Unchanged);
        }
    }

    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for (i, b) in bs
        .iter()
        .enumerate()
        .filter(|(i, _)| before_labels[*i].is_none())
    {
        for (j, a) in as_
            .iter()
            .enumerate()
            .filter(|(j, _)| after_labels[*j].is_none())
        {
            let overlap = b.overlap(a);
            if overlap >= 2 {
                candidates.push((overlap, i, j));
            }
        }
    }
    candidates.sort_by(|x, y| {
        y.0.cmp(&x.0)
            .then_with(|| bs[x.1].labels().cmp(bs[y.1].labels()))
            .then_with(|| as_[x.2].labels().cmp(as_[y.2].labels()))
    });

    let mut links_of_before: Vec<Vec<usize>> = vec![Vec::new(); bs.len()];
    let mut links_of_after: Vec<Vec<usize>> = vec![Vec::new(); as_.len()];
    for (_, i, j) in candidates {
        if !links_of_before[i].is_empty() && !links_of_after[j].is_empty() {
            continue;
        }
        links_of_before[i].push(j);
        links_of_after[j].push(i);
    }

    for i in 0..bs.len() {
        if before_labels[i].is_some() {
            continue;
        }
        let links = &links_of_before[i];
        let label = match links.as_slice() {
            [] => AnomalyType::Vanish,
            [j] if links_of_after[*j].len() > 1 => AnomalyType::Merge,
            [j] => one_to_one(&bs[i], &as_[*j]),
            _ => AnomalyType::Split,
        };
        before_labels[i] = Some(label);
    }
    for j in 0..as_.len() {
        if after_labels[j].is_some() {
            continue;
        }
        let links = &links_of_after[j];
        let label = match links.as_slice() {
            [] => AnomalyType::Born,
            [i] => before_labels[*i].expect("before side labelled"),
            _ => AnomalyType::Merge,
        };
        after_labels[j] = Some(label);
    }

    let before: Vec<AnomalyType> = before_labels.into_iter().map(Option::unwrap).collect();
    let after: Vec<AnomalyType> = after_labels.into_iter().map(Option::unwrap).collect();
    let mut counts: BTreeMap<AnomalyType, usize> =
        AnomalyType::ALL.iter().map(|&t| (t, 0)).collect();
    for &t in &before {
        *counts.get_mut(&t).unwrap() += 1;
    }
    let born = after.iter().filter(|&&t| t == AnomalyType::Born).count();
    *counts.get_mut(&AnomalyType::Born).unwrap() += born;
    let changed = before
        .iter()
        .filter(|&&t| t != AnomalyType::Unchanged)
        .count();
    let change_rate = if before.is_empty() {
        0.0
    } else {
        changed as f64 / before.len() as f64
    };
    ChangeClassification {
        before,
        after,
        counts,
        change_rate,
    }
}

fn one_to_one(before: &Community, after: &Community) -> AnomalyType {
    if after.size() > before.size() {
        AnomalyType::Grow
    } else {
        // Smaller, or same size with different members: it lost originals.
        AnomalyType::Shrink
    }
}

/// Removes the named nodes of `mode` and their edges. Nodes of the other
/// mode are kept, isolated if need be.
pub fn remove_events(g: &BipartiteGraph, mode: Mode, victims: &[String]) -> Result<BipartiteGraph> {
    let indices = victims
        .iter()
        .map(|v| {
            g.labels(mode)
                .get_index_of(v.as_str())
                .ok_or_else(|| Error::UnknownNode {
                    label: v.clone(),
                    mode,
                })
        })
        .collect::<Result<HashSet<usize>>>()?;
    Ok(g.without_nodes(mode, &indices))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AblationConfig {
    /// Mode the communities live in; victims come from the opposite mode.
    pub onto: Mode,
    pub fraction: f64,
    pub direction: Direction,
    pub min_size: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AblationReport {
    pub measure: Measure,
    pub config: AblationConfig,
    pub removed: Vec<String>,
    pub before: CommunitySet,
    pub after: CommunitySet,
    pub classification: ChangeClassification,
}

impl AblationReport {
    pub fn change_rate(&self) -> f64 {
        self.classification.change_rate
    }

    pub fn count(&self, t: AnomalyType) -> usize {
        self.classification.counts.get(&t).copied().unwrap_or(0)
    }

    /// Before-communities that no longer exist in any form.
    pub fn destroyed(&self) -> usize {
        self.count(AnomalyType::Vanish)
    }
}

/// Removes the nodes selected from `measure` and compares communities of
/// the projection onto `config.onto` before and after.
pub fn run_ablation(
    g: &BipartiteGraph,
    measure: &ScoreTable,
    config: &AblationConfig,
) -> Result<AblationReport> {
    let victim_mode = config.onto.opposite();
    if measure.target_mode != victim_mode {
        return Err(Error::InvalidConfig(format!(
            "{} scores mode {} but removal targets mode {victim_mode}",
            measure.measure, measure.target_mode
        )));
    }
    let removed = top_k(measure, config.fraction, config.direction)?;
    let pruned = remove_events(g, victim_mode, &removed)?;
    let before = find_communities(&project(g, config.onto), config.min_size)?;
    let after = find_communities(&project(&pruned, config.onto), config.min_size)?;
    let classification = classify_changes(&before, &after);
    Ok(AblationReport {
        measure: measure.measure,
        config: *config,
        removed,
        before,
        after,
        classification,
    })
}
