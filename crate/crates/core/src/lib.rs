//! Identify the nodes of one side of a bipartite network that create the
//! communities of the other side's one-mode projection.
//!
//! The pipeline is: build a [`BipartiteGraph`], [`project`] it onto one mode
//! (every projected edge remembers which opposite-mode nodes created it),
//! enumerate maximal cliques as communities with [`find_communities`], and
//! score the opposite-mode nodes with [`hh_scores`]. Each projected edge
//! hands out one unit of credit split evenly among its creators; a node's
//! score is the credit it collects inside each community, weighted by that
//! community's size and summed over communities.
//!
//! Scores can be compared against degree, betweenness, closeness and
//! eigenvector centrality, and validated by removing top-scoring nodes
//! ([`run_ablation`]) and classifying the resulting community changes.
//!
//! ```
//! use bipinfluence::{build_bipartite, find_communities, hh_scores, project, Mode};
//!
//! let g = build_bipartite([("1", "a"), ("2", "a"), ("3", "a"), ("2", "c"), ("3", "c")])?;
//! let p = project(&g, Mode::A);
//! let communities = find_communities(&p, 3)?;
//! let scores = hh_scores(&p, &communities)?;
//! assert_eq!(scores.table.raw("a"), Some(7.5));
//! assert_eq!(scores.table.raw("c"), Some(1.5));
//! # Ok::<(), bipinfluence::Error>(())
//! ```

pub mod ablation;
pub mod community;
pub mod error;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod report;
pub mod scoring;

pub use ablation::{
    classify_changes, remove_events, run_ablation, AblationConfig, AblationReport, AnomalyType,
    ChangeClassification,
};
pub use community::{community_edges, find_communities, Community, CommunitySet};
pub use error::{Error, Result};
pub use graph::{
    build_bipartite, project, BipartiteGraph, GraphBuilder, Mode, NodeId, ProjectedGraph,
};
pub use scoring::{
    compare_measures, event_effect, hh_scores, normalize, top_k, Direction, Measure, R2Matrix,
    ScoreTable,
};

/// Default minimum community size: bare edges are not communities.
pub const DEFAULT_MIN_SIZE: usize = 3;
/// Default share of nodes removed in an ablation.
pub const DEFAULT_FRACTION: f64 = 0.10;
