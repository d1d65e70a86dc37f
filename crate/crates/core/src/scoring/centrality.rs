//! Classical centralities, computed on the full bipartite graph and
//! reported for the nodes of one mode.
//!
//! The adjacency-level functions take an undirected adjacency list and
//! return one value per node.

use std::collections::VecDeque;

use super::{Measure, ScoreTable};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Mode};

pub const EIGENVECTOR_TOLERANCE: f64 = 1e-10;
pub const EIGENVECTOR_MAX_ITERATIONS: usize = 1000;

fn table_for(g: &BipartiteGraph, measure: Measure, mode: Mode, all: &[f64]) -> ScoreTable {
    let offset = g.unified_offset(mode);
    ScoreTable::from_raw(
        measure,
        mode,
        g.labels(mode)
            .iter()
            .enumerate()
            .map(|(i, label)| (label.clone(), all[offset + i])),
    )
}

/// Bipartite degree of each node of `target_mode`.
pub fn degree_centrality(g: &BipartiteGraph, target_mode: Mode) -> ScoreTable {
    ScoreTable::from_raw(
        Measure::Degree,
        target_mode,
        g.labels(target_mode)
            .iter()
            .enumerate()
            .map(|(i, label)| (label.clone(), g.degree(target_mode, i) as f64)),
    )
}

pub fn betweenness_centrality(g: &BipartiteGraph, target_mode: Mode) -> ScoreTable {
    let all = brandes_betweenness(&g.unified_adjacency());
    table_for(g, Measure::Betweenness, target_mode, &all)
}

pub fn closeness_centrality(g: &BipartiteGraph, target_mode: Mode) -> ScoreTable {
    let all = closeness(&g.unified_adjacency());
    table_for(g, Measure::Closeness, target_mode, &all)
}

pub fn eigenvector_centrality(g: &BipartiteGraph, target_mode: Mode) -> Result<ScoreTable> {
    let all = power_iteration_eigenvector(&g.unified_adjacency())?;
    Ok(table_for(g, Measure::Eigenvector, target_mode, &all))
}

/// Unnormalized betweenness over unordered pairs, endpoints excluded.
/// Brandes' accumulation from every source; pairs are seen twice, so the
/// totals are halved.
pub fn brandes_betweenness(adj: &[Vec<usize>]) -> Vec<f64> {
    let n = adj.len();
    let mut centrality = vec![0.0; n];
    let mut stack = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::new();

    for s in 0..n {
        for v in 0..n {
            preds[v].clear();
            sigma[v] = 0.0;
            dist[v] = usize::MAX;
            delta[v] = 0.0;
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                centrality[w] += delta[w];
            }
        }
    }
    centrality.iter_mut().for_each(|c| *c /= 2.0);
    centrality
}

/// Hop distances from `source`; `None` for unreachable nodes.
pub fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued nodes have a distance");
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Reciprocal of the summed distance to every reachable node. Nodes that
/// reach nothing score 0.
pub fn closeness(adj: &[Vec<usize>]) -> Vec<f64> {
    (0..adj.len())
        .map(|v| {
            let total: usize = bfs_distances(adj, v).into_iter().flatten().sum();
            if total == 0 {
                0.0
            } else {
                1.0 / total as f64
            }
        })
        .collect()
}

/// Dominant eigenvector of the adjacency matrix, L2-normalized and
/// non-negative.
///
/// Iterates on `A + I`: bipartite spectra are symmetric, so plain power
/// iteration on `A` oscillates between the `λ` and `-λ` eigenvectors. The
/// shift leaves the eigenvectors unchanged.
pub fn power_iteration_eigenvector(adj: &[Vec<usize>]) -> Result<Vec<f64>> {
    let n = adj.len();
    if adj.iter().all(Vec::is_empty) {
        return Err(Error::EigenvectorUndefined);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..EIGENVECTOR_MAX_ITERATIONS {
        for v in 0..n {
            next[v] = x[v] + adj[v].iter().map(|&u| x[u]).sum::<f64>();
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        next.iter_mut().for_each(|v| *v /= norm);
        let change = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        std::mem::swap(&mut x, &mut next);
        if change < EIGENVECTOR_TOLERANCE {
            break;
        }
    }
    Ok(x.into_iter().map(f64::abs).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_bipartite;

    fn path_abc() -> Vec<Vec<usize>> {
        vec![vec![1], vec![0, 2], vec![1]]
    }

    #[test]
    fn betweenness_path_and_star() {
        assert_eq!(brandes_betweenness(&path_abc()), vec![0.0, 1.0, 0.0]);
        let g = build_bipartite([("c", "1"), ("c", "2"), ("c", "3"), ("c", "4")]).unwrap();
        let t = betweenness_centrality(&g, Mode::A);
        assert_eq!(t.raw("c"), Some(6.0));
        assert_eq!(betweenness_centrality(&g, Mode::B).raw("1"), Some(0.0));
    }

    #[test]
    fn closeness_path() {
        let c = closeness(&path_abc());
        assert_eq!(c[1], 0.5);
        assert!((c[0] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(closeness(&[vec![], vec![]]), vec![0.0, 0.0]);
    }

    #[test]
    fn degree_triangle_pair() {
        let g =
            build_bipartite([("1", "a"), ("2", "a"), ("3", "a"), ("2", "c"), ("3", "c")]).unwrap();
        let t = degree_centrality(&g, Mode::B);
        assert_eq!(t.raw("a"), Some(3.0));
        assert_eq!(t.raw("c"), Some(2.0));
    }

    #[test]
    fn eigenvector_symmetric_cases() {
        let k22 = build_bipartite([("x", "1"), ("x", "2"), ("y", "1"), ("y", "2")]).unwrap();
        for v in power_iteration_eigenvector(&k22.unified_adjacency()).unwrap() {
            assert!((v - 0.5).abs() < 1e-9);
        }
        let single = build_bipartite([("x", "e")]).unwrap();
        let t = eigenvector_centrality(&single, Mode::B).unwrap();
        assert!((t.raw("e").unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn eigenvector_without_edges_is_an_error() {
        assert!(matches!(
            power_iteration_eigenvector(&[vec![], vec![]]),
            Err(Error::EigenvectorUndefined)
        ));
    }
}
