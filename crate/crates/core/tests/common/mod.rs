//! Independent oracles and random graph generators shared by the
//! integration tests. Nothing here calls into the code paths it checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bipinfluence::{BipartiteGraph, GraphBuilder, Mode, ProjectedGraph};
use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random bipartite graph with every node registered (isolated ones too).
pub fn random_bipartite(
    rng: &mut ChaCha8Rng,
    na: usize,
    nb: usize,
    density: f64,
) -> BipartiteGraph {
    let mut b = GraphBuilder::new();
    for i in 0..na {
        b.add_node(Mode::A, &format!("a{i}"));
    }
    for j in 0..nb {
        b.add_node(Mode::B, &format!("b{j}"));
    }
    let mut any = false;
    for i in 0..na {
        for j in 0..nb {
            if rng.gen_bool(density) {
                b.add_edge(&format!("a{i}"), &format!("b{j}"));
                any = true;
            }
        }
    }
    if !any {
        b.add_edge("a0", "b0");
    }
    b.build()
}

/// Random graph with `|A| + |B| <= max_nodes`, both sides non-empty.
pub fn random_small(rng: &mut ChaCha8Rng, max_nodes: usize) -> BipartiteGraph {
    let na = rng.gen_range(1..max_nodes);
    let nb = rng.gen_range(1..=max_nodes - na);
    let density = rng.gen_range(0.1..0.9);
    random_bipartite(rng, na, nb, density)
}

pub fn random_up_to(rng: &mut ChaCha8Rng, max_a: usize, max_b: usize) -> BipartiteGraph {
    let na = rng.gen_range(1..=max_a);
    let nb = rng.gen_range(1..=max_b);
    let density = rng.gen_range(0.05..0.9);
    random_bipartite(rng, na, nb, density)
}

/// Arbitrary simple graph on `n` nodes, encoded as a bipartite graph with
/// one event per edge so its projection is exactly that graph.
pub fn arbitrary_projection(rng: &mut ChaCha8Rng, n: usize, density: f64) -> ProjectedGraph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_node(Mode::A, &format!("v{i:02}"));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let e = format!("e{i}_{j}");
                b.add_edge(&format!("v{i:02}"), &e);
                b.add_edge(&format!("v{j:02}"), &e);
            }
        }
    }
    bipinfluence::project(&b.build(), Mode::A)
}

pub fn is_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Maximal cliques by testing every node subset.
pub fn brute_force_maximal_cliques(p: &ProjectedGraph, min_size: usize) -> BTreeSet<Vec<usize>> {
    let n = p.node_count();
    assert!(n <= 20, "powerset oracle is exponential");
    let adjacent = |x: usize, y: usize| p.provenance(x, y).is_some();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) < min_size {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| adjacent(x, y)));
        if !clique {
            continue;
        }
        let extendable = (0..n)
            .filter(|&v| mask & (1 << v) == 0)
            .any(|v| members.iter().all(|&m| adjacent(v, m)));
        if !extendable {
            out.insert(members);
        }
    }
    out
}

/// Brute-force projection: pairwise neighbor-set intersections.
pub fn brute_force_projection(g: &BipartiteGraph, onto: Mode) -> Vec<(usize, usize, Vec<usize>)> {
    let n = g.mode_len(onto);
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let nx: BTreeSet<usize> = g.neighbor_indices(onto, x).iter().copied().collect();
            let shared: Vec<usize> = g
                .neighbor_indices(onto, y)
                .iter()
                .copied()
                .filter(|s| nx.contains(s))
                .collect();
            if !shared.is_empty() {
                out.push((x, y, shared));
            }
        }
    }
    out
}

/// All-pairs hop distances by Floyd–Warshall; `None` when unreachable.
pub fn floyd_warshall(adj: &[Vec<usize>]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for &u in &adj[v] {
            d[v][u] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Number of shortest paths between every pair, by counting along the
/// distance matrix layer by layer.
fn path_counts(adj: &[Vec<usize>], dist: &[Vec<Option<usize>>]) -> Vec<Vec<u64>> {
    let n = adj.len();
    let mut sigma = vec![vec![0u64; n]; n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&v| dist[s][v].is_some()).collect();
        order.sort_by_key(|&v| dist[s][v]);
        sigma[s][s] = 1;
        for &v in &order {
            if v == s {
                continue;
            }
            let dv = dist[s][v].unwrap();
            sigma[s][v] = adj[v]
                .iter()
                .filter(|&&u| dist[s][u] == Some(dv - 1))
                .map(|&u| sigma[s][u])
                .sum();
        }
    }
    sigma
}

/// Betweenness from its definition: for every unordered pair {i, j} and
/// every other node x, the share of shortest i–j paths through x.
pub fn naive_betweenness(adj: &[Vec<usize>]) -> Vec<f64> {
    let n = adj.len();
    let dist = floyd_warshall(adj);
    let sigma = path_counts(adj, &dist);
    let mut out = vec![0.0; n];
    for i in 0..n {
        for j in i + 1..n {
            let Some(dij) = dist[i][j] else { continue };
            for x in 0..n {
                if x == i || x == j {
                    continue;
                }
                if let (Some(a), Some(b)) = (dist[i][x], dist[x][j]) {
                    if a + b == dij {
                        out[x] += (sigma[i][x] * sigma[x][j]) as f64 / sigma[i][j] as f64;
                    }
                }
            }
        }
    }
    out
}

pub fn naive_closeness(adj: &[Vec<usize>]) -> Vec<f64> {
    floyd_warshall(adj)
        .into_iter()
        .map(|row| {
            let total: usize = row.into_iter().flatten().sum();
            if total == 0 {
                0.0
            } else {
                1.0 / total as f64
            }
        })
        .collect()
}

/// Dominant eigenpair of the dense adjacency matrix: `(eigenvalues sorted
/// descending, |eigenvector| of the largest, L2-normalized)`.
pub fn dense_dominant_eigenvector(adj: &[Vec<usize>]) -> (Vec<f64>, Vec<f64>) {
    let n = adj.len();
    let m = DMatrix::from_fn(n, n, |i, j| if adj[i].contains(&j) { 1.0 } else { 0.0 });
    let eig = SymmetricEigen::new(m);
    let top = eig.eigenvalues.imax();
    let v = eig.eigenvectors.column(top);
    let norm = v.norm();
    let vector: Vec<f64> = v.iter().map(|x: &f64| (x / norm).abs()).collect();
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    (values, vector)
}
