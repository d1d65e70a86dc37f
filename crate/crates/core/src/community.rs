//! Communities of a one-mode projection, defined as maximal cliques.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::ProjectedGraph;

/// A maximal clique of a projection. Members are node indices of the
/// projection in ascending order; `labels` holds the same members sorted
/// by label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Community {
    members: Vec<usize>,
    labels: Vec<String>,
}

impl Community {
    fn new(mut members: Vec<usize>, p: &ProjectedGraph) -> Self {
        members.sort_unstable();
        let mut labels: Vec<String> = members.iter().map(|&m| p.nodes()[m].clone()).collect();
        labels.sort();
        Community { members, labels }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Node count of the community.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.members.binary_search(&node).is_ok()
    }

    /// Number of members shared with `other`.
    pub fn overlap(&self, other: &Community) -> usize {
        intersection_len(&self.members, &other.members)
    }

    /// Every unordered member pair `(x, y)` with `x < y`, checked against
    /// the projection.
    pub fn edges(&self, p: &ProjectedGraph) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::with_capacity(self.size() * self.size().saturating_sub(1) / 2);
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                if !p.is_adjacent(x, y) {
                    return Err(Error::Invariant(format!(
                        "community pair {}-{} is not a projected edge",
                        p.nodes()[x],
                        p.nodes()[y]
                    )));
                }
                out.push((x, y));
            }
        }
        Ok(out)
    }
}

/// All pairs of a community's members; an error if any pair is missing from `p`.
pub fn community_edges(c: &Community, p: &ProjectedGraph) -> Result<Vec<(usize, usize)>> {
    c.edges(p)
}

fn cmp_communities(a: &Community, b: &Community) -> Ordering {
    b.size()
        .cmp(&a.size())
        .then_with(|| a.labels.cmp(&b.labels))
}

/// Maximal cliques of a projection with at least `min_size` members,
/// ordered by descending size and then by member labels.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CommunitySet {
    communities: Vec<Community>,
    min_size: usize,
}

impl CommunitySet {
    pub fn communities(&self) -> &[Community] {
        &self.communities
    }

    pub fn len(&self) -> usize {
        self.communities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    pub fn min_size(&self) -> usize {
        self.min_size
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Community> {
        self.communities.iter()
    }
}

impl<'a> IntoIterator for &'a CommunitySet {
    type Item = &'a Community;
    type IntoIter = std::slice::Iter<'a, Community>;

    fn into_iter(self) -> Self::IntoIter {
        self.communities.iter()
    }
}

/// Enumerates the maximal cliques of `p` with at least `min_size` nodes.
///
/// Bron–Kerbosch with Tomita pivoting inside a degeneracy-ordered outer loop.
pub fn find_communities(p: &ProjectedGraph, min_size: usize) -> Result<CommunitySet> {
    if min_size < 2 {
        return Err(Error::InvalidConfig(format!(
            "min_size must be at least 2, got {min_size}"
        )));
    }
    let adj = p.adjacency();
    let order = degeneracy_order(adj);
    let mut position = vec![0; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut found = Vec::new();
    let mut enumerator = Enumerator {
        adj,
        min_size,
        out: &mut found,
    };
    for &v in &order {
        if adj[v].len() + 1 < min_size {
            continue;
        }
        let (later, earlier): (Vec<usize>, Vec<usize>) =
            adj[v].iter().partition(|&&u| position[u] > position[v]);
        let mut r = vec![v];
        enumerator.expand(&mut r, later, earlier);
    }

    let mut communities: Vec<Community> = found.into_iter().map(|m| Community::new(m, p)).collect();
    communities.sort_by(cmp_communities);
    Ok(CommunitySet {
        communities,
        min_size,
    })
}

struct Enumerator<'a> {
    adj: &'a [Vec<usize>],
    min_size: usize,
    out: &'a mut Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    // `p` and `x` are kept sorted.
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>) {
        if p.is_empty() {
            if x.is_empty() && r.len() >= self.min_size {
                self.out.push(r.clone());
            }
            return;
        }
        // No extension of r can reach min_size.
        if r.len() + p.len() < self.min_size {
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| (intersection_len(&p, &self.adj[u]), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|v| self.adj[pivot].binary_search(v).is_err())
            .collect();
        for v in candidates {
            let nv = &self.adj[v];
            r.push(v);
            self.expand(r, intersect(&p, nv), intersect(&x, nv));
            r.pop();
            if let Ok(i) = p.binary_search(&v) {
                p.remove(i);
            }
            if let Err(i) = x.binary_search(&v) {
                x.insert(i, v);
            }
        }
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Smallest-last vertex ordering via bucket queue; ties broken by index.
fn degeneracy_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> =
        vec![Default::default(); max_degree + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut lowest = 0;
    for _ in 0..n {
        while buckets[lowest].is_empty() {
            lowest += 1;
        }
        let v = buckets[lowest].pop_first().expect("bucket is non-empty");
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                buckets[degree[u]].remove(&u);
                degree[u] -= 1;
                buckets[degree[u]].insert(u);
                lowest = lowest.min(degree[u]);
            }
        }
    }
    order
}
