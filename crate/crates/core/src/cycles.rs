//! Exhaustive enumeration of simple cycles.
//!
//! Each cycle is rooted at its smallest vertex. The search from a root only
//! walks through larger vertices and closes back to the root; of the two
//! traversal directions, only the one whose second vertex is smaller than its
//! last vertex is kept. Every cycle is therefore produced exactly once.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// A simple cycle in canonical rotation: smallest label first, then the
/// direction whose second element is the smaller neighbour of the first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<u32>,
}

impl Cycle {
    /// Canonicalise an arbitrary traversal of a cycle.
    pub fn new(sequence: Vec<u32>) -> Result<Cycle> {
        if sequence.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "{sequence:?} has fewer than 3 vertices"
            )));
        }
        let mut sorted = sequence.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("{sequence:?} repeats a vertex")));
        }
        Ok(Cycle {
            vertices: canonical(&sequence),
        })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as sorted label pairs, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let k = self.len();
        let mut e: Vec<(u32, u32)> = (0..k)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }

    pub fn contains(&self, label: u32) -> bool {
        self.vertices.contains(&label)
    }

    /// Every cyclically consecutive pair is an edge of `g`.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let k = self.len();
        (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Vertex set as an index bitset in `g`.
    pub fn mask_in(&self, g: &Graph) -> Result<u64> {
        self.vertices
            .iter()
            .try_fold(0u64, |acc, &l| Ok(acc | 1 << g.index_of(l)?))
    }

    /// All `2k` consecutive labellings: rotations forward, then rotations of
    /// the reversed sequence.
    pub fn labelings(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let k = self.len();
        (0..2 * k).map(move |t| {
            let (offset, reversed) = (t % k, t >= k);
            (0..k)
                .map(|i| {
                    let idx = if reversed { (offset + k - i) % k } else { (offset + i) % k };
                    self.vertices[idx]
                })
                .collect()
        })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn canonical(seq: &[u32]) -> Vec<u32> {
    let k = seq.len();
    let start = (0..k).min_by_key(|&i| seq[i]).expect("non-empty");
    let next = seq[(start + 1) % k];
    let prev = seq[(start + k - 1) % k];
    if next < prev {
        (0..k).map(|i| seq[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| seq[(start + k - i) % k]).collect()
    }
}

/// An unordered pair of vertex-disjoint 6-cycles. The cycle containing the
/// smaller label is stored first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DisjointPair {
    first: Cycle,
    second: Cycle,
}

impl DisjointPair {
    pub fn new(a: Cycle, b: Cycle) -> Result<DisjointPair> {
        if a.len() != 6 || b.len() != 6 {
            return Err(Error::InvalidPair(format!(
                "cycles have lengths {} and {}, expected 6",
                a.len(),
                b.len()
            )));
        }
        if a.vertices().iter().any(|v| b.contains(*v)) {
            return Err(Error::InvalidPair(format!("{a} and {b} share a vertex")));
        }
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        Ok(DisjointPair { first, second })
    }

    pub fn first(&self) -> &Cycle {
        &self.first
    }

    pub fn second(&self) -> &Cycle {
        &self.second
    }
}

impl fmt::Display for DisjointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.first, self.second)
    }
}

/// Depth-first search from `root` over vertices above it. `on_cycle` receives
/// the index path of every closed cycle, each exactly once.
fn search_from_root(g: &Graph, root: usize, max_len: usize, on_cycle: &mut dyn FnMut(&[usize])) {
    let above = g.vertex_mask() & !((2u64 << root) - 1);
    let mut path = vec![root];
    extend(g, root, above, 1u64 << root, max_len, &mut path, on_cycle);
}

fn extend(
    g: &Graph,
    root: usize,
    above: u64,
    visited: u64,
    max_len: usize,
    path: &mut Vec<usize>,
    on_cycle: &mut dyn FnMut(&[usize]),
) {
    let cur = *path.last().expect("path starts at root");
    let len = path.len();
    if len >= 3 && g.has_edge_idx(cur, root) && path[1] < cur {
        on_cycle(path);
    }
    if len == max_len {
        return;
    }
    for next in bits(g.row(cur) & above & !visited) {
        path.push(next);
        extend(g, root, above, visited | 1 << next, max_len, path, on_cycle);
        path.pop();
    }
}

fn check_length(g: &Graph, k: usize) -> Result<()> {
    if k < 3 || k > g.n() {
        return Err(Error::LengthOutOfRange { k, n: g.n() });
    }
    Ok(())
}

/// Every simple `k`-cycle of `g`, canonical and sorted.
pub fn enumerate_cycles(g: &Graph, k: usize) -> Result<Vec<Cycle>> {
    check_length(g, k)?;
    let mut out: Vec<Cycle> = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|root| {
            let mut found = Vec::new();
            search_from_root(g, root, k, &mut |path| {
                if path.len() == k {
                    found.push(Cycle {
                        vertices: path.iter().map(|&i| g.label(i)).collect(),
                    });
                }
            });
            found
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Number of simple cycles of every length, in one traversal. Lengths with
/// no cycles are omitted.
pub fn cycle_census(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.n();
    let per_root: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut counts = vec![0u64; n + 1];
            search_from_root(g, root, n, &mut |path| counts[path.len()] += 1);
            counts
        })
        .collect();
    let mut census = BTreeMap::new();
    for k in 3..=n {
        let c: u64 = per_root.iter().map(|r| r[k]).sum();
        if c > 0 {
            census.insert(k, c);
        }
    }
    census
}

/// Length of a shortest cycle, `None` for forests. Computed by breadth-first
/// search from every vertex, independently of the enumerator.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.n() {
        let dist = g.bfs_distances(s);
        let mut parent = vec![usize::MAX; g.n()];
        // recover BFS tree parents: any neighbour one layer closer
        for v in 0..g.n() {
            if let Some(d) = dist[v].filter(|&d| d > 0) {
                parent[v] = bits(g.row(v))
                    .find(|&u| dist[u] == Some(d - 1))
                    .expect("BFS layer has a predecessor");
            }
        }
        for (u, v) in g.edges() {
            if parent[u] == v || parent[v] == u {
                continue;
            }
            if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                let len = du + dv + 1;
                if best.is_none_or(|b| len < b) {
                    best = Some(len);
                }
            }
        }
    }
    best
}

/// All unordered pairs of vertex-disjoint 6-cycles, sorted.
pub fn disjoint_six_cycle_pairs(g: &Graph) -> Vec<DisjointPair> {
    if g.n() < 12 {
        return Vec::new();
    }
    let sixes = enumerate_cycles(g, 6).expect("6 <= n");
    let masks: Vec<u64> = sixes
        .iter()
        .map(|c| c.mask_in(g).expect("enumerated cycles use graph labels"))
        .collect();
    let mut out = Vec::new();
    for i in 0..sixes.len() {
        for j in i + 1..sixes.len() {
            if masks[i] & masks[j] == 0 {
                out.push(DisjointPair {
                    first: sixes[i].clone(),
                    second: sixes[j].clone(),
                });
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, heawood, path_graph};

    #[test]
    fn canonical_form() {
        let c = Cycle::new(vec![5, 3, 1, 4]).unwrap();
        assert_eq!(c.vertices(), &[1, 3, 5, 4]);
        let again = Cycle::new(c.vertices().to_vec()).unwrap();
        assert_eq!(again, c);
        assert_eq!(Cycle::new(vec![1, 4, 5, 3]).unwrap(), c);
        assert!(Cycle::new(vec![1, 2]).is_err());
        assert!(Cycle::new(vec![1, 2, 1]).is_err());
    }

    #[test]
    fn labelings_cover_both_directions() {
        let c = Cycle::new(vec![1, 2, 3, 4]).unwrap();
        let all: Vec<Vec<u32>> = c.labelings().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], vec![1, 2, 3, 4]);
        assert_eq!(all[4], vec![1, 4, 3, 2]);
        assert!(all.iter().all(|l| Cycle::new(l.clone()).unwrap() == c));
    }

    #[test]
    fn heawood_counts() {
        let g = heawood();
        assert_eq!(enumerate_cycles(&g, 6).unwrap().len(), 28);
        assert_eq!(enumerate_cycles(&g, 14).unwrap().len(), 24);
        let census = cycle_census(&g);
        assert_eq!(census[&6], 28);
        assert_eq!(census[&8], 21);
        assert_eq!(census[&12], 56);
        assert_eq!(census[&14], 24);
        assert!(census.keys().all(|k| k % 2 == 0));
    }

    #[test]
    fn small_graph_counts() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(enumerate_cycles(&k4, 3).unwrap().len(), 4);
        assert_eq!(enumerate_cycles(&k4, 4).unwrap().len(), 3);
        assert!(enumerate_cycles(&k4, 5).is_err());
        assert!(enumerate_cycles(&k4, 2).is_err());
        assert_eq!(cycle_census(&complete_graph(3).unwrap()), BTreeMap::from([(3, 1)]));
        assert_eq!(cycle_census(&cycle_graph(6).unwrap()), BTreeMap::from([(6, 1)]));
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&heawood()), Some(6));
        assert_eq!(girth(&complete_graph(3).unwrap()), Some(3));
        assert_eq!(girth(&path_graph(5).unwrap()), None);
        assert_eq!(girth(&crate::graph::petersen()), Some(5));
    }

    #[test]
    fn disjoint_pairs() {
        assert_eq!(disjoint_six_cycle_pairs(&heawood()).len(), 42);
        assert!(disjoint_six_cycle_pairs(&complete_graph(4).unwrap()).is_empty());
        let c6 = cycle_graph(6).unwrap();
        let two = c6.disjoint_union(&c6).unwrap();
        let pairs = disjoint_six_cycle_pairs(&two);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].first().vertices(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(pairs[0].second().vertices(), &[7, 8, 9, 10, 11, 12]);
    }

    #[test]
    fn pair_constructor_orders_and_validates() {
        let a = Cycle::new(vec![7, 8, 9, 10, 11, 12]).unwrap();
        let b = Cycle::new(vec![1, 2, 3, 4, 5, 6]).unwrap();
        let p = DisjointPair::new(a.clone(), b.clone()).unwrap();
        assert_eq!(p.first(), &b);
        let overlapping = Cycle::new(vec![6, 7, 8, 9, 10, 11]).unwrap();
        assert!(DisjointPair::new(a, overlapping).is_err());
        let tri = Cycle::new(vec![1, 2, 3]).unwrap();
        assert!(DisjointPair::new(tri, b).is_err());
    }
}
