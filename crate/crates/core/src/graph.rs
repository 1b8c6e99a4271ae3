//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one adjacency row stored as a `u64` bitset. Vertices are
//! addressed internally by 0-based index and externally by a positive integer
//! label. Labels are kept strictly increasing with the index, so ordering by
//! label and ordering by index always agree.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of a word, lowest first.
#[inline]
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<u32>,
}

/// Breadth-first layering around a source vertex. `classes[0]` is D1, the
/// neighbours of the source; `classes[i]` holds the vertices at distance `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceClassification {
    pub source: u32,
    pub classes: Vec<Vec<u32>>,
}

impl DistanceClassification {
    /// The class at distance `d` (1-based), if non-empty.
    pub fn at(&self, d: usize) -> Option<&[u32]> {
        d.checked_sub(1)
            .and_then(|i| self.classes.get(i))
            .map(Vec::as_slice)
    }

    pub fn eccentricity(&self) -> usize {
        self.classes.len()
    }
}

impl Graph {
    /// Edgeless graph on vertices labelled `1..=n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: (1..=n as u32).collect(),
        })
    }

    /// Edgeless graph on the given labels, which are sorted and must be unique.
    pub fn with_labels(labels: impl IntoIterator<Item = u32>) -> Result<Graph> {
        let mut labels: Vec<u32> = labels.into_iter().collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        if labels.first() == Some(&0) {
            return Err(Error::UnknownVertex(0));
        }
        Ok(Graph {
            adj: vec![0; labels.len()],
            labels,
        })
    }

    /// Graph on `1..=n` with the given label pairs as edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Parse the line-oriented edge-list format: one `u v` pair per line,
    /// `#` starts a comment line, blank lines are skipped.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let line_no = lineno + 1;
            let bad = || Error::BadEdgeLine {
                line: line_no,
                found: line.to_string(),
            };
            let mut tokens = line.split_whitespace();
            let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(bad()),
            };
            let u: u32 = a.parse().map_err(|_| bad())?;
            let v: u32 = b.parse().map_err(|_| bad())?;
            if u == 0 || v == 0 {
                return Err(bad());
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: line_no,
                    label: u,
                });
            }
            edges.push((u, v));
        }
        let labels: BTreeSet<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let mut g = Graph::with_labels(labels)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.labeled_edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz rendering, one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            if self.adj[i] == 0 {
                let _ = writeln!(out, "  {l};");
            }
        }
        for (u, v) in self.labeled_edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> u32 {
        self.labels[index]
    }

    pub fn index_of(&self, label: u32) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownVertex(label))
    }

    /// Bitset of all vertex indices.
    pub fn vertex_mask(&self) -> u64 {
        match self.n() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Adjacency row of an index, as a bitset of indices.
    pub fn row(&self, index: usize) -> u64 {
        self.adj[index]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Ok(i), Ok(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn degree(&self, label: u32) -> Result<usize> {
        Ok(self.degree_idx(self.index_of(label)?))
    }

    pub fn neighbors(&self, label: u32) -> Result<Vec<u32>> {
        let i = self.index_of(label)?;
        Ok(bits(self.adj[i]).map(|j| self.labels[j]).collect())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.degree_idx(i)).collect()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n() {
            for j in bits(self.adj[i] >> i >> 1) {
                out.push((i, i + 1 + j));
            }
        }
        out
    }

    pub fn labeled_edges(&self) -> Vec<(u32, u32)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i], self.labels[j]))
            .collect()
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        if i == j {
            return Err(Error::SelfLoop { line: 0, label: u });
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
        Ok(())
    }

    /// Append a new isolated vertex with the given label, which must exceed
    /// every existing label. Returns its index.
    pub(crate) fn push_vertex(&mut self, label: u32) -> Result<usize> {
        if self.n() == MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES + 1));
        }
        if self.labels.last().is_some_and(|&l| l >= label) {
            return Err(Error::DuplicateLabel(label));
        }
        self.labels.push(label);
        self.adj.push(0);
        Ok(self.n() - 1)
    }

    /// Length of a shortest path between two labelled vertices, `None` when
    /// they lie in different components.
    pub fn distance(&self, u: u32, v: u32) -> Result<Option<usize>> {
        let (s, t) = (self.index_of(u)?, self.index_of(v)?);
        let dist = self.bfs_distances(s);
        Ok(dist[t])
    }

    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for y in bits(self.adj[x]) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance_classes(&self, source: u32) -> Result<DistanceClassification> {
        let s = self.index_of(source)?;
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut seen = 1u64 << s;
        let mut frontier = 1u64 << s;
        loop {
            let next = bits(frontier).fold(0u64, |acc, x| acc | self.adj[x]) & !seen;
            if next == 0 {
                break;
            }
            classes.push(bits(next).map(|i| self.labels[i]).collect());
            seen |= next;
            frontier = next;
        }
        Ok(DistanceClassification { source, classes })
    }

    /// Induced subgraph on the vertices outside `remove`. Surviving labels
    /// are unchanged.
    pub fn delete_vertices(&self, remove: &[u32]) -> Result<Graph> {
        let mut drop = 0u64;
        for &l in remove {
            drop |= 1 << self.index_of(l)?;
        }
        let keep: Vec<usize> = bits(self.vertex_mask() & !drop).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on the given indices (ascending).
    pub(crate) fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&old| {
                bits(self.adj[old])
                    .filter(|&j| pos[j] != usize::MAX)
                    .fold(0u64, |acc, j| acc | 1 << pos[j])
            })
            .collect();
        Graph {
            adj,
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
        }
    }

    /// Same graph with labels replaced by `1..=n` in index order.
    pub fn compact_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: (1..=self.n() as u32).collect(),
        }
    }

    /// Relabel by moving index `i` to index `images[i]`; labels become `1..=n`.
    pub fn permuted(&self, images: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = 0u64;
        if images.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "expected {n} images, got {}",
                images.len()
            )));
        }
        for &x in images {
            if x >= n || seen >> x & 1 == 1 {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen |= 1 << x;
        }
        let mut adj = vec![0u64; n];
        for (i, j) in self.edges() {
            adj[images[i]] |= 1 << images[j];
            adj[images[j]] |= 1 << images[i];
        }
        Ok(Graph {
            adj,
            labels: (1..=n as u32).collect(),
        })
    }

    /// Disjoint union; `other`'s labels are shifted past this graph's largest label.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.labels.last().copied().unwrap_or(0);
        let mut g = self.clone();
        for &l in &other.labels {
            g.push_vertex(l + shift)?;
        }
        let base = self.n();
        for (i, j) in other.edges() {
            g.adj[base + i] |= 1 << (base + j);
            g.adj[base + j] |= 1 << (base + i);
        }
        Ok(g)
    }

    /// A proper 2-colouring (`false`/`true` per index) when one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x]?;
                for y in bits(self.adj[x]) {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        color.into_iter().collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// The common degree if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            _ => None,
        }
    }
}

/// The Heawood graph: the Hamiltonian circle 1-2-...-14-1 together with the
/// chords {i, ((i + 4) mod 14) + 1} for every odd i.
pub fn heawood() -> Graph {
    let mut g = cycle_graph(14).expect("14 is a valid cycle length");
    for i in (1..=13u32).step_by(2) {
        g.add_edge(i, (i + 4) % 14 + 1)
            .expect("chord endpoints are vertices");
    }
    g
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewVertices { min: 1, got: 0 });
    }
    let mut g = Graph::empty(n)?;
    let full = g.vertex_mask();
    for i in 0..n {
        g.adj[i] = full & !(1 << i);
    }
    Ok(g)
}

/// The cycle C_n on `1..=n`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        let j = (i + 1) % n;
        g.adj[i] |= 1 << j;
        g.adj[j] |= 1 << i;
    }
    Ok(g)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for i in 1..n {
        g.adj[i] |= 1 << (i - 1);
        g.adj[i - 1] |= 1 << i;
    }
    Ok(g)
}

/// Petersen graph: outer 5-cycle 1..5, inner pentagram 6..10, spokes i ~ i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i + 1, (i + 1) % 5 + 1));
        edges.push((i + 6, (i + 2) % 5 + 6));
        edges.push((i + 1, i + 6));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_basics() {
        let g = heawood();
        assert_eq!(g.n(), 14);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_bipartite());
        assert_eq!(g.neighbors(1).unwrap(), vec![2, 6, 14]);
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::from_edge_list("1 2\n2 3\n3 1").unwrap();
        assert_eq!(g, complete_graph(3).unwrap());
        assert_eq!(g.edge_count(), 3);

        let text = "# heawood\n\n".to_string() + &heawood().to_edge_list();
        assert_eq!(Graph::from_edge_list(&text).unwrap(), heawood());

        assert!(matches!(
            Graph::from_edge_list("1 2\n1 1"),
            Err(Error::SelfLoop { line: 2, label: 1 })
        ));
        assert!(matches!(
            Graph::from_edge_list("1 x"),
            Err(Error::BadEdgeLine { line: 1, .. })
        ));
        assert!(Graph::from_edge_list("1 2 3").is_err());
        assert!(Graph::from_edge_list("0 2").is_err());
        assert!(Graph::from_edge_list("-1 2").is_err());
    }

    #[test]
    fn edge_list_keeps_labels_and_collapses_duplicates() {
        let g = Graph::from_edge_list("10 20\n20 10\n20 30\n").unwrap();
        assert_eq!(g.labels(), &[10, 20, 30]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.distance(10, 30).unwrap(), Some(2));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_graph(7).unwrap().edge_count(), 21);
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(4).unwrap().regular_degree(), Some(3));
        assert!(complete_graph(0).is_err());
        assert_eq!(complete_graph(64).unwrap().edge_count(), 64 * 63 / 2);
        assert!(complete_graph(65).is_err());
    }

    #[test]
    fn distances() {
        let g = heawood();
        assert_eq!(g.distance(1, 4).unwrap(), Some(3));
        assert_eq!(g.distance(1, 1).unwrap(), Some(0));
        assert_eq!(g.distance(1, 9).unwrap(), Some(2));
        assert_eq!(g.distance(1, 15), Err(Error::UnknownVertex(15)));
        let two = complete_graph(2).unwrap().disjoint_union(&complete_graph(2).unwrap()).unwrap();
        assert_eq!(two.distance(1, 3).unwrap(), None);
    }

    #[test]
    fn distance_classes_of_heawood() {
        let dc = heawood().distance_classes(1).unwrap();
        assert_eq!(dc.at(1).unwrap(), &[2, 6, 14]);
        assert_eq!(dc.at(2).unwrap(), &[3, 5, 7, 9, 11, 13]);
        assert_eq!(dc.at(3).unwrap(), &[4, 8, 10, 12]);
        assert_eq!(dc.eccentricity(), 3);

        let k3 = complete_graph(3).unwrap().distance_classes(1).unwrap();
        assert_eq!(k3.classes, vec![vec![2, 3]]);
        assert!(k3.at(2).is_none());

        for v in 1..=14 {
            let dc = heawood().distance_classes(v).unwrap();
            let sizes: Vec<usize> = dc.classes.iter().map(Vec::len).collect();
            assert_eq!(sizes, vec![3, 6, 4], "source {v}");
        }
    }

    #[test]
    fn delete_vertices_from_heawood() {
        let g = heawood();
        let h = g.delete_vertices(&[1, 4]).unwrap();
        assert_eq!(h.n(), 12);
        assert_eq!(h.edge_count(), 15);
        let twos: Vec<u32> = h
            .labels()
            .iter()
            .copied()
            .filter(|&l| h.degree(l).unwrap() == 2)
            .collect();
        assert_eq!(twos, vec![2, 3, 5, 6, 13, 14]);
        assert_eq!(g.delete_vertices(&[]).unwrap(), g);
        let all: Vec<u32> = (1..=14).collect();
        assert_eq!(g.delete_vertices(&all).unwrap().n(), 0);
        assert!(g.delete_vertices(&[99]).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = complete_graph(3).unwrap().to_dot();
        assert_eq!(dot, "graph G {\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        assert!(!p.is_bipartite());
    }
}
