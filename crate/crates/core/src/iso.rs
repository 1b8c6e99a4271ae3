//! Isomorphism search between small graphs.
//!
//! Vertices are first coloured by iterated degree refinement, computed jointly
//! over both graphs so colour ids are comparable. A backtracking search then
//! assigns images one vertex at a time and checks adjacency against every
//! previously assigned vertex immediately after each assignment.

use std::collections::BTreeMap;

use crate::graph::{bits, Graph};

/// Joint colour refinement. Returns one colour vector per graph.
pub(crate) fn refine_colors(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| g.degrees()).collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = bits(g.row(v)).map(|u| c[u]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        for sig in signatures.iter().flatten() {
            palette.entry(sig.clone()).or_insert(0);
        }
        for (i, v) in palette.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = signatures
            .iter()
            .map(|s| s.iter().map(|sig| palette[sig]).collect())
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: Vec<usize>,
    c2: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    /// Returns `false` when the visitor asked to stop.
    fn extend(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[depth];
        let assigned: u64 = self.order[..depth].iter().fold(0, |a, &x| a | 1 << x);
        let anchored = self.g1.row(v) & assigned;
        let mut candidates = !self.used & self.g2.vertex_mask();
        if anchored != 0 {
            let anchor = anchored.trailing_zeros() as usize;
            candidates &= self.g2.row(self.map[anchor]);
        }
        for c in bits(candidates) {
            if self.c2[c] != self.c1[v] || !self.consistent(v, c, assigned) {
                continue;
            }
            self.map[v] = c;
            self.used |= 1 << c;
            let go_on = self.extend(depth + 1, visit);
            self.used &= !(1 << c);
            self.map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn consistent(&self, v: usize, c: usize, assigned: u64) -> bool {
        let row1 = self.g1.row(v);
        let row2 = self.g2.row(c);
        bits(assigned).all(|u| (row1 >> u & 1) == (row2 >> self.map[u] & 1))
    }
}

/// Vertex order for the backtracking: always take the unassigned vertex with
/// the most assigned neighbours, breaking ties by rarer colour, then index.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse((g.row(v) & placed).count_ones()),
                    class_size[&colors[v]],
                    v,
                )
            })
            .expect("an unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }
    order
}

/// Calls `visit` with every isomorphism `g1 -> g2` (as index images) until
/// it returns `false`.
pub(crate) fn for_each_isomorphism(
    g1: &Graph,
    g2: &Graph,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return;
    }
    let mut colors = refine_colors(&[g1, g2]);
    let c2 = colors.pop().expect("two colourings");
    let c1 = colors.pop().expect("two colourings");
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return;
    }
    let order = search_order(g1, &c1);
    let mut search = Search {
        g1,
        g2,
        c1,
        c2,
        order,
        map: vec![usize::MAX; g1.n()],
        used: 0,
    };
    search.extend(0, visit);
}

/// An isomorphism `g1 -> g2` as index images, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(g1, g2, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Whether `images` maps the edges of `g1` bijectively onto the edges of `g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, images: &[usize]) -> bool {
    g1.n() == g2.n()
        && images.len() == g1.n()
        && g1.edge_count() == g2.edge_count()
        && g1
            .edges()
            .into_iter()
            .all(|(i, j)| g2.has_edge_idx(images[i], images[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, heawood, petersen};

    #[test]
    fn relabelled_heawood_is_found() {
        let g = heawood();
        let images = [3, 7, 0, 13, 2, 9, 11, 1, 5, 4, 12, 6, 10, 8];
        let h = g.permuted(&images).unwrap();
        let m = find_isomorphism(&g, &h).expect("relabelling is an isomorphism");
        assert!(is_isomorphism(&g, &h, &m));
    }

    #[test]
    fn rejects_non_isomorphic() {
        assert!(find_isomorphism(&complete_graph(4).unwrap(), &cycle_graph(4).unwrap()).is_none());
        // same degree sequence, different girth
        let c6 = cycle_graph(6).unwrap();
        let two_triangles = complete_graph(3)
            .unwrap()
            .disjoint_union(&complete_graph(3).unwrap())
            .unwrap();
        assert!(find_isomorphism(&c6, &two_triangles).is_none());
        assert!(find_isomorphism(&petersen(), &cycle_graph(10).unwrap()).is_none());
    }

    #[test]
    fn refinement_separates_path_ends() {
        let p = crate::graph::path_graph(5).unwrap();
        let colors = refine_colors(&[&p]).pop().unwrap();
        assert_eq!(colors[0], colors[4]);
        assert_eq!(colors[1], colors[3]);
        assert_ne!(colors[0], colors[1]);
        assert_ne!(colors[1], colors[2]);
    }
}
