//! Delta-wye and wye-delta exchanges, and graph families closed under them.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, complete_graph, Graph};
use crate::iso::are_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExchangeMove {
    /// Replace the triangle on these labels by a new degree-3 vertex.
    DeltaY([u32; 3]),
    /// Replace this degree-3 vertex by a triangle on its neighbours.
    YDelta(u32),
}

impl fmt::Display for ExchangeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeMove::DeltaY([a, b, c]) => write!(f, "delta-y {a} {b} {c}"),
            ExchangeMove::YDelta(v) => write!(f, "y-delta {v}"),
        }
    }
}

/// Delete the edges of triangle `t` and join a new vertex to its corners.
/// The new vertex is labelled one past the largest existing label.
pub fn delta_y(g: &Graph, t: [u32; 3]) -> Result<Graph> {
    let [a, b, c] = t;
    if a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c) {
        return Err(Error::NotTriangle(t));
    }
    let mut h = g.clone();
    h.remove_edge(a, b)?;
    h.remove_edge(b, c)?;
    h.remove_edge(a, c)?;
    let label = g.labels().last().copied().unwrap_or(0) + 1;
    h.push_vertex(label)?;
    for x in t {
        h.add_edge(label, x)?;
    }
    Ok(h)
}

/// Remove degree-3 vertex `v` and join its neighbours pairwise. `None` when
/// two of the neighbours are already adjacent.
pub fn y_delta(g: &Graph, v: u32) -> Result<Option<Graph>> {
    let nb = g.neighbors(v)?;
    if nb.len() != 3 {
        return Err(Error::NotDegreeThree {
            vertex: v,
            degree: nb.len(),
        });
    }
    if g.has_edge(nb[0], nb[1]) || g.has_edge(nb[1], nb[2]) || g.has_edge(nb[0], nb[2]) {
        return Ok(None);
    }
    let mut h = g.delete_vertices(&[v])?;
    h.add_edge(nb[0], nb[1])?;
    h.add_edge(nb[1], nb[2])?;
    h.add_edge(nb[0], nb[2])?;
    Ok(Some(h))
}

/// Triangles as sorted label triples, sorted.
pub fn triangles(g: &Graph) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for (i, j) in g.edges() {
        for k in bits(g.row(i) & g.row(j)) {
            if k > j {
                out.push([g.label(i), g.label(j), g.label(k)]);
            }
        }
    }
    out
}

/// Every move applicable in principle: all triangles, then all degree-3 vertices.
pub fn moves(g: &Graph) -> Vec<ExchangeMove> {
    let mut out: Vec<ExchangeMove> = triangles(g).into_iter().map(ExchangeMove::DeltaY).collect();
    out.extend(
        g.labels()
            .iter()
            .enumerate()
            .filter(|&(i, _)| g.degree_idx(i) == 3)
            .map(|(_, &l)| ExchangeMove::YDelta(l)),
    );
    out
}

pub fn apply_move(g: &Graph, m: ExchangeMove) -> Result<Option<Graph>> {
    match m {
        ExchangeMove::DeltaY(t) => delta_y(g, t).map(Some),
        ExchangeMove::YDelta(v) => y_delta(g, v),
    }
}

/// Which exchanges a closure may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exchanges {
    DeltaYOnly,
    Both,
}

/// Breadth-first closure of `seed` under the chosen exchanges, one
/// representative per isomorphism class, labelled `1..=n`. Representatives
/// appear in discovery order; moves are tried in the order of [`moves`].
pub fn exchange_closure(seed: &Graph, exchanges: Exchanges) -> Result<Vec<Graph>> {
    let mut reps = vec![seed.compact_labels()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let g = reps[idx].clone();
        for m in moves(&g) {
            if exchanges == Exchanges::DeltaYOnly && matches!(m, ExchangeMove::YDelta(_)) {
                continue;
            }
            let Some(h) = apply_move(&g, m)? else { continue };
            let h = h.compact_labels();
            if !reps.iter().any(|r| are_isomorphic(r, &h)) {
                reps.push(h);
                queue.push_back(reps.len() - 1);
            }
        }
    }
    Ok(reps)
}

/// Closure of K7 under both exchanges, with wye-delta moves that would
/// create a parallel edge treated as inapplicable.
pub fn k7_family() -> Vec<Graph> {
    exchange_closure(&complete_graph(7).expect("K7"), Exchanges::Both).expect("moves on K7 descendants are valid")
}

/// Graphs reachable from K7 by delta-wye moves alone.
pub fn k7_delta_y_descendants() -> Vec<Graph> {
    exchange_closure(&complete_graph(7).expect("K7"), Exchanges::DeltaYOnly)
        .expect("moves on K7 descendants are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::heawood;

    #[test]
    fn delta_y_on_small_graphs() {
        let k4 = complete_graph(4).unwrap();
        let h = delta_y(&k4, [1, 2, 3]).unwrap();
        assert_eq!((h.n(), h.edge_count()), (5, 6));
        assert_eq!(h.neighbors(5).unwrap(), vec![1, 2, 3]);
        let back = y_delta(&h, 5).unwrap().unwrap();
        assert_eq!(back, k4);

        let k7 = complete_graph(7).unwrap();
        let h = delta_y(&k7, [2, 4, 6]).unwrap();
        assert_eq!((h.n(), h.edge_count()), (8, 21));
        assert!(delta_y(&heawood(), [1, 2, 3]).is_err());
        assert!(delta_y(&k4, [1, 1, 2]).is_err());
    }

    #[test]
    fn y_delta_guards() {
        let h = y_delta(&heawood(), 1).unwrap().unwrap();
        assert_eq!((h.n(), h.edge_count()), (13, 21));
        // in K4 every neighbour pair is already adjacent
        assert_eq!(y_delta(&complete_graph(4).unwrap(), 1).unwrap(), None);
        assert!(matches!(
            y_delta(&complete_graph(5).unwrap(), 1),
            Err(Error::NotDegreeThree { vertex: 1, degree: 4 })
        ));
    }

    #[test]
    fn new_vertex_label_follows_largest() {
        let g = Graph::from_edge_list("2 5\n5 9\n2 9\n").unwrap();
        let h = delta_y(&g, [2, 5, 9]).unwrap();
        assert_eq!(h.labels(), &[2, 5, 9, 10]);
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(
            triangles(&complete_graph(4).unwrap()),
            vec![[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
        );
        assert!(triangles(&heawood()).is_empty());
    }
}
