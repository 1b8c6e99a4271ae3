//! Automorphism groups, projective linear groups, and abstract isomorphism
//! testing between small permutation groups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::for_each_isomorphism;
use crate::perm::{PermGroup, Permutation};

/// Every adjacency-preserving bijection of `g`, acting on vertex positions
/// `1..=n` (which coincide with labels for graphs labelled `1..=n`).
pub fn automorphisms(g: &Graph) -> PermGroup {
    let mut elements = Vec::new();
    for_each_isomorphism(g, g, &mut |m| {
        elements.push(Permutation::from_images(m.to_vec()).expect("search yields bijections"));
        true
    });
    PermGroup::from_elements(g.n(), elements).expect("automorphisms form a group")
}

/// Whether `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    let n = g.n();
    p.degree() == n
        && (0..n).all(|i| {
            (i + 1..n).all(|j| g.has_edge_idx(i, j) == g.has_edge_idx(p.apply(i), p.apply(j)))
        })
}

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn inv_mod(a: u64, q: u64) -> u64 {
    // Fermat: a^(q-2) mod q
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// PGL(2, q) acting on the projective line. Points `1..=q` stand for the
/// field elements `0..q-1` and point `q + 1` for infinity.
pub fn pgl2(q: u32) -> Result<PermGroup> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let q64 = q as u64;
    let inf = q as usize;
    let mut elements = Vec::new();
    for a in 0..q64 {
        for b in 0..q64 {
            for c in 0..q64 {
                for d in 0..q64 {
                    if (a * d % q64 + q64 - b * c % q64).is_multiple_of(q64) {
                        continue;
                    }
                    let image = |x: usize| -> usize {
                        if x == inf {
                            return if c == 0 { inf } else { (a * inv_mod(c, q64) % q64) as usize };
                        }
                        let x = x as u64;
                        let den = (c * x + d) % q64;
                        if den == 0 {
                            inf
                        } else {
                            ((a * x + b) % q64 * inv_mod(den, q64) % q64) as usize
                        }
                    };
                    let images = (0..=inf).map(image).collect();
                    elements.push(Permutation::from_images(images)?);
                }
            }
        }
    }
    PermGroup::from_elements(inf + 1, elements)
}

/// Element-order lookup and multiplication by index for one group.
struct Indexed<'a> {
    group: &'a PermGroup,
    index: HashMap<&'a Permutation, usize>,
    orders: Vec<usize>,
}

impl<'a> Indexed<'a> {
    fn new(group: &'a PermGroup) -> Indexed<'a> {
        let index = group.elements().iter().enumerate().map(|(i, e)| (e, i)).collect();
        let orders = group.elements().iter().map(Permutation::order).collect();
        Indexed { group, index, orders }
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let e = self.group.elements();
        self.index[&e[x].compose(&e[y])]
    }

    fn find(&self, p: &Permutation) -> usize {
        self.index[p]
    }
}

/// Whether the two groups are isomorphic as abstract groups.
///
/// Orders and element-order histograms are compared first. Then images for
/// `a`'s generators are chosen among `b`'s elements of equal order (largest
/// generator order first, pairwise products checked for matching order), and
/// each complete choice is extended along the Cayley graph of `a`; the
/// extension must be well defined on every edge and injective.
pub fn groups_isomorphic(a: &PermGroup, b: &PermGroup) -> bool {
    if a.order() != b.order() || a.order_histogram() != b.order_histogram() {
        return false;
    }
    let ia = Indexed::new(a);
    let ib = Indexed::new(b);
    let mut gens: Vec<usize> = a.generators().iter().map(|g| ia.find(g)).collect();
    gens.sort_by_key(|&g| std::cmp::Reverse(ia.orders[g]));
    if gens.is_empty() {
        return true;
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..b.order()).filter(|&x| ib.orders[x] == ia.orders[g]).collect())
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    assign(&ia, &ib, &gens, &candidates, &mut chosen)
}

fn assign(
    ia: &Indexed,
    ib: &Indexed,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    let depth = chosen.len();
    if depth == gens.len() {
        return extends_to_isomorphism(ia, ib, gens, chosen);
    }
    for &c in &candidates[depth] {
        if chosen.contains(&c) {
            continue;
        }
        let compatible = (0..depth).all(|j| {
            ia.orders[ia.mul(gens[depth], gens[j])] == ib.orders[ib.mul(c, chosen[j])]
                && ia.orders[ia.mul(gens[j], gens[depth])] == ib.orders[ib.mul(chosen[j], c)]
        });
        if !compatible {
            continue;
        }
        chosen.push(c);
        if assign(ia, ib, gens, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn extends_to_isomorphism(ia: &Indexed, ib: &Indexed, gens: &[usize], images: &[usize]) -> bool {
    let n = ia.group.order();
    let id_a = ia.find(&Permutation::identity(ia.group.degree()));
    let id_b = ib.find(&Permutation::identity(ib.group.degree()));
    let mut phi = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    phi[id_a] = id_b;
    hit[id_b] = true;
    let mut queue = std::collections::VecDeque::from([id_a]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = ia.mul(x, s);
            let fy = ib.mul(phi[x], t);
            if phi[y] == usize::MAX {
                if hit[fy] {
                    return false;
                }
                phi[y] = fy;
                hit[fy] = true;
                queue.push_back(y);
            } else if phi[y] != fy {
                return false;
            }
        }
    }
    phi.iter().all(|&v| v != usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, heawood, petersen};

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphisms(&heawood()).order(), 336);
        assert_eq!(automorphisms(&complete_graph(3).unwrap()).order(), 6);
        assert_eq!(automorphisms(&cycle_graph(6).unwrap()).order(), 12);
        assert_eq!(automorphisms(&petersen()).order(), 120);
    }

    #[test]
    fn heawood_group_is_closed_and_transitive() {
        let g = heawood();
        let aut = automorphisms(&g);
        assert!(aut.is_closed());
        assert!(aut.elements().iter().all(|p| is_automorphism(&g, p)));
        assert_eq!(aut.orbit_of_point(1), (1..=14).collect::<Vec<u32>>());
        assert!(aut.generators().len() <= 4);
    }

    #[test]
    fn pgl2_orders() {
        let g7 = pgl2(7).unwrap();
        assert_eq!((g7.order(), g7.degree()), (336, 8));
        let g2 = pgl2(2).unwrap();
        assert_eq!((g2.order(), g2.degree()), (6, 3));
        let g3 = pgl2(3).unwrap();
        assert_eq!((g3.order(), g3.degree()), (24, 4));
        assert!(g7.is_closed());
        assert_eq!(pgl2(4), Err(Error::NotPrime(4)));
        assert_eq!(pgl2(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn isomorphism_of_groups() {
        let aut = automorphisms(&heawood());
        let pgl = pgl2(7).unwrap();
        assert!(groups_isomorphic(&aut, &pgl));
        assert!(groups_isomorphic(&pgl, &aut));
        assert!(groups_isomorphic(&automorphisms(&complete_graph(3).unwrap()), &pgl2(2).unwrap()));

        let dihedral = automorphisms(&cycle_graph(6).unwrap());
        let cyclic = PermGroup::from_generators(
            12,
            vec![Permutation::from_images((0..12).map(|i| (i + 1) % 12).collect()).unwrap()],
        )
        .unwrap();
        assert_eq!(cyclic.order(), 12);
        assert!(!groups_isomorphic(&dihedral, &cyclic));
        let s4 = automorphisms(&complete_graph(4).unwrap());
        assert!(groups_isomorphic(&s4, &pgl2(3).unwrap()));
    }
}
