mod common;

use std::collections::BTreeMap;

use heawood_core::autgroup::{automorphisms, is_automorphism, pgl2};
use heawood_core::cycles::{cycle_census, enumerate_cycles};
use heawood_core::graph::{complete_graph, cycle_graph, heawood, petersen, Graph};
use heawood_core::iso::{find_isomorphism, is_isomorphism};
use heawood_core::perm::{PermGroup, Permutation};
use heawood_core::zeon::{count_cycles_zeon, zeon_census};

use common::{brute_force_cycle_count, corpus, random_permutation, rng};

#[test]
fn k4_counts_from_subset_oracle() {
    let k4 = complete_graph(4).unwrap();
    assert_eq!(brute_force_cycle_count(&k4, 3), 4);
    assert_eq!(brute_force_cycle_count(&k4, 4), 3);
    assert_eq!(enumerate_cycles(&k4, 3).unwrap().len(), 4);
    assert_eq!(enumerate_cycles(&k4, 4).unwrap().len(), 3);
}

#[test]
fn enumeration_matches_subset_oracle_up_to_eight_vertices() {
    for g in corpus(0x5eed, 150, 3, 8) {
        let census = cycle_census(&g);
        let mut oracle = BTreeMap::new();
        for k in 3..=g.n() {
            let c = brute_force_cycle_count(&g, k);
            if c > 0 {
                oracle.insert(k, c);
            }
            let listed = enumerate_cycles(&g, k).unwrap();
            assert_eq!(listed.len() as u64, c, "k={k} graph:\n{}", g.to_edge_list());
            assert!(listed.iter().all(|cy| cy.is_cycle_of(&g)));
            assert!(listed.windows(2).all(|w| w[0] < w[1]), "sorted and unique");
        }
        assert_eq!(census, oracle, "graph:\n{}", g.to_edge_list());
    }
}

#[test]
fn zeon_matches_enumeration_on_small_graphs() {
    for g in corpus(0xfeed, 60, 3, 9) {
        let dfs = cycle_census(&g);
        assert_eq!(zeon_census(&g).unwrap(), dfs, "graph:\n{}", g.to_edge_list());
        for k in 3..=g.n() {
            assert_eq!(
                count_cycles_zeon(&g, k).unwrap(),
                dfs.get(&k).copied().unwrap_or(0)
            );
        }
    }
}

/// Plain backtracking over bijections, no colour refinement.
fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
    fn go(g: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let v = map.len();
        if v == g.n() {
            out.push(Permutation::from_images(map.clone()).unwrap());
            return;
        }
        for c in 0..g.n() {
            if used[c] {
                continue;
            }
            if (0..v).all(|u| g.has_edge_idx(u, v) == g.has_edge_idx(map[u], c)) {
                used[c] = true;
                map.push(c);
                go(g, map, used, out);
                map.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut Vec::new(), &mut vec![false; g.n()], &mut out);
    out.sort();
    out
}

#[test]
fn petersen_automorphisms_match_brute_force() {
    let g = petersen();
    let aut = automorphisms(&g);
    let brute = brute_force_automorphisms(&g);
    assert_eq!(brute.len(), 120);
    assert_eq!(aut.elements(), brute.as_slice());
}

#[test]
fn automorphisms_match_brute_force_on_random_graphs() {
    for g in corpus(0xa07, 40, 3, 8) {
        let aut = automorphisms(&g);
        assert_eq!(aut.elements(), brute_force_automorphisms(&g).as_slice());
        assert!(aut.elements().iter().all(|p| is_automorphism(&g, p)));
        assert!(aut.is_closed());
        assert!(aut.order() > 0);
    }
}

#[test]
fn heawood_found_under_random_relabellings() {
    let g = heawood();
    let mut r = rng(7);
    for _ in 0..100 {
        let images = random_permutation(&mut r, 14);
        let h = g.permuted(&images).unwrap();
        let m = find_isomorphism(&g, &h).expect("relabelling is an isomorphism");
        assert!(is_isomorphism(&g, &h, &m));
        for (i, j) in g.edges() {
            assert!(h.has_edge_idx(m[i], m[j]));
        }
    }
}

/// Point-line incidence graph of the Fano plane, lines {i, i+1, i+3} mod 7.
fn fano_incidence_graph() -> Graph {
    let mut edges = Vec::new();
    for line in 0..7u32 {
        for d in [0, 1, 3] {
            let point = (line + d) % 7;
            edges.push((point + 1, line + 8));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}

#[test]
fn fano_incidence_graph_is_heawood() {
    let f = fano_incidence_graph();
    assert_eq!(f.regular_degree(), Some(3));
    assert!(f.is_bipartite());
    assert_eq!(heawood_core::cycles::girth(&f), Some(6));
    let m = find_isomorphism(&heawood(), &f).expect("the (3,6)-cage is unique");
    assert!(is_isomorphism(&heawood(), &f, &m));
}

#[test]
fn pgl2_three_by_closure() {
    // PGL(2,3) is generated by x -> x + 1 and x -> 1/x on {0, 1, 2, inf}
    let translate = Permutation::from_one_based(&[2, 3, 1, 4]).unwrap();
    let invert = Permutation::from_one_based(&[4, 2, 3, 1]).unwrap();
    let generated = PermGroup::from_generators(4, vec![translate, invert]).unwrap();
    let built = pgl2(3).unwrap();
    assert_eq!(generated.order(), 24);
    assert_eq!(built.elements(), generated.elements());
}

#[test]
fn pgl2_orders_follow_formula() {
    for q in [2u32, 3, 5, 7, 11] {
        let g = pgl2(q).unwrap();
        let q = q as usize;
        assert_eq!(g.order(), q * (q - 1) * (q + 1));
        assert_eq!(g.degree(), q + 1);
    }
}

#[test]
fn distances_are_a_metric() {
    let mut graphs = corpus(0xd15, 20, 3, 10);
    graphs.push(heawood());
    graphs.push(cycle_graph(9).unwrap());
    for g in graphs {
        let labels = g.labels().to_vec();
        let d = |u: u32, v: u32| g.distance(u, v).unwrap();
        for &u in &labels {
            for &v in &labels {
                assert_eq!(d(u, v), d(v, u));
                assert_eq!(d(u, v) == Some(0), u == v);
                for &w in &labels {
                    if let (Some(a), Some(b)) = (d(u, v), d(v, w)) {
                        assert!(d(u, w).unwrap() <= a + b);
                    }
                }
            }
        }
    }
}
