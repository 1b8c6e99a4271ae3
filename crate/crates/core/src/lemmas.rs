//! Verifiers for the structural facts about Hamiltonian cycles, 12-cycles,
//! distance-3 pairs and disjoint 6-cycle pairs of a cubic graph on 14 vertices.
//!
//! Wherever a statement holds "for a suitable labelling", the verifier
//! searches every rotation and reflection instead of assuming one.

use std::fmt;

use serde::Serialize;

use crate::cycles::{enumerate_cycles, Cycle, DisjointPair};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    HamiltonianChords,
    TwelveCycleComplement,
    DistanceThreePairs,
    DisjointPairConfiguration,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::HamiltonianChords => "hamiltonian_chords",
            LemmaId::TwelveCycleComplement => "twelve_cycle_complement",
            LemmaId::DistanceThreePairs => "distance_three_pairs",
            LemmaId::DisjointPairConfiguration => "disjoint_pair_configuration",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Labelling `x1..x14` with a `+5` chord at every listed position.
    ChordLabeling {
        labeling: Vec<u32>,
        plus_five_positions: Vec<usize>,
    },
    /// Off-cycle vertices of a 12-cycle and where they attach. Positions are
    /// 1-based in the cycle's canonical sequence. `labeling`, when found, puts
    /// the neighbours of `v` at `x1, x5, x9` and those of `w` at `x4, x8, x12`;
    /// `chords` are the remaining off-cycle edges as position pairs in it.
    ComplementStructure {
        v: u32,
        w: u32,
        v_positions: Vec<usize>,
        w_positions: Vec<usize>,
        labeling: Option<Vec<u32>>,
        chords: Vec<(usize, usize)>,
    },
    SurvivingCycles {
        cycles: Vec<Cycle>,
    },
    /// Labelling of a disjoint pair matching the configuration template.
    PairLabeling {
        x: Vec<u32>,
        y: Vec<u32>,
        v: u32,
        w: u32,
    },
    /// First violated condition and the vertices involved.
    Violation {
        condition: String,
        vertices: Vec<u32>,
        position: Option<usize>,
    },
}

impl Witness {
    fn violation(condition: impl Into<String>, vertices: Vec<u32>, position: Option<usize>) -> Witness {
        Witness::Violation {
            condition: condition.into(),
            vertices,
            position,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma_id: LemmaId,
    pub instance: String,
    pub pass: bool,
    pub witness: Witness,
}

impl LemmaVerdict {
    fn pass(lemma_id: LemmaId, instance: String, witness: Witness) -> LemmaVerdict {
        LemmaVerdict {
            lemma_id,
            instance,
            pass: true,
            witness,
        }
    }

    fn fail(lemma_id: LemmaId, instance: String, witness: Witness) -> LemmaVerdict {
        LemmaVerdict {
            lemma_id,
            instance,
            pass: false,
            witness,
        }
    }
}

fn non_cycle_neighbors(g: &Graph, x: &[u32], i: usize) -> Result<Vec<u32>> {
    let k = x.len();
    let (prev, next) = (x[(i + k - 1) % k], x[(i + 1) % k]);
    Ok(g.neighbors(x[i])?
        .into_iter()
        .filter(|&u| u != prev && u != next)
        .collect())
}

fn check_membership(g: &Graph, c: &Cycle) -> Result<()> {
    for &v in c.vertices() {
        g.index_of(v)?;
    }
    if !c.is_cycle_of(g) {
        return Err(Error::InvalidCycle(format!("{c} is not a cycle of the graph")));
    }
    Ok(())
}

/// Every vertex of the Hamiltonian cycle has exactly one chord, going five
/// steps forward or backward, and the forward chords occupy exactly one
/// parity class of positions.
pub fn check_hamiltonian_chord_pattern(g: &Graph, c: &Cycle) -> Result<LemmaVerdict> {
    if c.len() != g.n() {
        return Err(Error::NotHamiltonian { len: c.len(), n: g.n() });
    }
    check_membership(g, c)?;
    let id = LemmaId::HamiltonianChords;
    let k = c.len();
    let x = c.vertices();
    let pos = |v: u32| x.iter().position(|&u| u == v).expect("Hamiltonian cycle covers the graph");

    // +1 for a forward chord, -1 for a backward one, per position
    let mut direction = Vec::with_capacity(k);
    for i in 0..k {
        let chords = non_cycle_neighbors(g, x, i)?;
        if chords.len() != 1 {
            return Ok(LemmaVerdict::fail(
                id,
                c.to_string(),
                Witness::violation(
                    format!("x{} has {} chords, expected exactly 1", i + 1, chords.len()),
                    std::iter::once(x[i]).chain(chords).collect(),
                    Some(i + 1),
                ),
            ));
        }
        let j = pos(chords[0]);
        let offset = (j + k - i) % k;
        if offset == 5 {
            direction.push(1);
        } else if offset == k - 5 {
            direction.push(-1);
        } else {
            return Ok(LemmaVerdict::fail(
                id,
                c.to_string(),
                Witness::violation(
                    format!("chord from x{} reaches x{}, not x{}+5 or x{}-5", i + 1, j + 1, i + 1, i + 1),
                    vec![x[i], chords[0]],
                    Some(i + 1),
                ),
            ));
        }
    }
    for labeling in c.labelings() {
        let forward_at_odd = (0..k).step_by(2).all(|i| {
            let j = (i + 5) % k;
            g.has_edge(labeling[i], labeling[j])
        });
        let backward_at_even = (1..k).step_by(2).all(|i| {
            let j = (i + k - 5) % k;
            g.has_edge(labeling[i], labeling[j])
        });
        if forward_at_odd && backward_at_even {
            return Ok(LemmaVerdict::pass(
                id,
                c.to_string(),
                Witness::ChordLabeling {
                    labeling,
                    plus_five_positions: (1..=k).step_by(2).collect(),
                },
            ));
        }
    }
    let forward: Vec<usize> = (0..k).filter(|&i| direction[i] == 1).map(|i| i + 1).collect();
    Ok(LemmaVerdict::fail(
        id,
        c.to_string(),
        Witness::violation(
            format!("+5 chords at positions {forward:?} do not form one parity class"),
            forward.iter().map(|&i| x[i - 1]).collect(),
            forward.first().copied(),
        ),
    ))
}

/// The two vertices off a 12-cycle are non-adjacent, each meets the cycle
/// in three vertices spaced four apart, and every cycle neighbour of the
/// first is cycle-adjacent to a cycle neighbour of the second.
pub fn check_twelve_cycle_complement(g: &Graph, c: &Cycle) -> Result<LemmaVerdict> {
    check_membership(g, c)?;
    let omitted = g.n() - c.len();
    if omitted != 2 {
        return Err(Error::BadComplement(omitted));
    }
    let id = LemmaId::TwelveCycleComplement;
    let k = c.len();
    let x = c.vertices();
    let off: Vec<u32> = g.labels().iter().copied().filter(|&l| !c.contains(l)).collect();
    let (v, w) = (off[0], off[1]);
    let fail = |condition: String, vertices: Vec<u32>| {
        Ok(LemmaVerdict::fail(id, c.to_string(), Witness::violation(condition, vertices, None)))
    };
    if g.has_edge(v, w) {
        return fail(format!("off-cycle vertices {v} and {w} are adjacent"), vec![v, w]);
    }
    let positions = |u: u32| -> Vec<usize> { (0..k).filter(|&i| g.has_edge(u, x[i])).collect() };
    let (pv, pw) = (positions(v), positions(w));
    for (u, p) in [(v, &pv), (w, &pw)] {
        if p.len() != 3 {
            return fail(format!("{u} has {} neighbours on the cycle, expected 3", p.len()), vec![u]);
        }
        if p[1] - p[0] != 4 || p[2] - p[1] != 4 {
            let one_based: Vec<usize> = p.iter().map(|i| i + 1).collect();
            return fail(
                format!("neighbours of {u} sit at positions {one_based:?}, not spaced 4 apart"),
                p.iter().map(|&i| x[i]).collect(),
            );
        }
    }
    for &i in &pv {
        let touches = [(i + 1) % k, (i + k - 1) % k].iter().any(|j| pw.contains(j));
        if !touches {
            return fail(
                format!("x{} (neighbour of {v}) is not next to a neighbour of {w}", i + 1),
                vec![x[i], v, w],
            );
        }
    }

    let labeling = c.labelings().find(|l| {
        [0, 4, 8].iter().all(|&i| g.has_edge(v, l[i])) && [3, 7, 11].iter().all(|&i| g.has_edge(w, l[i]))
    });
    let mut chords = Vec::new();
    if let Some(l) = &labeling {
        for a in 0..k {
            for b in a + 2..k {
                if (a, b) != (0, k - 1) && g.has_edge(l[a], l[b]) {
                    chords.push((a + 1, b + 1));
                }
            }
        }
    }
    Ok(LemmaVerdict::pass(
        id,
        c.to_string(),
        Witness::ComplementStructure {
            v,
            w,
            v_positions: pv.iter().map(|i| i + 1).collect(),
            w_positions: pw.iter().map(|i| i + 1).collect(),
            labeling,
            chords,
        },
    ))
}

/// All 12-cycles that avoid both `u` and `v`.
pub fn twelve_cycles_avoiding_pair(g: &Graph, u: u32, v: u32) -> Result<Vec<Cycle>> {
    if u == v {
        return Err(Error::InvalidPair(format!("vertex {u} given twice")));
    }
    let h = g.delete_vertices(&[u, v])?;
    if h.n() < 12 {
        return Ok(Vec::new());
    }
    enumerate_cycles(&h, 12)
}

/// Unordered vertex pairs at distance exactly 3, sorted.
pub fn distance_three_pairs(g: &Graph) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (i, &u) in g.labels().iter().enumerate() {
        let dist = g.bfs_distances(i);
        for (j, &v) in g.labels().iter().enumerate().skip(i + 1) {
            if dist[j] == Some(3) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Exactly two 12-cycles survive deleting the pair.
pub fn check_distance_three_pair(g: &Graph, u: u32, v: u32) -> Result<LemmaVerdict> {
    let cycles = twelve_cycles_avoiding_pair(g, u, v)?;
    Ok(LemmaVerdict {
        lemma_id: LemmaId::DistanceThreePairs,
        instance: format!("{{{u}, {v}}}"),
        pass: cycles.len() == 2,
        witness: Witness::SurvivingCycles { cycles },
    })
}

/// The configuration template for a disjoint pair `x`, `y` with off-pair
/// vertices `v`, `w` (all sequences 0-based: `x[0]` is `x1`).
pub fn pair_template_holds(g: &Graph, x: &[u32], y: &[u32], v: u32, w: u32) -> bool {
    g.has_edge(v, w)
        && g.has_edge(v, x[0])
        && g.has_edge(v, y[3])
        && g.has_edge(w, y[0])
        && g.has_edge(w, x[3])
        && g.has_edge(x[1], y[1])
        && g.has_edge(x[2], y[4])
        && g.has_edge(x[4], y[2])
        && g.has_edge(x[5], y[5])
}

/// The mirrored branch of the template, where `x2` meets `y6`.
pub fn pair_alternative_branch_holds(g: &Graph, x: &[u32], y: &[u32], v: u32, w: u32) -> bool {
    g.has_edge(v, w)
        && g.has_edge(v, x[0])
        && g.has_edge(v, y[3])
        && g.has_edge(w, y[0])
        && g.has_edge(w, x[3])
        && g.has_edge(x[1], y[5])
        && g.has_edge(x[2], y[2])
        && g.has_edge(x[4], y[4])
        && g.has_edge(x[5], y[1])
}

/// The two vertices off a disjoint 6-cycle pair are adjacent, each has one
/// neighbour on each cycle, and some labelling realises the template
/// `v~x1, v~y4, w~y1, w~x4, x2~y2, x3~y5, x5~y3, x6~y6`.
pub fn check_disjoint_pair_configuration(g: &Graph, p: &DisjointPair) -> Result<LemmaVerdict> {
    check_membership(g, p.first())?;
    check_membership(g, p.second())?;
    let omitted = g.n() - 12;
    if omitted != 2 {
        return Err(Error::InvalidPair(format!(
            "pair leaves {omitted} vertices uncovered, expected 2"
        )));
    }
    let id = LemmaId::DisjointPairConfiguration;
    let instance = p.to_string();
    let off: Vec<u32> = g
        .labels()
        .iter()
        .copied()
        .filter(|&l| !p.first().contains(l) && !p.second().contains(l))
        .collect();
    let (v, w) = (off[0], off[1]);
    let fail = |condition: String, vertices: Vec<u32>| {
        Ok(LemmaVerdict::fail(id, instance.clone(), Witness::violation(condition, vertices, None)))
    };
    if !g.has_edge(v, w) {
        return fail(format!("off-pair vertices {v} and {w} are not adjacent"), vec![v, w]);
    }
    for u in [v, w] {
        for c in [p.first(), p.second()] {
            let hits = c.vertices().iter().filter(|&&x| g.has_edge(u, x)).count();
            if hits != 1 {
                return fail(format!("{u} has {hits} neighbours on {c}, expected 1"), vec![u]);
            }
        }
    }
    for (a, b) in [(p.first(), p.second()), (p.second(), p.first())] {
        for (vv, ww) in [(v, w), (w, v)] {
            for x in a.labelings() {
                for y in b.labelings() {
                    if pair_template_holds(g, &x, &y, vv, ww) {
                        return Ok(LemmaVerdict::pass(
                            id,
                            instance,
                            Witness::PairLabeling { x, y, v: vv, w: ww },
                        ));
                    }
                }
            }
        }
    }
    fail("no labelling matches the configuration template".into(), vec![v, w])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::disjoint_six_cycle_pairs;
    use crate::graph::{cycle_graph, heawood};

    #[test]
    fn outer_circle_chords() {
        let g = heawood();
        let outer = Cycle::new((1..=14).collect()).unwrap();
        let v = check_hamiltonian_chord_pattern(&g, &outer).unwrap();
        assert!(v.pass);
        let Witness::ChordLabeling { labeling, plus_five_positions } = v.witness else {
            panic!("expected a labelling");
        };
        assert_eq!(labeling, (1..=14).collect::<Vec<u32>>());
        assert_eq!(plus_five_positions, vec![1, 3, 5, 7, 9, 11, 13]);
    }

    #[test]
    fn chord_check_rejects_short_cycles() {
        let g = heawood();
        let c = enumerate_cycles(&g, 12).unwrap().remove(0);
        assert!(matches!(
            check_hamiltonian_chord_pattern(&g, &c),
            Err(Error::NotHamiltonian { len: 12, n: 14 })
        ));
    }

    #[test]
    fn opposite_chord_fails_with_position() {
        // replace chords 1-6 and 3-8 by 1-8 and 3-6
        let mut g = heawood();
        g.remove_edge(1, 6).unwrap();
        g.remove_edge(3, 8).unwrap();
        g.add_edge(1, 8).unwrap();
        g.add_edge(3, 6).unwrap();
        let outer = Cycle::new((1..=14).collect()).unwrap();
        let v = check_hamiltonian_chord_pattern(&g, &outer).unwrap();
        assert!(!v.pass);
        match v.witness {
            Witness::Violation { vertices, position, .. } => {
                assert_eq!(position, Some(1));
                assert_eq!(vertices, vec![1, 8]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn complement_on_first_twelve_cycle() {
        let g = heawood();
        let c = enumerate_cycles(&g, 12).unwrap().remove(0);
        let v = check_twelve_cycle_complement(&g, &c).unwrap();
        assert!(v.pass, "{v:?}");
        let Witness::ComplementStructure { v_positions, chords, .. } = v.witness else {
            panic!("expected structure");
        };
        assert_eq!(v_positions[1] - v_positions[0], 4);
        assert_eq!(chords, vec![(2, 7), (3, 10), (6, 11)]);
    }

    #[test]
    fn complement_rejects_wrong_size() {
        let g = heawood();
        let c = enumerate_cycles(&g, 10).unwrap().remove(0);
        assert_eq!(check_twelve_cycle_complement(&g, &c), Err(Error::BadComplement(4)));
    }

    #[test]
    fn pair_one_four() {
        let g = heawood();
        let got = twelve_cycles_avoiding_pair(&g, 1, 4).unwrap();
        let expect = vec![
            Cycle::new(vec![2, 3, 8, 7, 6, 5, 10, 9, 14, 13, 12, 11]).unwrap(),
            Cycle::new(vec![2, 3, 8, 9, 14, 13, 12, 7, 6, 5, 10, 11]).unwrap(),
        ];
        assert_eq!(got, expect);
        assert!(twelve_cycles_avoiding_pair(&g, 1, 1).is_err());
    }

    #[test]
    fn distance_three_pair_count() {
        let pairs = distance_three_pairs(&heawood());
        assert_eq!(pairs.len(), 28);
        assert!(pairs.contains(&(1, 4)));
    }

    #[test]
    fn first_disjoint_pair_matches_template() {
        let g = heawood();
        let p = disjoint_six_cycle_pairs(&g).remove(0);
        let v = check_disjoint_pair_configuration(&g, &p).unwrap();
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn non_adjacent_off_pair_vertices_fail() {
        // two hexagons 1..6 and 7..12, plus 13 and 14 hanging off them
        let c6 = cycle_graph(6).unwrap();
        let mut g = c6.disjoint_union(&c6).unwrap();
        g.push_vertex(13).unwrap();
        g.push_vertex(14).unwrap();
        for (a, b) in [(13, 1), (13, 10), (14, 7), (14, 4)] {
            g.add_edge(a, b).unwrap();
        }
        let p = disjoint_six_cycle_pairs(&g).remove(0);
        let v = check_disjoint_pair_configuration(&g, &p).unwrap();
        assert!(!v.pass);
        assert!(matches!(v.witness, Witness::Violation { ref vertices, .. } if vertices == &vec![13, 14]));
    }
}
