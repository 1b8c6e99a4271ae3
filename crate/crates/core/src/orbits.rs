//! Group actions on cycles and disjoint cycle pairs, and orbit partitions.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cycles::{Cycle, DisjointPair};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Objects a vertex permutation can move.
pub trait Actable: Clone + Ord + fmt::Display {
    fn act(&self, p: &Permutation) -> Self;
}

/// Apply `p` to every vertex of `c` and re-canonicalise.
pub fn act_on_cycle(p: &Permutation, c: &Cycle) -> Cycle {
    let image = c.vertices().iter().map(|&v| p.apply_label(v)).collect();
    Cycle::new(image).expect("a bijection keeps cycle vertices distinct")
}

impl Actable for Cycle {
    fn act(&self, p: &Permutation) -> Cycle {
        act_on_cycle(p, self)
    }
}

impl Actable for DisjointPair {
    fn act(&self, p: &Permutation) -> DisjointPair {
        DisjointPair::new(act_on_cycle(p, self.first()), act_on_cycle(p, self.second()))
            .expect("a bijection keeps the cycles disjoint")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Cycles(usize),
    DisjointSixCyclePairs,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Cycles(k) => write!(f, "{k}-cycles"),
            FamilyKind::DisjointSixCyclePairs => write!(f, "disjoint 6-cycle pairs"),
        }
    }
}

impl Serialize for FamilyKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition<T> {
    pub family_kind: FamilyKind,
    pub group_order: usize,
    /// Each orbit sorted; orbits ordered by their smallest member.
    pub orbits: Vec<Vec<T>>,
}

impl<T> OrbitPartition<T> {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Stabiliser order of each orbit's members, `None` when the orbit size
    /// does not divide the group order.
    pub fn stabilizer_orders(&self) -> Vec<Option<usize>> {
        self.orbits
            .iter()
            .map(|o| self.group_order.is_multiple_of(o.len()).then(|| self.group_order / o.len()))
            .collect()
    }

    pub fn summary(&self) -> OrbitSummary {
        OrbitSummary {
            family_kind: self.family_kind,
            group_order: self.group_order,
            orbit_sizes: self.orbit_sizes(),
            transitive: self.is_transitive(),
        }
    }
}

/// JSON shape: `{family_kind, group_order, orbit_sizes, transitive}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub family_kind: FamilyKind,
    pub group_order: usize,
    pub orbit_sizes: Vec<usize>,
    pub transitive: bool,
}

/// Partition `family` into orbits by breadth-first closure under the group's
/// generators. Fails if a generator carries a member outside the family.
pub fn orbit_partition<T: Actable>(
    group: &PermGroup,
    family: &[T],
    kind: FamilyKind,
) -> Result<OrbitPartition<T>> {
    let members: BTreeSet<&T> = family.iter().collect();
    let mut assigned: BTreeSet<T> = BTreeSet::new();
    let mut orbits = Vec::new();
    for start in &members {
        if assigned.contains(*start) {
            continue;
        }
        let mut orbit = BTreeSet::from([(*start).clone()]);
        let mut queue = VecDeque::from([(*start).clone()]);
        while let Some(x) = queue.pop_front() {
            for g in group.generators() {
                let y = x.act(g);
                if !members.contains(&y) {
                    return Err(Error::FamilyNotClosed(format!("{g} sends {x} to {y}")));
                }
                if orbit.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        assigned.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect::<Vec<T>>());
    }
    Ok(OrbitPartition {
        family_kind: kind,
        group_order: group.order(),
        orbits,
    })
}

pub fn is_transitive<T: Actable>(group: &PermGroup, family: &[T], kind: FamilyKind) -> Result<bool> {
    Ok(orbit_partition(group, family, kind)?.is_transitive())
}
