//! Permutations of `1..=degree` and extensionally stored permutation groups.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of the points `1..=degree`. Stored 0-based; rendered 1-based
/// as an image list, e.g. `(2 3 1)` sends 1 to 2, 2 to 3 and 3 to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based images.
    pub fn from_one_based(images: &[u32]) -> Result<Permutation> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("point 0 is not allowed".into()));
        }
        Permutation::from_images(images.iter().map(|&x| x as usize - 1).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Image of a 1-based point. Points beyond the degree are fixed.
    pub fn apply_label(&self, label: u32) -> u32 {
        match (label as usize).checked_sub(1) {
            Some(i) if i < self.degree() => self.images[i] as u32 + 1,
            _ => label,
        }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPermutation(format!("{s:?} is not parenthesised")))?;
        let images = inner
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_one_based(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A finite permutation group with every element listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

/// Breadth-first closure of the generators under right multiplication.
fn closure(degree: usize, generators: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.compose(s);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen
}

impl PermGroup {
    /// The group generated by `generators`, which are kept as given (minus
    /// duplicates and the identity).
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "{bad} has degree {}, expected {degree}",
                bad.degree()
            )));
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let mut elements: Vec<Permutation> = closure(degree, &gens).into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup {
            degree,
            elements,
            generators: gens,
        })
    }

    /// Wrap a complete element list, which must be closed under composition.
    /// A small generating set is then chosen greedily.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<PermGroup> {
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        if let Some(bad) = elements.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!("{bad} has the wrong degree")));
        }
        let generators = greedy_generators(degree, &elements);
        let generated = closure(degree, &generators);
        if generated.len() != elements.len() || !elements.iter().all(|e| generated.contains(e)) {
            return Err(Error::InvalidPermutation(
                "element list is not closed under composition".into(),
            ));
        }
        Ok(PermGroup {
            degree,
            elements,
            generators,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted by image list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Same group, different generating set. The generators must lie in the
    /// group and generate all of it.
    pub fn with_generators(&self, generators: Vec<Permutation>) -> Result<PermGroup> {
        let g = PermGroup::from_generators(self.degree, generators)?;
        if g.elements != self.elements {
            return Err(Error::InvalidPermutation(
                "generators do not generate this group".into(),
            ));
        }
        Ok(g)
    }

    /// Closed under composition and inverses, and contains the identity.
    pub fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.elements {
            *h.entry(e.order()).or_default() += 1;
        }
        h
    }

    /// Orbit of a 1-based point, sorted.
    pub fn orbit_of_point(&self, label: u32) -> Vec<u32> {
        let mut orbit: Vec<u32> = self.elements.iter().map(|e| e.apply_label(label)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            degree: self.degree,
            order: self.order(),
            generators: self.generators.clone(),
        }
    }
}

/// JSON shape of a group: `{degree, order, generators}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
}

/// Pick generators deterministically: each round adds the element (scanned
/// in sorted order, first one wins ties) whose addition generates the
/// largest subgroup, stopping early on one that completes the group.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut generated = closure(degree, &gens);
    while generated.len() < elements.len() {
        let mut best: Option<(usize, &Permutation, HashSet<Permutation>)> = None;
        for cand in elements {
            if generated.contains(cand) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(cand.clone());
            let sub = closure(degree, &trial);
            let size = sub.len();
            if best.as_ref().is_none_or(|(b, _, _)| size > *b) {
                best = Some((size, cand, sub));
            }
            if size == elements.len() {
                break;
            }
        }
        let Some((_, cand, sub)) = best else {
            break;
        };
        gens.push(cand.clone());
        generated = sub;
    }
    gens
}
