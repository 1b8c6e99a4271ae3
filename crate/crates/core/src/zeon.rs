//! Cycle counting with nilpotent adjacency matrices over the zeon algebra.
//!
//! The algebra is generated by commuting symbols `z_v`, one per vertex, with
//! `z_v * z_v = 0`. A basis monomial is therefore a vertex subset, stored here
//! as a bitmask. The nilpotent adjacency matrix carries `z_j` at `(i, j)` for
//! every edge `{i, j}`, so the `(i, i)` entry of its `k`-th power sums the
//! closed `k`-walks from `i` that never revisit a vertex. Each `k`-cycle
//! contributes `2k` such walks (start point and direction).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Integer combination of squarefree monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZeonElement {
    terms: BTreeMap<u64, i64>,
}

impl ZeonElement {
    pub fn zero() -> ZeonElement {
        ZeonElement::default()
    }

    pub fn scalar(c: i64) -> ZeonElement {
        ZeonElement::monomial(0, c)
    }

    /// The generator of vertex index `v`.
    pub fn generator(v: usize) -> ZeonElement {
        ZeonElement::monomial(1 << v, 1)
    }

    pub fn monomial(subset: u64, coefficient: i64) -> ZeonElement {
        let mut terms = BTreeMap::new();
        if coefficient != 0 {
            terms.insert(subset, coefficient);
        }
        ZeonElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u64, i64)>) -> Result<ZeonElement> {
        let mut out = ZeonElement::zero();
        for (s, c) in terms {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, subset: u64) -> i64 {
        self.terms.get(&subset).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest subset size among stored monomials.
    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().map(|s| s.count_ones()).max()
    }

    pub fn coefficient_sum(&self) -> Result<i128> {
        Ok(self.terms.values().map(|&c| c as i128).sum())
    }

    fn add_term(&mut self, subset: u64, coefficient: i64) -> Result<()> {
        if coefficient == 0 {
            return Ok(());
        }
        match self.terms.entry(subset) {
            Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            Entry::Occupied(mut e) => {
                let sum = e
                    .get()
                    .checked_add(coefficient)
                    .ok_or(Error::CoefficientOverflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ZeonElement) -> Result<ZeonElement> {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &ZeonElement) -> Result<ZeonElement> {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product keeping only monomials of at most `max_grade` vertices.
    pub fn mul_truncated(&self, other: &ZeonElement, max_grade: u32) -> Result<ZeonElement> {
        let mut out = ZeonElement::zero();
        self.mul_accumulate(other, max_grade, &mut out)?;
        Ok(out)
    }

    fn mul_accumulate(&self, other: &ZeonElement, max_grade: u32, out: &mut ZeonElement) -> Result<()> {
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if s & t != 0 || (s | t).count_ones() > max_grade {
                    continue;
                }
                let c = a.checked_mul(b).ok_or(Error::CoefficientOverflow)?;
                out.add_term(s | t, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZeonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if s != 0 {
                let idx: Vec<String> = crate::graph::bits(s).map(|v| (v + 1).to_string()).collect();
                write!(f, "z{{{}}}", idx.join(","))?;
            }
        }
        Ok(())
    }
}

/// Product of two zeon elements.
pub fn zeon_mul(a: &ZeonElement, b: &ZeonElement) -> Result<ZeonElement> {
    a.checked_mul(b)
}

/// Square matrix of zeon elements, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeonMatrix {
    n: usize,
    entries: Vec<ZeonElement>,
}

impl ZeonMatrix {
    pub fn zero(n: usize) -> ZeonMatrix {
        ZeonMatrix {
            n,
            entries: vec![ZeonElement::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ZeonElement {
        &self.entries[i * self.n + j]
    }

    pub fn nonzero_entries(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ZeonElement::is_zero)
    }

    /// `self * rhs`, dropping monomials above `max_grade`. Output entries are
    /// computed independently, so the result does not depend on scheduling.
    pub fn mul_truncated(&self, rhs: &ZeonMatrix, max_grade: u32) -> Result<ZeonMatrix> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let entries = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let mut acc = ZeonElement::zero();
                for l in 0..n {
                    let (a, b) = (self.get(i, l), rhs.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        a.mul_accumulate(b, max_grade, &mut acc)?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZeonMatrix { n, entries })
    }

    pub fn trace(&self) -> Result<ZeonElement> {
        (0..self.n).try_fold(ZeonElement::zero(), |acc, i| acc.checked_add(self.get(i, i)))
    }
}

/// The nilpotent adjacency matrix: `z_j` at `(i, j)` for every edge.
pub fn nilpotent_adjacency(g: &Graph) -> ZeonMatrix {
    let mut m = ZeonMatrix::zero(g.n());
    for (i, j) in g.edges() {
        m.entries[i * g.n() + j] = ZeonElement::generator(j);
        m.entries[j * g.n() + i] = ZeonElement::generator(i);
    }
    m
}

/// Powers `psi^1, psi^2, ..., psi^max_k` by repeated multiplication, grade
/// truncated at `max_k`. `visit` sees each power with its exponent.
fn for_each_power(
    g: &Graph,
    max_k: usize,
    visit: &mut dyn FnMut(usize, &ZeonMatrix) -> Result<()>,
) -> Result<()> {
    let psi = nilpotent_adjacency(g);
    let mut power = psi.clone();
    visit(1, &power)?;
    for k in 2..=max_k {
        power = power.mul_truncated(&psi, max_k as u32)?;
        visit(k, &power)?;
    }
    Ok(())
}

fn cycles_from_trace(trace: &ZeonElement, k: usize) -> Result<u64> {
    let sum = trace.coefficient_sum()?;
    let divisor = 2 * k;
    if sum % divisor as i128 != 0 || sum < 0 {
        return Err(Error::TraceNotDivisible { sum, divisor });
    }
    u64::try_from(sum / divisor as i128).map_err(|_| Error::CoefficientOverflow)
}

/// Number of simple `k`-cycles, read off the trace of `psi^k`.
pub fn count_cycles_zeon(g: &Graph, k: usize) -> Result<u64> {
    if k < 3 || k > g.n() {
        return Err(Error::LengthOutOfRange { k, n: g.n() });
    }
    let mut count = 0;
    for_each_power(g, k, &mut |exp, m| {
        if exp == k {
            count = cycles_from_trace(&m.trace()?, k)?;
        }
        Ok(())
    })?;
    Ok(count)
}

/// Cycle counts for every length `3..=n` from one run of powers. Lengths
/// with no cycles are omitted.
pub fn zeon_census(g: &Graph) -> Result<BTreeMap<usize, u64>> {
    let mut census = BTreeMap::new();
    if g.n() < 3 {
        return Ok(census);
    }
    for_each_power(g, g.n(), &mut |k, m| {
        if k >= 3 {
            let c = cycles_from_trace(&m.trace()?, k)?;
            if c > 0 {
                census.insert(k, c);
            }
        }
        Ok(())
    })?;
    Ok(census)
}
