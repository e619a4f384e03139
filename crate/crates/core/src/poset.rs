//! Finite posets stored as dense `≤` tables.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relation table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric on elements {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive on elements {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("unknown element index {0}")]
    UnknownElement(usize),
    #[error("empty element set has no join")]
    EmptyJoin,
    #[error("elements {elements:?} have upper bounds but no least one")]
    NotASemilattice { elements: Vec<usize> },
}

/// A finite poset over labels `T`. Elements are addressed by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<bool>,
}

impl<T> FinitePoset<T> {
    /// Builds a poset from a row-major `≤` table, checking the partial order
    /// axioms.
    pub fn new(elements: Vec<T>, leq: Vec<bool>) -> Result<Self, PosetError> {
        let n = elements.len();
        if leq.len() != n * n {
            return Err(PosetError::TableSize {
                expected: n * n,
                found: leq.len(),
            });
        }
        let p = Self { elements, leq };
        p.check_axioms()?;
        Ok(p)
    }

    /// Builds a poset from a `≤` predicate on labels.
    pub fn from_relation<F>(elements: Vec<T>, leq: F) -> Result<Self, PosetError>
    where
        F: Fn(&T, &T) -> bool,
    {
        let n = elements.len();
        let mut table = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = leq(&elements[i], &elements[j]);
            }
        }
        Self::new(elements, table)
    }

    /// Skips the axiom scan; for constructions that are orders by design.
    pub(crate) fn from_table_unchecked(elements: Vec<T>, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), elements.len() * elements.len());
        let p = Self { elements, leq };
        debug_assert!(p.check_axioms().is_ok());
        p
    }

    pub fn check_axioms(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(PosetError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    return Err(PosetError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(PosetError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &T {
        &self.elements[x]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.elements.len() + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    fn check_index(&self, x: usize) -> Result<(), PosetError> {
        if x >= self.len() {
            return Err(PosetError::UnknownElement(x));
        }
        Ok(())
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !(0..self.len()).any(|y| self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !(0..self.len()).any(|y| self.lt(x, y)))
            .collect()
    }

    /// Indices of `{y ≤ x}` (or `{y < x}` when `strict`), ascending.
    pub fn lower_set_indices(&self, x: usize, strict: bool) -> Result<Vec<usize>, PosetError> {
        self.check_index(x)?;
        Ok((0..self.len())
            .filter(|&y| if strict { self.lt(y, x) } else { self.leq(y, x) })
            .collect())
    }

    /// The induced subposet on the given indices, in the given order.
    pub fn induced(&self, indices: &[usize]) -> Result<Self, PosetError>
    where
        T: Clone,
    {
        for &i in indices {
            self.check_index(i)?;
        }
        let m = indices.len();
        let mut table = vec![false; m * m];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                table[a * m + b] = self.leq(i, j);
            }
        }
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Ok(Self::from_table_unchecked(elements, table))
    }

    /// The induced subposet `P_{≤x}` or `P_{<x}`.
    pub fn lower_set(&self, x: usize, strict: bool) -> Result<Self, PosetError>
    where
        T: Clone,
    {
        let idx = self.lower_set_indices(x, strict)?;
        self.induced(&idx)
    }

    /// Common upper bounds of `set`.
    pub fn upper_bounds(&self, set: &[usize]) -> Result<Vec<usize>, PosetError> {
        for &s in set {
            self.check_index(s)?;
        }
        Ok((0..self.len())
            .filter(|&z| set.iter().all(|&s| self.leq(s, z)))
            .collect())
    }

    /// Common lower bounds of `set`.
    pub fn lower_bounds(&self, set: &[usize]) -> Result<Vec<usize>, PosetError> {
        for &s in set {
            self.check_index(s)?;
        }
        Ok((0..self.len())
            .filter(|&z| set.iter().all(|&s| self.leq(z, s)))
            .collect())
    }

    fn least_of(&self, candidates: &[usize]) -> Option<usize> {
        candidates
            .iter()
            .copied()
            .find(|&c| candidates.iter().all(|&d| self.leq(c, d)))
    }

    fn greatest_of(&self, candidates: &[usize]) -> Option<usize> {
        candidates
            .iter()
            .copied()
            .find(|&c| candidates.iter().all(|&d| self.leq(d, c)))
    }

    /// Least common upper bound of `set`.
    ///
    /// `Ok(None)` when there is no upper bound at all; an error when upper
    /// bounds exist without a least one.
    pub fn join(&self, set: &[usize]) -> Result<Option<usize>, PosetError> {
        if set.is_empty() {
            return Err(PosetError::EmptyJoin);
        }
        let ubs = self.upper_bounds(set)?;
        if ubs.is_empty() {
            return Ok(None);
        }
        match self.least_of(&ubs) {
            Some(j) => Ok(Some(j)),
            None => Err(PosetError::NotASemilattice {
                elements: set.to_vec(),
            }),
        }
    }

    /// Every pair's upper-bound set and lower-bound set is empty or has a
    /// least (resp. greatest) element.
    pub fn is_semilattice(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in (x + 1)..n {
                let ubs = self.upper_bounds(&[x, y]).expect("valid indices");
                if !ubs.is_empty() && self.least_of(&ubs).is_none() {
                    return false;
                }
                let lbs = self.lower_bounds(&[x, y]).expect("valid indices");
                if !lbs.is_empty() && self.greatest_of(&lbs).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// All `(x, y)` with `y` covering `x`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All nonempty chains, each listed bottom to top. Enumeration order is
    /// depth first from each element in index order.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let above: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| self.lt(x, y)).collect())
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|x| vec![x]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty chain");
            for &y in above[last].iter().rev() {
                let mut next = chain.clone();
                next.push(y);
                stack.push(next);
            }
            out.push(chain);
        }
        out
    }

    /// Number of nonempty chains, without materializing them.
    pub fn chain_count(&self) -> u128 {
        let n = self.len();
        // Count chains by their top element over a linear extension.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&y| self.lt(y, x)).count());
        let mut ending = vec![0u128; n];
        for &x in &order {
            let below: u128 = (0..n)
                .filter(|&y| self.lt(y, x))
                .map(|y| ending[y])
                .fold(0u128, |a, b| a.saturating_add(b));
            ending[x] = below.saturating_add(1);
        }
        ending.iter().fold(0u128, |a, &b| a.saturating_add(b))
    }

    /// `Bd(P)`: nonempty chains ordered by inclusion. Chains are index lists
    /// into `self`, ascending in the order of `self`.
    pub fn barycentric_subdivision(&self) -> FinitePoset<Vec<usize>> {
        let chains = self.chains();
        let m = chains.len();
        let mut table = vec![false; m * m];
        for (a, ca) in chains.iter().enumerate() {
            for (b, cb) in chains.iter().enumerate() {
                table[a * m + b] = ca.iter().all(|x| cb.contains(x));
            }
        }
        FinitePoset::from_table_unchecked(chains, table)
    }

    /// Relabels elements, keeping the order.
    pub fn map_labels<U, F: FnMut(&T) -> U>(&self, f: F) -> FinitePoset<U> {
        FinitePoset {
            elements: self.elements.iter().map(f).collect(),
            leq: self.leq.clone(),
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::FinitePoset;

    pub fn chain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_relation((0..n).collect(), |a, b| a <= b).unwrap()
    }

    pub fn antichain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_relation((0..n).collect(), |a, b| a == b).unwrap()
    }

    /// Subsets of `{0..k}` (as bitmasks, nonempty) ordered by inclusion.
    pub fn boolean(k: u32) -> FinitePoset<u32> {
        FinitePoset::from_relation((1..(1u32 << k)).collect(), |a, b| a & b == *a).unwrap()
    }

    /// a1, a2, a3 < p: intersection lattice of three concurrent lines.
    pub fn three_lines() -> FinitePoset<&'static str> {
        FinitePoset::from_relation(vec!["a1", "a2", "a3", "p"], |a, b| a == b || *b == "p")
            .unwrap()
    }

    /// a, b < c, d.
    pub fn bowtie() -> FinitePoset<char> {
        FinitePoset::from_relation(vec!['a', 'b', 'c', 'd'], |x, y| {
            x == y || (matches!(x, 'a' | 'b') && matches!(y, 'c' | 'd'))
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn rejects_non_orders() {
        let cyc = FinitePoset::new(vec![0, 1], vec![true, true, true, true]);
        assert_eq!(cyc.unwrap_err(), PosetError::NotAntisymmetric(0, 1));
        let irreflexive = FinitePoset::new(vec![0], vec![false]);
        assert_eq!(irreflexive.unwrap_err(), PosetError::NotReflexive(0));
        // 0 <= 1 <= 2 without 0 <= 2
        let t = vec![true, true, false, false, true, true, false, false, true];
        assert!(matches!(
            FinitePoset::new(vec![0, 1, 2], t),
            Err(PosetError::NotTransitive(0, 1, 2))
        ));
        assert!(matches!(
            FinitePoset::new(vec![0, 1], vec![true]),
            Err(PosetError::TableSize { .. })
        ));
    }

    #[test]
    fn minimal_elements() {
        assert_eq!(chain(3).minimal_elements(), vec![0]);
        assert_eq!(antichain(3).minimal_elements(), vec![0, 1, 2]);
        assert_eq!(three_lines().minimal_elements(), vec![0, 1, 2]);
    }

    #[test]
    fn lower_sets() {
        let c = chain(3);
        let below = c.lower_set(1, true).unwrap();
        assert_eq!(below.elements(), &[0]);
        assert!(c.lower_set(0, true).unwrap().is_empty());
        assert_eq!(c.lower_set(1, false).unwrap().elements(), &[0, 1]);
        let l = three_lines();
        let below_top = l.lower_set(3, true).unwrap();
        assert_eq!(below_top.elements(), &["a1", "a2", "a3"]);
        assert!(below_top.covering_pairs().is_empty());
        assert_eq!(
            c.lower_set(7, true).unwrap_err(),
            PosetError::UnknownElement(7)
        );
    }

    #[test]
    fn joins() {
        let c = chain(3);
        assert_eq!(c.join(&[0, 1]).unwrap(), Some(1));
        assert_eq!(antichain(2).join(&[0, 1]).unwrap(), None);
        assert_eq!(three_lines().join(&[0, 1]).unwrap(), Some(3));
        assert!(matches!(
            bowtie().join(&[0, 1]),
            Err(PosetError::NotASemilattice { .. })
        ));
        assert_eq!(c.join(&[]), Err(PosetError::EmptyJoin));
        for x in 0..4 {
            assert_eq!(three_lines().join(&[x]).unwrap(), Some(x));
        }
    }

    #[test]
    fn semilattice_check() {
        assert!(boolean(2).is_semilattice());
        assert!(three_lines().is_semilattice());
        assert!(antichain(4).is_semilattice());
        assert!(!bowtie().is_semilattice());
    }

    #[test]
    fn subdivision() {
        let single = chain(1).barycentric_subdivision();
        assert_eq!(single.len(), 1);
        let bd = chain(2).barycentric_subdivision();
        assert_eq!(bd.len(), 3);
        let top = bd.elements().iter().position(|c| c.len() == 2).unwrap();
        assert_eq!(bd.maximal_elements(), vec![top]);
        assert_eq!(bd.covering_pairs().len(), 2);
        let anti = antichain(3).barycentric_subdivision();
        assert_eq!(anti.len(), 3);
        assert!(anti.covering_pairs().is_empty());
    }

    #[test]
    fn covering() {
        assert_eq!(chain(3).covering_pairs(), vec![(0, 1), (1, 2)]);
        assert!(antichain(3).covering_pairs().is_empty());
        // Face poset of a triangle: 6 vertex-edge + 3 edge-triangle covers.
        assert_eq!(boolean(3).covering_pairs().len(), 9);
    }

    #[test]
    fn chain_counts_agree() {
        for p in [boolean(3), boolean(4)] {
            assert_eq!(p.chain_count(), p.chains().len() as u128);
        }
        assert_eq!(chain(3).chains().len(), 7);
        assert_eq!(three_lines().chain_count(), 7);
    }

    #[test]
    fn induced_is_restriction() {
        let b = boolean(3);
        let idx = b.lower_set_indices(6, false).unwrap();
        let sub = b.lower_set(6, false).unwrap();
        for (a, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                assert_eq!(sub.leq(a, c), b.leq(i, j));
            }
        }
    }
}
