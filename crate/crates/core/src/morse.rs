//! The acyclic matching on `Bd(N(L))` whose critical cells are exactly
//! `Δ(L)`, its verification, and the resulting sequence of elementary
//! collapses.
//!
//! A simplex of `Bd(N(L))` is a chain `S_1 ⊊ ... ⊊ S_t` of atom sets that
//! each have a join. An atom set is *complete* when it contains every atom
//! below its join, and its *completion* is the set of all such atoms. The
//! pivot of a chain is its incomplete entry of highest index (1-based). A
//! chain with a pivot is matched with the chain obtained by inserting or
//! removing the completion of the pivot.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::arrangement::{subspace_of_vertex_set, ArrangementError, AtomSet, IntersectionLattice};
use crate::complexes::{Simplex, SimplicialComplex};
use crate::par::{self, Execution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("simplex index {0} is out of range")]
    UnknownSimplex(usize),
    #[error("simplex {tau} does not cover simplex {sigma}")]
    NotCovering { sigma: usize, tau: usize },
    #[error("simplex {0} occurs in more than one pair")]
    Overlap(usize),
    #[error("unmatched simplex {simplex} has matched face {face}")]
    NotAComplex { simplex: usize, face: usize },
    #[error("no free pair among the {remaining} remaining pairs")]
    StuckCollapse { remaining: usize },
    #[error("atom sets must be nonempty, sorted and strictly increasing by inclusion")]
    InvalidChain,
}

/// A simplex of `Bd(N(L))` as a strictly increasing chain of atom sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainSimplex {
    chain: Vec<AtomSet>,
}

impl ChainSimplex {
    pub fn new(chain: Vec<AtomSet>) -> Result<Self, MorseError> {
        let sorted = |s: &AtomSet| !s.is_empty() && s.windows(2).all(|w| w[0] < w[1]);
        if chain.is_empty() || !chain.iter().all(sorted) {
            return Err(MorseError::InvalidChain);
        }
        let increasing = chain
            .windows(2)
            .all(|w| w[0].len() < w[1].len() && crate::complexes::is_subset(&w[0], &w[1]));
        if !increasing {
            return Err(MorseError::InvalidChain);
        }
        Ok(Self { chain })
    }

    /// Reads a simplex of `Bd(N(L))` as a chain.
    pub fn from_simplex(complex: &SimplicialComplex<AtomSet>, simplex: &[usize]) -> Self {
        let mut chain: Vec<AtomSet> = simplex.iter().map(|&v| complex.vertex(v).clone()).collect();
        chain.sort_by_key(|s| s.len());
        Self { chain }
    }

    pub fn sets(&self) -> &[AtomSet] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn top(&self) -> &AtomSet {
        self.chain.last().expect("chains are nonempty")
    }
}

pub(crate) fn fmt_atom_set(f: &mut impl fmt::Write, set: &[usize]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, a) in set.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "a{}", a + 1)?;
    }
    write!(f, "}}")
}

impl fmt::Display for ChainSimplex {
    /// `({a1,a2} < {a1,a2,a3})`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.chain.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            fmt_atom_set(f, s)?;
        }
        write!(f, ")")
    }
}

/// A set without a join counts as incomplete.
pub fn is_complete(lattice: &IntersectionLattice, atoms: &[usize]) -> bool {
    match lattice.join_of_atoms(atoms) {
        Ok(Some(x)) => lattice.atoms_below(x) == atoms,
        _ => false,
    }
}

pub fn completion(lattice: &IntersectionLattice, atoms: &[usize]) -> Result<AtomSet, ArrangementError> {
    match lattice.join_of_atoms(atoms)? {
        Some(x) => Ok(lattice.atoms_below(x)),
        None => Err(ArrangementError::NoJoin {
            atoms: atoms.to_vec(),
        }),
    }
}

/// The pivot of `chain` and its 1-based index, or `None` when every entry is
/// complete.
pub fn pivot(lattice: &IntersectionLattice, chain: &ChainSimplex) -> Option<(AtomSet, usize)> {
    chain
        .sets()
        .iter()
        .enumerate()
        .rev()
        .find(|(_, s)| !is_complete(lattice, s))
        .map(|(i, s)| (s.clone(), i + 1))
}

/// How a simplex takes part in a matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Matched upward with the given coface.
    Forward(usize),
    /// Matched downward with the given face.
    Backward(usize),
    Critical,
}

/// Disjoint covering pairs `(σ, τ)` on the face poset of a complex, by
/// simplex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    roles: Vec<Role>,
}

impl Matching {
    pub fn new<V>(complex: &SimplicialComplex<V>, pairs: Vec<(usize, usize)>) -> Result<Self, MorseError> {
        let mut roles = vec![Role::Critical; complex.len()];
        for &(sigma, tau) in &pairs {
            for s in [sigma, tau] {
                if s >= complex.len() {
                    return Err(MorseError::UnknownSimplex(s));
                }
                if roles[s] != Role::Critical {
                    return Err(MorseError::Overlap(s));
                }
            }
            if sigma == tau {
                return Err(MorseError::Overlap(sigma));
            }
            let (s, t) = (complex.simplex(sigma), complex.simplex(tau));
            if t.len() != s.len() + 1 || !crate::complexes::is_subset(s, t) {
                return Err(MorseError::NotCovering { sigma, tau });
            }
            roles[sigma] = Role::Forward(tau);
            roles[tau] = Role::Backward(sigma);
        }
        Ok(Self { pairs, roles })
    }

    pub fn empty<V>(complex: &SimplicialComplex<V>) -> Self {
        Self {
            pairs: Vec::new(),
            roles: vec![Role::Critical; complex.len()],
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn role(&self, simplex: usize) -> Role {
        self.roles[simplex]
    }

    /// `W(σ)` for `σ` matched upward.
    pub fn partner_up(&self, sigma: usize) -> Option<usize> {
        match self.roles[sigma] {
            Role::Forward(t) => Some(t),
            _ => None,
        }
    }

    pub fn forward(&self) -> Vec<usize> {
        self.select(|r| matches!(r, Role::Forward(_)))
    }

    pub fn backward(&self) -> Vec<usize> {
        self.select(|r| matches!(r, Role::Backward(_)))
    }

    pub fn critical(&self) -> Vec<usize> {
        self.select(|r| r == Role::Critical)
    }

    fn select(&self, pred: impl Fn(Role) -> bool) -> Vec<usize> {
        (0..self.roles.len()).filter(|&i| pred(self.roles[i])).collect()
    }
}

/// Where a simplex of `Bd(N(L))` lands by the pivot rule alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    /// No pivot.
    Critical,
    /// Pivot whose completion is absent; matched with the given coface.
    Forward(usize),
    /// Pivot whose completion is present; matched with the given face.
    Backward(usize),
}

/// Completeness and completion per vertex of `Bd(N(L))`.
struct VertexData {
    complete: Vec<bool>,
    completion: Vec<usize>,
}

impl VertexData {
    fn new(lattice: &IntersectionLattice, complex: &SimplicialComplex<AtomSet>) -> Self {
        let by_label: HashMap<&AtomSet, usize> =
            complex.vertices().iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut complete = Vec::with_capacity(complex.num_vertices());
        let mut completion_vertex = Vec::with_capacity(complex.num_vertices());
        for s in complex.vertices() {
            let c = completion(lattice, s).expect("nerve simplices have joins");
            complete.push(&c == s);
            completion_vertex.push(by_label[&c]);
        }
        Self {
            complete,
            completion: completion_vertex,
        }
    }

    fn classify(&self, complex: &SimplicialComplex<AtomSet>, simplex: &Simplex) -> Class {
        // Chain order is by label size; pick the largest incomplete entry.
        let piv = simplex
            .iter()
            .copied()
            .filter(|&v| !self.complete[v])
            .max_by_key(|&v| complex.vertex(v).len());
        let Some(piv) = piv else {
            return Class::Critical;
        };
        let c = self.completion[piv];
        let mut other: Simplex = simplex.clone();
        match simplex.binary_search(&c) {
            Ok(pos) => {
                other.remove(pos);
                Class::Backward(complex.index_of(&other).expect("faces are present"))
            }
            Err(pos) => {
                other.insert(pos, c);
                Class::Forward(complex.index_of(&other).expect("completion extends the chain"))
            }
        }
    }
}

/// Classifies every simplex of `Bd(N(L))` by the pivot rule.
pub fn classify(
    lattice: &IntersectionLattice,
    complex: &SimplicialComplex<AtomSet>,
    exec: Execution,
) -> Vec<Class> {
    let data = VertexData::new(lattice, complex);
    par::map_slice(exec, complex.simplices(), |s| data.classify(complex, s))
}

pub fn build_matching(lattice: &IntersectionLattice, complex: &SimplicialComplex<AtomSet>) -> Matching {
    build_matching_with(lattice, complex, Execution::default())
}

/// The pivot matching on `complex = Bd(N(L))`.
pub fn build_matching_with(
    lattice: &IntersectionLattice,
    complex: &SimplicialComplex<AtomSet>,
    exec: Execution,
) -> Matching {
    let classes = classify(lattice, complex, exec);
    let pairs = classes
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c {
            Class::Forward(t) => Some((i, *t)),
            _ => None,
        })
        .collect();
    Matching::new(complex, pairs).expect("pivot rule pairs are disjoint covers")
}

/// True iff the classification by the pivot rule agrees with the matching's
/// roles: forward, backward and critical partition the complex.
pub fn partition_holds(classes: &[Class], matching: &Matching) -> bool {
    classes.len() == matching.roles.len()
        && classes.iter().zip(&matching.roles).all(|(c, r)| match (c, r) {
            (Class::Critical, Role::Critical) => true,
            (Class::Forward(a), Role::Forward(b)) | (Class::Backward(a), Role::Backward(b)) => a == b,
            _ => false,
        })
        && matching.forward().len() == matching.len()
        && matching.backward().len() == matching.len()
}

/// Cycle search on the modified Hasse diagram: matched edges point up, all
/// other covering edges point down. The matching is acyclic iff this graph
/// is.
pub fn verify_acyclic<V>(complex: &SimplicialComplex<V>, matching: &Matching) -> bool {
    let n = complex.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for tau in 0..n {
        for sigma in complex.facets_of(tau) {
            let (from, to) = if matching.partner_up(sigma) == Some(tau) {
                (sigma, tau)
            } else {
                (tau, sigma)
            };
            out[from].push(to);
            indegree[to] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push(w);
            }
        }
    }
    seen == n
}

/// The pivot-index certificate: `ι(Σ) = ι(W(Σ))` on every pair, and every
/// other upward-matched facet `Σ'` of `W(Σ)` has `ι(Σ') < ι(Σ)`.
pub fn verify_iota_monotone(
    lattice: &IntersectionLattice,
    complex: &SimplicialComplex<AtomSet>,
    matching: &Matching,
) -> bool {
    let iota = |i: usize| pivot(lattice, &ChainSimplex::from_simplex(complex, complex.simplex(i))).map(|p| p.1);
    matching.pairs().iter().all(|&(sigma, tau)| {
        let Some(level) = iota(sigma) else {
            return false;
        };
        if iota(tau) != Some(level) {
            return false;
        }
        complex.facets_of(tau).into_iter().all(|f| {
            f == sigma
                || matching.partner_up(f).is_none()
                || iota(f).is_some_and(|l| l < level)
        })
    })
}

/// The unmatched simplices as a complex (vertices renumbered in order).
pub fn critical_subcomplex<V: Clone>(
    complex: &SimplicialComplex<V>,
    matching: &Matching,
) -> Result<SimplicialComplex<V>, MorseError> {
    let critical = matching.critical();
    for &c in &critical {
        for f in complex.facets_of(c) {
            if matching.role(f) != Role::Critical {
                return Err(MorseError::NotAComplex { simplex: c, face: f });
            }
        }
    }
    Ok(complex
        .subcomplex(&critical)
        .expect("unmatched simplices are downward closed"))
}

/// Checks that `critical` (a subcomplex of `Bd(N(L))`) is `Δ(L)` once each
/// complete atom set is replaced by its join.
pub fn critical_matches_order_complex(
    lattice: &IntersectionLattice,
    critical: &SimplicialComplex<AtomSet>,
) -> bool {
    if critical.vertices().iter().any(|s| !is_complete(lattice, s)) {
        return false;
    }
    let relabeled = critical.map_labels(|s| {
        lattice
            .join_of_atoms(s)
            .expect("valid atoms")
            .expect("complete sets have joins")
    });
    let joins: BTreeSet<usize> = relabeled.vertices().iter().copied().collect();
    joins.len() == relabeled.num_vertices()
        && relabeled.same_labeled(&crate::arrangement::zz_skeleton(lattice))
}

/// One elementary collapse: remove the free face `sigma` and its unique
/// coface `tau`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collapse {
    pub sigma: usize,
    pub tau: usize,
}

/// Orders the pairs of an acyclic matching into elementary collapses.
///
/// At every step the first free pair is taken, in order of decreasing
/// dimension of `τ`, then the sorted vertex labels of `τ`, then of `σ`.
pub fn collapse_sequence<V: Ord + Clone>(
    complex: &SimplicialComplex<V>,
    matching: &Matching,
) -> Result<Vec<Collapse>, MorseError> {
    let labels = |i: usize| {
        let mut l: Vec<V> = complex.simplex(i).iter().map(|&v| complex.vertex(v).clone()).collect();
        l.sort();
        l
    };
    let mut order: Vec<usize> = (0..matching.len()).collect();
    let keys: Vec<_> = matching
        .pairs()
        .iter()
        .map(|&(s, t)| (Reverse(complex.simplex(t).len()), labels(t), labels(s)))
        .collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // rank[p] is the scan position of pair p; pair_of maps simplex -> pair.
    let mut rank = vec![0usize; matching.len()];
    for (pos, &p) in order.iter().enumerate() {
        rank[p] = pos;
    }
    let mut pair_of = vec![usize::MAX; complex.len()];
    for (p, &(s, t)) in matching.pairs().iter().enumerate() {
        pair_of[s] = p;
        pair_of[t] = p;
    }

    let cofacets = complex.cofacets();
    let mut alive = vec![true; complex.len()];
    let mut up_count: Vec<usize> = cofacets.iter().map(|c| c.len()).collect();
    let is_free = |p: usize, alive: &[bool], up_count: &[usize]| {
        let (s, t) = matching.pairs()[p];
        alive[s] && alive[t] && up_count[s] == 1 && up_count[t] == 0
    };

    let mut ready: BTreeSet<usize> = (0..matching.len())
        .filter(|&p| is_free(p, &alive, &up_count))
        .map(|p| rank[p])
        .collect();
    let mut steps = Vec::with_capacity(matching.len());
    while let Some(pos) = ready.pop_first() {
        let p = order[pos];
        let (sigma, tau) = matching.pairs()[p];
        alive[sigma] = false;
        alive[tau] = false;
        let mut touched = complex.facets_of(tau);
        touched.extend(complex.facets_of(sigma));
        for &f in complex.facets_of(tau).iter().chain(&complex.facets_of(sigma)) {
            up_count[f] -= 1;
        }
        for f in touched {
            let q = pair_of[f];
            if q != usize::MAX && is_free(q, &alive, &up_count) {
                ready.insert(rank[q]);
            }
        }
        steps.push(Collapse { sigma, tau });
    }
    if steps.len() != matching.len() {
        return Err(MorseError::StuckCollapse {
            remaining: matching.len() - steps.len(),
        });
    }
    Ok(steps)
}

/// Replays `steps` on `complex`, checking by brute force that each `σ` is a
/// free face of `τ` in the current complex: the live simplices containing
/// `σ` are exactly `σ` and `τ`. Calls `after_step` with the live simplex
/// indices after each removal.
pub fn replay_collapses<V, F>(
    complex: &SimplicialComplex<V>,
    steps: &[Collapse],
    mut after_step: F,
) -> Result<Vec<usize>, usize>
where
    F: FnMut(usize, &[usize]) -> bool,
{
    let mut alive = vec![true; complex.len()];
    for (k, step) in steps.iter().enumerate() {
        let s = complex.simplex(step.sigma);
        let t = complex.simplex(step.tau);
        if !alive[step.sigma] || !alive[step.tau] || t.len() != s.len() + 1 {
            return Err(k);
        }
        let containing: Vec<usize> = (0..complex.len())
            .filter(|&i| alive[i] && crate::complexes::is_subset(s, complex.simplex(i)))
            .collect();
        let mut expected = vec![step.sigma, step.tau];
        expected.sort_unstable();
        if containing != expected {
            return Err(k);
        }
        alive[step.sigma] = false;
        alive[step.tau] = false;
        let live: Vec<usize> = (0..complex.len()).filter(|&i| alive[i]).collect();
        if !after_step(k, &live) {
            return Err(k);
        }
    }
    Ok((0..complex.len()).filter(|&i| alive[i]).collect())
}

/// Text lines `step k: remove σ=<chain>, τ=<chain>`, numbered from 1.
pub fn format_trace(complex: &SimplicialComplex<AtomSet>, steps: &[Collapse]) -> Vec<String> {
    steps
        .iter()
        .enumerate()
        .map(|(k, c)| {
            format!(
                "step {}: remove σ={}, τ={}",
                k + 1,
                ChainSimplex::from_simplex(complex, complex.simplex(c.sigma)),
                ChainSimplex::from_simplex(complex, complex.simplex(c.tau)),
            )
        })
        .collect()
}

/// Outcome of the identity check on one matched pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityCheck {
    /// The pivot is the top of `Σ`; the flats of the pivot and its completion
    /// were compared.
    Checked { passed: bool },
    /// The top of the chain is unchanged, so the map is the identity.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub entries: Vec<((usize, usize), IdentityCheck)>,
}

impl IdentityReport {
    pub fn passed(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, c)| !matches!(c, IdentityCheck::Checked { passed: false }))
            .count()
    }

    pub fn checked(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, c)| matches!(c, IdentityCheck::Checked { .. }))
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.entries.len()
    }
}

/// For each pair `(Σ, W(Σ))` whose pivot is the top of `Σ`, checks that the
/// pivot's flat equals its completion's flat exactly.
pub fn verify_identity_condition(
    lattice: &IntersectionLattice,
    complex: &SimplicialComplex<AtomSet>,
    matching: &Matching,
) -> IdentityReport {
    let entries = matching
        .pairs()
        .iter()
        .map(|&(sigma, tau)| {
            let chain = ChainSimplex::from_simplex(complex, complex.simplex(sigma));
            let check = match pivot(lattice, &chain) {
                Some((piv, idx)) if idx == chain.len() => {
                    let passed = match (
                        subspace_of_vertex_set(lattice, &piv),
                        completion(lattice, &piv).and_then(|c| subspace_of_vertex_set(lattice, &c)),
                    ) {
                        (Ok(a), Ok(b)) => a == b,
                        _ => false,
                    };
                    IdentityCheck::Checked { passed }
                }
                Some(_) => IdentityCheck::Trivial,
                None => IdentityCheck::Checked { passed: false },
            };
            ((sigma, tau), check)
        })
        .collect();
    IdentityReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::*;
    use crate::arrangement::{intersection_semilattice, vassiliev_skeleton};
    use crate::complexes::sphere_complex;

    fn chain(sets: &[&[usize]]) -> ChainSimplex {
        ChainSimplex::new(sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn completeness() {
        let l = intersection_semilattice(&three_lines());
        assert!(is_complete(&l, &[0]));
        assert!(!is_complete(&l, &[0, 1]));
        assert!(is_complete(&l, &[0, 1, 2]));
        assert_eq!(completion(&l, &[0, 1]).unwrap(), vec![0, 1, 2]);
        assert_eq!(completion(&l, &[1]).unwrap(), vec![1]);
        let axes = intersection_semilattice(&coordinate_axes());
        assert_eq!(completion(&axes, &[0, 1]).unwrap(), vec![0, 1]);
        let par = intersection_semilattice(&parallel_lines());
        assert!(!is_complete(&par, &[0, 1]));
        assert!(completion(&par, &[0, 1]).is_err());
    }

    #[test]
    fn pivots() {
        let l = intersection_semilattice(&three_lines());
        assert_eq!(pivot(&l, &chain(&[&[0], &[0, 1, 2]])), None);
        assert_eq!(pivot(&l, &chain(&[&[0, 1]])), Some((vec![0, 1], 1)));
        assert_eq!(pivot(&l, &chain(&[&[0], &[0, 1], &[0, 1, 2]])), Some((vec![0, 1], 2)));
    }

    #[test]
    fn chain_validation() {
        assert!(ChainSimplex::new(vec![]).is_err());
        assert!(ChainSimplex::new(vec![vec![0, 1], vec![0]]).is_err());
        assert!(ChainSimplex::new(vec![vec![1, 0]]).is_err());
        assert!(ChainSimplex::new(vec![vec![0], vec![1, 2]]).is_err());
        assert_eq!(chain(&[&[0], &[0, 1]]).to_string(), "({a1} < {a1,a2})");
    }

    #[test]
    fn three_lines_matching() {
        let l = intersection_semilattice(&three_lines());
        let k = vassiliev_skeleton(&l);
        let w = build_matching(&l, &k);
        assert_eq!(w.len(), 9);
        assert_eq!(w.critical().len(), 7);
        assert!(partition_holds(&classify(&l, &k, Execution::Sequential), &w));
        assert!(verify_acyclic(&k, &w));
        assert!(verify_iota_monotone(&l, &k, &w));
        let single = k.index_of(&[k.vertices().iter().position(|s| s == &vec![0, 1]).unwrap()]).unwrap();
        let partner = w.partner_up(single).unwrap();
        assert_eq!(
            ChainSimplex::from_simplex(&k, k.simplex(partner)),
            chain(&[&[0, 1], &[0, 1, 2]])
        );
        let crit = critical_subcomplex(&k, &w).unwrap();
        assert_eq!(crit.f_vector(), vec![4, 3]);
        assert!(critical_matches_order_complex(&l, &crit));
        let report = verify_identity_condition(&l, &k, &w);
        assert_eq!(report.entries.len(), 9);
        assert!(report.all_passed());
        assert_eq!(report.checked(), 9);
    }

    #[test]
    fn coordinate_axes_have_empty_matching() {
        let l = intersection_semilattice(&coordinate_axes());
        let k = vassiliev_skeleton(&l);
        let w = build_matching(&l, &k);
        assert!(w.is_empty());
        assert_eq!(w.critical().len(), 5);
        assert!(collapse_sequence(&k, &w).unwrap().is_empty());
    }

    #[test]
    fn parallel_lines_critical() {
        let l = intersection_semilattice(&parallel_lines());
        let k = vassiliev_skeleton(&l);
        let w = build_matching(&l, &k);
        assert_eq!(critical_subcomplex(&k, &w).unwrap().f_vector(), vec![2]);
    }

    #[test]
    fn empty_matching_properties() {
        let k = sphere_complex(2);
        let w = Matching::empty(&k);
        assert!(verify_acyclic(&k, &w));
        assert_eq!(critical_subcomplex(&k, &w).unwrap(), k);
        assert!(collapse_sequence(&k, &w).unwrap().is_empty());
        let l = intersection_semilattice(&three_lines());
        let bd = vassiliev_skeleton(&l);
        assert!(verify_iota_monotone(&l, &bd, &Matching::empty(&bd)));
    }

    #[test]
    fn cyclic_matching_detected() {
        // Triangle boundary; pair each vertex with the next edge around.
        let k = sphere_complex(1);
        let idx = |s: &[usize]| k.index_of(s).unwrap();
        let pairs = vec![
            (idx(&[0]), idx(&[0, 1])),
            (idx(&[1]), idx(&[1, 2])),
            (idx(&[2]), idx(&[0, 2])),
        ];
        let w = Matching::new(&k, pairs).unwrap();
        assert!(!verify_acyclic(&k, &w));
        assert!(matches!(
            collapse_sequence(&k, &w),
            Err(MorseError::StuckCollapse { remaining: 3 })
        ));
    }

    #[test]
    fn matching_validation() {
        let k = sphere_complex(1);
        let idx = |s: &[usize]| k.index_of(s).unwrap();
        assert!(matches!(
            Matching::new(&k, vec![(idx(&[0]), idx(&[1, 2]))]),
            Err(MorseError::NotCovering { .. })
        ));
        assert!(matches!(
            Matching::new(&k, vec![(idx(&[0]), idx(&[0, 1])), (idx(&[0]), idx(&[0, 2]))]),
            Err(MorseError::Overlap(_))
        ));
        // Unmatched edge {0,1} over matched vertex {0}: not a subcomplex.
        let w = Matching::new(&k, vec![(idx(&[0]), idx(&[0, 2]))]).unwrap();
        assert!(matches!(critical_subcomplex(&k, &w), Err(MorseError::NotAComplex { .. })));
    }

    #[test]
    fn collapse_three_lines() {
        let l = intersection_semilattice(&three_lines());
        let k = vassiliev_skeleton(&l);
        let w = build_matching(&l, &k);
        let steps = collapse_sequence(&k, &w).unwrap();
        assert_eq!(steps.len(), 9);
        let euler = k.euler_characteristic();
        let remaining = replay_collapses(&k, &steps, |_, live| {
            let sub = k.subcomplex(live).unwrap();
            sub.euler_characteristic() == euler
        })
        .unwrap();
        assert_eq!(remaining.len(), 7);
        assert_eq!(format_trace(&k, &steps), format_trace(&k, &collapse_sequence(&k, &w).unwrap()));
        // The first removal is a top-dimensional pair.
        assert_eq!(k.simplex(steps[0].tau).len(), 3);
    }
}
