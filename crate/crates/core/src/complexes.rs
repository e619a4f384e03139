//! Finite abstract simplicial complexes and the standard constructions on
//! them: order complexes, nerves, face posets, subdivisions, joins, spheres.
//!
//! A simplex is a sorted, duplicate-free list of vertex indices. Every face
//! is stored explicitly, ordered by dimension and then lexicographically.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::poset::{FinitePoset, PosetError};

pub type Simplex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("the empty set is not a simplex")]
    EmptySimplex,
    #[error("simplex {simplex:?} uses vertex {vertex} but only {count} vertices exist")]
    VertexOutOfRange {
        simplex: Simplex,
        vertex: usize,
        count: usize,
    },
    #[error("face {face:?} of simplex {simplex:?} is missing")]
    NotDownwardClosed { simplex: Simplex, face: Simplex },
    #[error("vertex {0} belongs to no simplex")]
    PhantomVertex(usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    vertices: Vec<V>,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    /// `offsets[d]` is the index of the first simplex with `d + 1` vertices.
    offsets: Vec<usize>,
}

fn canonical(mut s: Simplex) -> Simplex {
    s.sort_unstable();
    s.dedup();
    s
}

fn dim_lex(a: &Simplex, b: &Simplex) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl<V> SimplicialComplex<V> {
    pub fn empty() -> Self {
        Self::assemble(Vec::new(), BTreeSet::new())
    }

    fn assemble(vertices: Vec<V>, simplices: BTreeSet<Simplex>) -> Self {
        let mut simplices: Vec<Simplex> = simplices.into_iter().collect();
        simplices.sort_by(dim_lex);
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let top = simplices.last().map_or(0, |s| s.len());
        let offsets = (0..top)
            .map(|d| simplices.partition_point(|s| s.len() < d + 1))
            .collect();
        Self {
            vertices,
            simplices,
            index,
            offsets,
        }
    }

    /// Builds a complex from its full list of simplices, validating downward
    /// closure and that every vertex is used.
    pub fn from_simplices<I>(vertices: Vec<V>, simplices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let count = vertices.len();
        let mut set = BTreeSet::new();
        for s in simplices {
            let s = canonical(s);
            if s.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            if let Some(&v) = s.iter().find(|&&v| v >= count) {
                return Err(ComplexError::VertexOutOfRange {
                    simplex: s,
                    vertex: v,
                    count,
                });
            }
            set.insert(s);
        }
        for s in &set {
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                if !set.contains(&face) {
                    return Err(ComplexError::NotDownwardClosed {
                        simplex: s.clone(),
                        face,
                    });
                }
            }
        }
        for v in 0..count {
            if !set.contains(&vec![v]) {
                return Err(ComplexError::PhantomVertex(v));
            }
        }
        Ok(Self::assemble(vertices, set))
    }

    /// Builds the downward closure of `facets`.
    pub fn from_facets<I>(vertices: Vec<V>, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let count = vertices.len();
        let mut set = BTreeSet::new();
        for f in facets {
            let f = canonical(f);
            if f.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            if let Some(&v) = f.iter().find(|&&v| v >= count) {
                return Err(ComplexError::VertexOutOfRange {
                    simplex: f,
                    vertex: v,
                    count,
                });
            }
            if set.contains(&f) {
                continue;
            }
            for mask in 1u64..(1u64 << f.len()) {
                let face: Simplex = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                set.insert(face);
            }
        }
        for v in 0..count {
            if !set.contains(&vec![v]) {
                return Err(ComplexError::PhantomVertex(v));
            }
        }
        Ok(Self::assemble(vertices, set))
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &V {
        &self.vertices[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// All simplices, by dimension then lexicographically.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex; `-1` when empty.
    pub fn dimension(&self) -> i32 {
        self.offsets.len() as i32 - 1
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index.contains_key(s)
    }

    /// Global index range of the `d`-simplices.
    pub fn dim_range(&self, d: i32) -> std::ops::Range<usize> {
        if d < 0 || d > self.dimension() {
            return 0..0;
        }
        let d = d as usize;
        let end = self.offsets.get(d + 1).copied().unwrap_or(self.simplices.len());
        self.offsets[d]..end
    }

    pub fn simplices_of_dim(&self, d: i32) -> &[Simplex] {
        &self.simplices[self.dim_range(d)]
    }

    /// Face counts `f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dimension()).map(|d| self.dim_range(d).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Indices of the codimension-one faces of simplex `i`.
    pub fn facets_of(&self, i: usize) -> Vec<usize> {
        let s = &self.simplices[i];
        if s.len() < 2 {
            return Vec::new();
        }
        (0..s.len())
            .map(|k| {
                let mut f = s.clone();
                f.remove(k);
                self.index[&f]
            })
            .collect()
    }

    /// Indices of the codimension-one cofaces of every simplex.
    pub fn cofacets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for i in 0..self.len() {
            for f in self.facets_of(i) {
                out[f].push(i);
            }
        }
        out
    }

    /// True if every nonempty subset of every simplex is present.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            s.len() < 2
                || (0..s.len()).all(|k| {
                    let mut f = s.clone();
                    f.remove(k);
                    self.index.contains_key(&f)
                })
        })
    }

    /// Sub-collection of simplices by index. Vertices not used by any kept
    /// simplex are dropped and the rest renumbered in order.
    pub fn subcomplex(&self, keep: &[usize]) -> Result<Self, ComplexError>
    where
        V: Clone,
    {
        let kept: BTreeSet<usize> = keep
            .iter()
            .flat_map(|&i| self.simplices[i].iter().copied())
            .collect();
        let remap: HashMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices = kept.iter().map(|&v| self.vertices[v].clone()).collect();
        let simplices = keep
            .iter()
            .map(|&i| self.simplices[i].iter().map(|v| remap[v]).collect::<Simplex>());
        SimplicialComplex::from_simplices(vertices, simplices)
    }

    /// Replaces vertex labels; simplices are unchanged.
    pub fn map_labels<U, F: FnMut(&V) -> U>(&self, f: F) -> SimplicialComplex<U> {
        SimplicialComplex {
            vertices: self.vertices.iter().map(f).collect(),
            simplices: self.simplices.clone(),
            index: self.index.clone(),
            offsets: self.offsets.clone(),
        }
    }

    /// Relabels each vertex by its own index.
    pub fn index_labels(&self) -> SimplicialComplex<usize> {
        SimplicialComplex {
            vertices: (0..self.vertices.len()).collect(),
            simplices: self.simplices.clone(),
            index: self.index.clone(),
            offsets: self.offsets.clone(),
        }
    }

    /// Simplices as sorted label sets, for comparison up to relabeling.
    pub fn labeled_simplices(&self) -> BTreeSet<Vec<V>>
    where
        V: Ord + Clone,
    {
        self.simplices
            .iter()
            .map(|s| {
                let mut l: Vec<V> = s.iter().map(|&v| self.vertices[v].clone()).collect();
                l.sort();
                l
            })
            .collect()
    }

    /// True iff the two complexes have the same simplices once each vertex is
    /// identified with its label.
    pub fn same_labeled<W>(&self, other: &SimplicialComplex<W>) -> bool
    where
        V: Ord + Clone + PartialEq<W>,
        W: Ord + Clone,
    {
        let a = self.labeled_simplices();
        let b = other.labeled_simplices();
        a.len() == b.len()
            && a.iter()
                .zip(b.iter())
                .all(|(x, y)| x.len() == y.len() && x.iter().zip(y).all(|(p, q)| p == q))
    }
}

impl<V: fmt::Debug> fmt::Debug for SimplicialComplex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

/// `Δ(P)`: vertices are the elements of `P`, simplices its nonempty chains.
pub fn order_complex<T: Clone>(poset: &FinitePoset<T>) -> SimplicialComplex<T> {
    let set = poset.chains().into_iter().map(canonical).collect();
    SimplicialComplex::assemble(poset.elements().to_vec(), set)
}

/// `N(P)`: vertices are the minimal elements of `P` (in index order), and a
/// set of them is a simplex iff it has a join.
pub fn nerve_complex<T: Clone>(poset: &FinitePoset<T>) -> Result<SimplicialComplex<T>, ComplexError> {
    let mins = poset.minimal_elements();
    let vertices: Vec<T> = mins.iter().map(|&m| poset.element(m).clone()).collect();
    let mut set = BTreeSet::new();
    // Sets with a join are closed under subsets, so grow only from those.
    let mut stack: Vec<Simplex> = (0..mins.len()).rev().map(|v| vec![v]).collect();
    while let Some(s) = stack.pop() {
        let members: Vec<usize> = s.iter().map(|&v| mins[v]).collect();
        if poset.join(&members)?.is_none() {
            continue;
        }
        let last = *s.last().expect("nonempty");
        for v in ((last + 1)..mins.len()).rev() {
            let mut next = s.clone();
            next.push(v);
            stack.push(next);
        }
        set.insert(s);
    }
    Ok(SimplicialComplex::assemble(vertices, set))
}

/// `F(K)`: the simplices of `K` ordered by inclusion. Element `i` is simplex
/// `i` of `K`.
pub fn face_poset<V>(complex: &SimplicialComplex<V>) -> FinitePoset<Simplex> {
    let m = complex.len();
    let mut table = vec![false; m * m];
    for (a, sa) in complex.simplices().iter().enumerate() {
        for (b, sb) in complex.simplices().iter().enumerate() {
            table[a * m + b] = sa.len() <= sb.len() && is_subset(sa, sb);
        }
    }
    FinitePoset::from_table_unchecked(complex.simplices().to_vec(), table)
}

/// Subset test on sorted slices.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Number of simplices `Bd(K)` would have.
pub fn subdivision_size<V>(complex: &SimplicialComplex<V>) -> u128 {
    // Chains of faces ending at a k-vertex simplex depend only on k.
    let top = complex.simplices().last().map_or(0, |s| s.len());
    let mut binom = vec![vec![0u128; top + 1]; top + 1];
    for n in 0..=top {
        binom[n][0] = 1;
        for k in 1..=n {
            binom[n][k] = binom[n - 1][k - 1] + if k < n { binom[n - 1][k] } else { 0 };
        }
    }
    let mut ending = vec![0u128; top + 1];
    for k in 1..=top {
        let below: u128 = (1..k)
            .map(|j| binom[k][j].saturating_mul(ending[j]))
            .fold(0u128, |a, b| a.saturating_add(b));
        ending[k] = below.saturating_add(1);
    }
    complex
        .simplices()
        .iter()
        .map(|s| ending[s.len()])
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// `Bd(K) = Δ(F(K))`. Vertex `i` of the result is labeled by simplex `i` of
/// `K`.
pub fn barycentric_subdivision<V>(complex: &SimplicialComplex<V>) -> SimplicialComplex<Simplex> {
    // Chains in F(K) directly: extend by codimension-one cofaces only is not
    // enough (chains may skip dimensions), so extend by every proper coface.
    let cofaces = proper_cofaces(complex);
    let mut set = BTreeSet::new();
    let mut stack: Vec<Simplex> = (0..complex.len()).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        for &c in &cofaces[last] {
            let mut next = chain.clone();
            next.push(c);
            stack.push(next);
        }
        set.insert(canonical(chain));
    }
    SimplicialComplex::assemble(complex.simplices().to_vec(), set)
}

fn proper_cofaces<V>(complex: &SimplicialComplex<V>) -> Vec<Vec<usize>> {
    let cofacets = complex.cofacets();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); complex.len()];
    // Simplices are sorted by dimension, so walk from the top down.
    for i in (0..complex.len()).rev() {
        let mut acc: BTreeSet<usize> = BTreeSet::new();
        for &c in &cofacets[i] {
            acc.insert(c);
            acc.extend(out[c].iter().copied());
        }
        out[i] = acc.into_iter().collect();
    }
    out
}

/// Vertex of a join, tagged by the side it came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JoinVertex<A, B> {
    Left(A),
    Right(B),
}

/// `K * L`: simplices are disjoint unions `σ ⊔ τ` with `σ ∈ K ∪ {∅}` and
/// `τ ∈ L ∪ {∅}`, not both empty.
pub fn join_complex<A: Clone, B: Clone>(
    left: &SimplicialComplex<A>,
    right: &SimplicialComplex<B>,
) -> SimplicialComplex<JoinVertex<A, B>> {
    let shift = left.num_vertices();
    let mut vertices: Vec<JoinVertex<A, B>> =
        left.vertices().iter().cloned().map(JoinVertex::Left).collect();
    vertices.extend(right.vertices().iter().cloned().map(JoinVertex::Right));
    let empty: Simplex = Vec::new();
    let lefts = std::iter::once(&empty).chain(left.simplices());
    let mut set = BTreeSet::new();
    for s in lefts {
        for t in std::iter::once(&empty).chain(right.simplices()) {
            if s.is_empty() && t.is_empty() {
                continue;
            }
            let mut u = s.clone();
            u.extend(t.iter().map(|v| v + shift));
            set.insert(u);
        }
    }
    SimplicialComplex::assemble(vertices, set)
}

/// `S^d` as the boundary of the `(d+1)`-simplex; empty for `d = -1`.
pub fn sphere_complex(d: i32) -> SimplicialComplex<usize> {
    assert!(d >= -1, "sphere dimension must be at least -1");
    if d == -1 {
        return SimplicialComplex::empty();
    }
    let n = (d + 2) as usize;
    let facets = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect::<Simplex>());
    SimplicialComplex::from_facets((0..n).collect(), facets).expect("sphere facets are valid")
}

/// The full simplex on `n` vertices.
pub fn full_simplex(n: usize) -> SimplicialComplex<usize> {
    if n == 0 {
        return SimplicialComplex::empty();
    }
    SimplicialComplex::from_facets((0..n).collect(), [(0..n).collect::<Simplex>()])
        .expect("simplex is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::*;

    fn edge() -> SimplicialComplex<char> {
        SimplicialComplex::from_facets(vec!['a', 'b'], [vec![0, 1]]).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            SimplicialComplex::from_simplices(vec![0, 1], [vec![0, 1], vec![0]]).unwrap_err(),
            ComplexError::NotDownwardClosed {
                simplex: vec![0, 1],
                face: vec![1]
            }
        );
        assert_eq!(
            SimplicialComplex::from_simplices(vec![0, 1], [vec![0]]).unwrap_err(),
            ComplexError::PhantomVertex(1)
        );
        assert!(matches!(
            SimplicialComplex::from_simplices(vec![0], [vec![3]]),
            Err(ComplexError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert_eq!(
            SimplicialComplex::<u8>::from_facets(vec![], [vec![]]).unwrap_err(),
            ComplexError::EmptySimplex
        );
        let ok = SimplicialComplex::from_simplices(vec!['x', 'y'], [vec![1, 0], vec![0], vec![1]])
            .unwrap();
        assert_eq!(ok.f_vector(), vec![2, 1]);
    }

    #[test]
    fn order_complexes() {
        let anti = order_complex(&antichain(2));
        assert_eq!(anti.f_vector(), vec![2]);
        let c = order_complex(&chain(3));
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
        let l = order_complex(&three_lines());
        assert_eq!(l.f_vector(), vec![4, 3]);
        assert_eq!(l.len(), 7);
    }

    #[test]
    fn nerves() {
        assert_eq!(nerve_complex(&antichain(2)).unwrap().f_vector(), vec![2]);
        let n = nerve_complex(&three_lines()).unwrap();
        assert_eq!(n.f_vector(), vec![3, 3, 1]);
        assert_eq!(n.vertices(), &["a1", "a2", "a3"]);
        assert!(matches!(
            nerve_complex(&bowtie()),
            Err(ComplexError::Poset(PosetError::NotASemilattice { .. }))
        ));
    }

    #[test]
    fn face_posets() {
        let v = SimplicialComplex::from_facets(vec![()], [vec![0]]).unwrap();
        assert_eq!(face_poset(&v).len(), 1);
        let e = face_poset(&edge());
        assert_eq!(e.len(), 3);
        assert_eq!(e.covering_pairs().len(), 2);
        let t = face_poset(&full_simplex(3));
        assert_eq!(t.len(), 7);
        assert_eq!(t.covering_pairs().len(), 9);
    }

    #[test]
    fn subdivisions() {
        let e = barycentric_subdivision(&edge());
        assert_eq!(e.f_vector(), vec![3, 2]);
        let t = barycentric_subdivision(&full_simplex(3));
        assert_eq!(t.f_vector(), vec![7, 12, 6]);
        assert_eq!(t.len(), 25);
        assert_eq!(t.euler_characteristic(), 1);
        assert_eq!(subdivision_size(&full_simplex(3)), 25);
        // Bd(K) agrees with the order complex of the face poset.
        let via_poset = order_complex(&face_poset(&full_simplex(3)));
        assert!(t.same_labeled(&via_poset));
        for k in [edge().map_labels(|_| 0usize), sphere_complex(2), full_simplex(4)] {
            assert_eq!(
                barycentric_subdivision(&k).euler_characteristic(),
                k.euler_characteristic()
            );
            assert_eq!(subdivision_size(&k), barycentric_subdivision(&k).len() as u128);
        }
    }

    #[test]
    fn joins() {
        let pt = full_simplex(1);
        assert_eq!(join_complex(&pt, &pt).f_vector(), vec![2, 1]);
        let s0 = sphere_complex(0);
        let circle = join_complex(&s0, &s0);
        assert_eq!(circle.f_vector(), vec![4, 4]);
        let three = SimplicialComplex::from_facets(vec![0, 1, 2], [vec![0], vec![1], vec![2]])
            .unwrap();
        let k32 = join_complex(&three, &s0);
        assert_eq!(k32.f_vector(), vec![5, 6]);
        assert_eq!(k32.euler_characteristic(), -1);
        let empty = SimplicialComplex::<usize>::empty();
        assert!(join_complex(&empty, &s0).same_labeled(&join_complex(&empty, &s0)));
        assert_eq!(join_complex(&empty, &s0).f_vector(), vec![2]);
    }

    #[test]
    fn spheres() {
        assert!(sphere_complex(-1).is_empty());
        assert_eq!(sphere_complex(-1).dimension(), -1);
        assert_eq!(sphere_complex(0).f_vector(), vec![2]);
        assert_eq!(sphere_complex(1).f_vector(), vec![3, 3]);
        assert_eq!(sphere_complex(2).euler_characteristic(), 2);
    }

    #[test]
    fn euler() {
        assert_eq!(full_simplex(3).euler_characteristic(), 1);
        assert_eq!(sphere_complex(1).euler_characteristic(), 0);
    }

    #[test]
    fn join_euler_formula() {
        let ks = [sphere_complex(0), sphere_complex(1), full_simplex(3), sphere_complex(2)];
        for a in &ks {
            for b in &ks {
                let (x, y) = (a.euler_characteristic(), b.euler_characteristic());
                assert_eq!(join_complex(a, b).euler_characteristic(), x + y - x * y);
            }
        }
    }

    #[test]
    fn subcomplex_and_facets() {
        let t = full_simplex(3);
        let edges_only: Vec<usize> = (0..t.len()).filter(|&i| t.simplex(i).len() <= 2).collect();
        let b = t.subcomplex(&edges_only).unwrap();
        assert_eq!(b.f_vector(), vec![3, 3]);
        let top = t.len() - 1;
        assert_eq!(t.facets_of(top).len(), 3);
        assert!(t.subcomplex(&[top]).is_err());
        assert_eq!(t.dim_range(1).len(), 3);
        assert_eq!(t.simplices_of_dim(5).len(), 0);
    }
}
