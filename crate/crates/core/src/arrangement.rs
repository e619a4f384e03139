//! Affine subspace arrangements and their intersection semilattices.

use std::collections::HashMap;

use thiserror::Error;

use crate::complexes::{barycentric_subdivision, nerve_complex, order_complex, SimplicialComplex};
use crate::exactlin::{AffineSubspace, LinError};
use crate::par::{self, Execution};
use crate::poset::FinitePoset;

/// A set of atoms, as sorted 0-based indices into the arrangement.
pub type AtomSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("arrangement has no subspaces")]
    Empty,
    #[error("subspace {index} lives in Q^{found}, expected Q^{expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("subspace {index} is the whole ambient space")]
    NotProper { index: usize },
    #[error("subspace {contained} is contained in subspace {container}")]
    ContainmentViolation { contained: usize, container: usize },
    #[error("atoms {atoms:?} have empty intersection")]
    NoJoin { atoms: AtomSet },
    #[error("unknown atom {0}")]
    UnknownAtom(usize),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// A validated arrangement: pairwise incomparable subspaces of `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    subspaces: Vec<AffineSubspace>,
}

impl Arrangement {
    pub fn validate(subspaces: Vec<AffineSubspace>, ambient_dim: usize) -> Result<Self, ArrangementError> {
        if subspaces.is_empty() {
            return Err(ArrangementError::Empty);
        }
        for (index, s) in subspaces.iter().enumerate() {
            if s.ambient_dim() != ambient_dim {
                return Err(ArrangementError::DimensionMismatch {
                    index,
                    expected: ambient_dim,
                    found: s.ambient_dim(),
                });
            }
            if s.codimension() == 0 {
                return Err(ArrangementError::NotProper { index });
            }
        }
        for i in 0..subspaces.len() {
            for j in 0..subspaces.len() {
                if i != j && subspaces[j].contains(&subspaces[i])? {
                    // Equal pairs report the later one as contained.
                    let (contained, container) = if subspaces[i] == subspaces[j] {
                        (i.max(j), i.min(j))
                    } else {
                        (i, j)
                    };
                    return Err(ArrangementError::ContainmentViolation { contained, container });
                }
            }
        }
        Ok(Self {
            ambient_dim,
            subspaces,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn subspaces(&self) -> &[AffineSubspace] {
        &self.subspaces
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }
}

/// `L(A)`: nonempty intersections ordered by reverse inclusion.
///
/// Element `i < k` is the atom of subspace `i`; the remaining flats follow in
/// order of decreasing dimension, then canonical form. Each element is
/// labeled by its flat `B(x)`.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    ambient_dim: usize,
    poset: FinitePoset<AffineSubspace>,
    num_atoms: usize,
}

impl IntersectionLattice {
    pub fn poset(&self) -> &FinitePoset<AffineSubspace> {
        &self.poset
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn num_atoms(&self) -> usize {
        self.num_atoms
    }

    /// Lattice element of atom `i`.
    pub fn atom(&self, i: usize) -> usize {
        assert!(i < self.num_atoms, "atom index out of range");
        i
    }

    pub fn is_atom(&self, x: usize) -> bool {
        x < self.num_atoms
    }

    /// `B(x)`.
    pub fn flat(&self, x: usize) -> &AffineSubspace {
        self.poset.element(x)
    }

    pub fn dimension(&self, x: usize) -> usize {
        self.flat(x).dimension()
    }

    /// Atoms below `x`.
    pub fn atoms_below(&self, x: usize) -> AtomSet {
        (0..self.num_atoms).filter(|&a| self.poset.leq(a, x)).collect()
    }

    /// Join of a nonempty atom set, `None` when the atoms do not meet.
    pub fn join_of_atoms(&self, atoms: &[usize]) -> Result<Option<usize>, ArrangementError> {
        if let Some(&a) = atoms.iter().find(|&&a| a >= self.num_atoms) {
            return Err(ArrangementError::UnknownAtom(a));
        }
        let members: Vec<usize> = atoms.iter().map(|&a| self.atom(a)).collect();
        Ok(self
            .poset
            .join(&members)
            .expect("intersection lattices are semilattices"))
    }

    /// Short display name: `a1..ak` for atoms, `x{index}` otherwise.
    pub fn element_name(&self, x: usize) -> String {
        if self.is_atom(x) {
            format!("a{}", x + 1)
        } else {
            format!("x{}", x + 1)
        }
    }
}

pub fn intersection_semilattice(arr: &Arrangement) -> IntersectionLattice {
    intersection_semilattice_with(arr, Execution::default())
}

/// Closes the atoms under nonempty pairwise intersection. Each round
/// intersects the newest flats with everything known so far; new flats are
/// deduplicated in a fixed order, so the result does not depend on `exec`.
pub fn intersection_semilattice_with(arr: &Arrangement, exec: Execution) -> IntersectionLattice {
    let mut flats: Vec<AffineSubspace> = arr.subspaces().to_vec();
    let mut seen: HashMap<AffineSubspace, usize> =
        flats.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let mut frontier: Vec<usize> = (0..flats.len()).collect();
    while !frontier.is_empty() {
        // New flats meet everything older, and each other once.
        let pairs: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&f| (0..f).map(move |g| (f, g)))
            .collect();
        let meets = par::map_slice(exec, &pairs, |&(f, g)| {
            flats[f].intersect(&flats[g]).expect("same ambient dimension")
        });
        let mut next = Vec::new();
        for m in meets.into_iter().flatten() {
            if !seen.contains_key(&m) {
                seen.insert(m.clone(), flats.len());
                next.push(flats.len());
                flats.push(m);
            }
        }
        frontier = next;
    }
    let k = arr.len();
    let mut rest = flats.split_off(k);
    rest.sort_by(|a, b| b.dimension().cmp(&a.dimension()).then_with(|| a.cmp(b)));
    flats.extend(rest);
    let n = flats.len();
    let rows = par::map_range(exec, n, |i| {
        (0..n)
            .map(|j| i == j || flats[i].contains(&flats[j]).expect("same ambient dimension"))
            .collect::<Vec<bool>>()
    });
    let table = rows.into_iter().flatten().collect();
    IntersectionLattice {
        ambient_dim: arr.ambient_dim(),
        poset: FinitePoset::from_table_unchecked(flats, table),
        num_atoms: k,
    }
}

/// Indexing complex of the Ziegler–Živaljević model: `Δ(L)`. Vertex `x` is
/// lattice element `x`.
pub fn zz_skeleton(lattice: &IntersectionLattice) -> SimplicialComplex<usize> {
    order_complex(&lattice.poset().map_labels(|_| ())).index_labels()
}

/// The nerve `N(L)`, with vertex `i` the atom `i`.
pub fn nerve_of_lattice(lattice: &IntersectionLattice) -> SimplicialComplex<usize> {
    let nerve = nerve_complex(&lattice.poset().map_labels(|_| ()))
        .expect("intersection lattices are semilattices");
    debug_assert_eq!(nerve.num_vertices(), lattice.num_atoms());
    nerve.index_labels()
}

/// Indexing complex of the Vassiliev model: `Bd(N(L))`. Each vertex is
/// labeled by its atom set.
pub fn vassiliev_skeleton(lattice: &IntersectionLattice) -> SimplicialComplex<AtomSet> {
    let nerve = nerve_of_lattice(lattice);
    barycentric_subdivision(&nerve)
}

/// `V(S) = ∩_{i ∈ S} A_i`, read off the lattice as `B(∨S)`.
pub fn subspace_of_vertex_set(
    lattice: &IntersectionLattice,
    atoms: &[usize],
) -> Result<AffineSubspace, ArrangementError> {
    match lattice.join_of_atoms(atoms)? {
        Some(x) => Ok(lattice.flat(x).clone()),
        None => Err(ArrangementError::NoJoin {
            atoms: atoms.to_vec(),
        }),
    }
}
