//! Exact combinatorial models for subspace arrangements.
//!
//! An arrangement of affine subspaces of `Q^n` is turned into its
//! intersection semilattice `L`, and from there into two simplicial models of
//! the one-point compactified union: the order complex `Δ(L)` and the
//! barycentric subdivision of the nerve `Bd(N(L))`. A discrete Morse
//! matching collapses the second model onto the first. Integral homology of
//! both, and of the complement via the Goresky–MacPherson formula, is
//! computed by sparse Smith normal form.
//!
//! All arithmetic is exact. Parallel work goes through [`Execution`]; with
//! the `parallel` feature disabled every call runs sequentially.

pub mod arrangement;
pub mod complexes;
pub mod exactlin;
pub mod generate;
pub mod homology;
pub mod morse;
pub mod par;
pub mod poset;
pub mod verify;

pub use arrangement::{
    intersection_semilattice, intersection_semilattice_with, nerve_of_lattice,
    subspace_of_vertex_set, vassiliev_skeleton, zz_skeleton, Arrangement, ArrangementError,
    AtomSet, IntersectionLattice,
};
pub use complexes::{ComplexError, SimplicialComplex};
pub use exactlin::{AffineSubspace, LinError, Rational};
pub use homology::{
    complement_cohomology, compactified_union_homology, reduced_homology, DualityVerdict,
    HomologyGroup, HomologyProfile,
};
pub use morse::{build_matching, collapse_sequence, ChainSimplex, Matching, MorseError};
pub use par::Execution;
pub use poset::{FinitePoset, PosetError};
pub use verify::{verify_arrangement, verify_corpus, VerifyOptions, VerifyReport};
