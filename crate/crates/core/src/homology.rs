//! Integer reduced homology of simplicial complexes.
//!
//! Boundary matrices are reduced to diagonal form by unimodular row and
//! column operations on a sparse representation, always pivoting on an entry
//! of least absolute value. Elimination runs in `i64` with checked
//! arithmetic and restarts in `BigInt` on overflow. The diagonal is then
//! normalized into invariant factors.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::IntersectionLattice;
use crate::complexes::{order_complex, SimplicialComplex};
use crate::par::{self, Execution};

/// Sparse integer matrix as a list of nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let entries = dense
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(move |(j, &v)| (i, j, v))
            })
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0i64; self.cols]; self.rows];
        for &(i, j, v) in &self.entries {
            d[i][j] += v;
        }
        d
    }

    /// `self · other`, exact.
    pub fn mul(&self, other: &SparseMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let a = self.to_dense();
        let b = other.to_dense();
        let mut out = vec![vec![0i64; other.cols]; self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if a[i][k] == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of a matrix, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one())
    }
}

trait Coeff: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Coeff for T {}

struct Overflow;

/// Row-major sparse working matrix with column supports.
struct Work<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    /// Nonempty columns keyed by `(support size, column)`.
    queue: BTreeSet<(usize, usize)>,
}

impl<T: Coeff> Work<T> {
    fn new(m: &SparseMatrix, conv: impl Fn(i64) -> T) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows];
        let mut cols = vec![BTreeSet::new(); m.cols];
        for &(i, j, v) in &m.entries {
            let e = rows[i].entry(j).or_insert_with(T::zero);
            *e = e.clone() + conv(v);
            cols[j].insert(i);
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row.retain(|&j, v: &mut T| {
                if v.is_zero() {
                    cols[j].remove(&i);
                    false
                } else {
                    true
                }
            });
        }
        let queue = cols
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(j, c)| (c.len(), j))
            .collect();
        Self { rows, cols, queue }
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        let before = self.cols[j].len();
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.cols[j].remove(&i);
        } else {
            self.rows[i].insert(j, v);
            self.cols[j].insert(i);
        }
        let after = self.cols[j].len();
        if before != after {
            self.queue.remove(&(before, j));
            if after > 0 {
                self.queue.insert((after, j));
            }
        }
    }

    /// A `±1` entry in the sparsest column that has one, on its shortest row.
    fn unit_pivot(&self) -> Option<(usize, usize)> {
        self.queue.iter().find_map(|&(_, j)| {
            self.cols[j]
                .iter()
                .copied()
                .filter(|&i| self.rows[i][&j].abs().is_one())
                .min_by_key(|&i| self.rows[i].len())
                .map(|i| (i, j))
        })
    }

    /// Entry of least absolute value; ties broken by the smallest fill-in
    /// estimate, then position.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(T, usize, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                let a = v.abs();
                let fill = (row.len() - 1) * (self.cols[j].len() - 1);
                let better = match &best {
                    None => true,
                    Some((ba, bf, _, _)) => a < *ba || (a == *ba && fill < *bf),
                };
                if better {
                    let unit = a.is_one() && fill == 0;
                    best = Some((a, fill, i, j));
                    if unit {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, _, i, j)| (i, j))
    }

    /// `row[target] -= q * row[src]`.
    fn row_sub(&mut self, target: usize, src: usize, q: &T) -> Result<(), Overflow> {
        let src_row: Vec<(usize, T)> = self.rows[src].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in src_row {
            let cur = self.rows[target].get(&j).cloned().unwrap_or_else(T::zero);
            let prod = q.checked_mul(&v).ok_or(Overflow)?;
            let new = cur.checked_sub(&prod).ok_or(Overflow)?;
            self.set(target, j, new);
        }
        Ok(())
    }

    /// `col[target] -= q * col[src]`.
    fn col_sub(&mut self, target: usize, src: usize, q: &T) -> Result<(), Overflow> {
        let src_col: Vec<(usize, T)> = self.cols[src]
            .iter()
            .map(|&i| (i, self.rows[i][&src].clone()))
            .collect();
        for (i, v) in src_col {
            let cur = self.rows[i].get(&target).cloned().unwrap_or_else(T::zero);
            let prod = q.checked_mul(&v).ok_or(Overflow)?;
            let new = cur.checked_sub(&prod).ok_or(Overflow)?;
            self.set(i, target, new);
        }
        Ok(())
    }

    fn clear(&mut self, i: usize, j: usize) {
        self.set(i, j, T::zero());
    }

    /// Clears row `pi` and column `pj` against the pivot at `(pi, pj)`.
    /// Returns a surviving remainder, which is smaller than the pivot.
    fn eliminate(&mut self, pi: usize, pj: usize) -> Result<Option<(usize, usize)>, Overflow> {
        let p = self.rows[pi][&pj].clone();
        let mut smaller: Option<(usize, usize)> = None;
        let others: Vec<usize> = self.cols[pj].iter().copied().filter(|&i| i != pi).collect();
        for i in others {
            let q = self.rows[i][&pj].div_floor(&p);
            self.row_sub(i, pi, &q)?;
            if let Some(r) = self.rows[i].get(&pj) {
                if smaller.is_none_or(|(si, sj)| r.abs() < self.rows[si][&sj].abs()) {
                    smaller = Some((i, pj));
                }
            }
        }
        let others: Vec<usize> = self.rows[pi].keys().copied().filter(|&j| j != pj).collect();
        for j in others {
            let q = self.rows[pi][&j].div_floor(&p);
            self.col_sub(j, pj, &q)?;
            if let Some(r) = self.rows[pi].get(&j) {
                if smaller.is_none_or(|(si, sj)| r.abs() < self.rows[si][&sj].abs()) {
                    smaller = Some((pi, j));
                }
            }
        }
        Ok(smaller)
    }

    /// Eliminates to a diagonal; returns the absolute pivot values.
    fn diagonalize(mut self) -> Result<Vec<T>, Overflow> {
        let mut diag = Vec::new();
        // Unit pivots need no remainder steps; take them while they last.
        while let Some((i, j)) = self.unit_pivot() {
            self.eliminate(i, j)?;
            diag.push(T::one());
            self.clear(i, j);
        }
        while let Some((mut pi, mut pj)) = self.pivot() {
            while let Some((i, j)) = self.eliminate(pi, pj)? {
                pi = i;
                pj = j;
            }
            diag.push(self.rows[pi][&pj].abs());
            self.clear(pi, pj);
        }
        Ok(diag)
    }
}

/// Turns any list of positive diagonal entries into invariant factors.
pub fn invariant_factors(diag: Vec<BigInt>) -> Vec<BigInt> {
    let (mut ones, mut rest): (Vec<BigInt>, Vec<BigInt>) = diag
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.abs())
        .partition(|d| d.is_one());
    let n = rest.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    ones.extend(rest);
    ones
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let diag: Vec<BigInt> = match Work::<i64>::new(m, |v| v).diagonalize() {
        Ok(d) => d.into_iter().map(BigInt::from).collect(),
        Err(Overflow) => match Work::<BigInt>::new(m, BigInt::from).diagonalize() {
            Ok(d) => d,
            Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
        },
    };
    SmithForm {
        diagonal: invariant_factors(diag),
    }
}

/// Augmented boundary map `∂_d : C_d → C_{d-1}`; `∂_0` maps every vertex to
/// the single generator of `C_{-1}`.
pub fn boundary_matrix<V>(complex: &SimplicialComplex<V>, d: i32) -> SparseMatrix {
    let rows = chain_rank(complex, d - 1);
    let cols = chain_rank(complex, d);
    if d < 0 {
        return SparseMatrix::zeros(rows, cols);
    }
    if d == 0 {
        return SparseMatrix {
            rows,
            cols,
            entries: (0..cols).map(|j| (0, j, 1)).collect(),
        };
    }
    let lower = complex.dim_range(d - 1).start;
    let mut entries = Vec::new();
    for (j, s) in complex.simplices_of_dim(d).iter().enumerate() {
        for k in 0..s.len() {
            let mut face = s.clone();
            face.remove(k);
            let row = complex.index_of(&face).expect("downward closed") - lower;
            entries.push((row, j, if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    SparseMatrix {
        rows,
        cols,
        entries,
    }
}

/// Whether `∂_{d-1} ∘ ∂_d` vanishes, computed sparsely.
pub fn boundary_squared_is_zero<V>(complex: &SimplicialComplex<V>, d: i32) -> bool {
    let outer = boundary_matrix(complex, d);
    let inner = boundary_matrix(complex, d - 1);
    let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); inner.cols];
    for &(r, c, v) in &inner.entries {
        by_row[c].push((r, v));
    }
    let mut product: HashMap<(usize, usize), i64> = HashMap::new();
    for &(mid, col, v) in &outer.entries {
        for &(row, w) in &by_row[mid] {
            *product.entry((row, col)).or_insert(0) += v * w;
        }
    }
    product.values().all(|&x| x == 0)
}

/// Rank of the augmented chain group `C_d`.
fn chain_rank<V>(complex: &SimplicialComplex<V>, d: i32) -> usize {
    match d {
        -1 => 1,
        d if d < -1 => 0,
        d => complex.dim_range(d).len(),
    }
}

/// One homology group: `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Serialized record `[degree, free_rank, [torsion...]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord(pub i32, pub usize, pub Vec<u64>);

/// Reduced integer homology by degree. Only nontrivial degrees are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<ProfileRecord>", into = "Vec<ProfileRecord>")]
pub struct HomologyProfile {
    groups: BTreeMap<i32, HomologyGroup>,
}

impl HomologyProfile {
    pub fn new() -> Self {
        Self::default()
    }

    /// The profile of a single `Z` in `degree`.
    pub fn sphere(degree: i32) -> Self {
        let mut p = Self::new();
        p.add_group(degree, HomologyGroup { free_rank: 1, torsion: Vec::new() });
        p
    }

    pub fn group(&self, degree: i32) -> HomologyGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn free_rank(&self, degree: i32) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.free_rank)
    }

    pub fn torsion(&self, degree: i32) -> &[u64] {
        self.groups.get(&degree).map_or(&[], |g| &g.torsion)
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Nontrivial degrees, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.groups.keys().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.groups.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.groups.keys().next().copied()
    }

    /// `self ⊕= Z^free ⊕ torsion` in `degree`.
    pub fn add_group(&mut self, degree: i32, group: HomologyGroup) {
        if group.is_trivial() {
            return;
        }
        let slot = self.groups.entry(degree).or_default();
        slot.free_rank += group.free_rank;
        let mut all: Vec<BigInt> = slot
            .torsion
            .iter()
            .chain(&group.torsion)
            .map(|&t| BigInt::from(t))
            .collect();
        all.retain(|t| !t.is_one());
        slot.torsion = invariant_factors(all)
            .into_iter()
            .filter(|t| !t.is_one())
            .map(|t| t.to_u64().expect("torsion coefficient fits in u64"))
            .collect();
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, g) in &other.groups {
            out.add_group(d, g.clone());
        }
        out
    }

    /// Moves every group up by `by` degrees.
    pub fn shifted(&self, by: i32) -> Self {
        Self {
            groups: self.groups.iter().map(|(&d, g)| (d + by, g.clone())).collect(),
        }
    }

    /// Alternating sum of free ranks.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&d, g)| if d.rem_euclid(2) == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
            .sum()
    }

    pub fn records(&self) -> Vec<ProfileRecord> {
        self.groups
            .iter()
            .map(|(&d, g)| ProfileRecord(d, g.free_rank, g.torsion.clone()))
            .collect()
    }
}

impl From<Vec<ProfileRecord>> for HomologyProfile {
    fn from(records: Vec<ProfileRecord>) -> Self {
        let mut p = Self::new();
        for ProfileRecord(d, free_rank, torsion) in records {
            p.add_group(d, HomologyGroup { free_rank, torsion });
        }
        p
    }
}

impl From<HomologyProfile> for Vec<ProfileRecord> {
    fn from(p: HomologyProfile) -> Self {
        p.records()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.groups.iter().map(|(d, g)| format!("H{d} = {g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

pub fn reduced_homology<V: Sync>(complex: &SimplicialComplex<V>) -> HomologyProfile {
    reduced_homology_with(complex, Execution::default())
}

/// Reduced homology in degrees `-1..=dim`, with `H̃_{-1}(∅) = Z`.
pub fn reduced_homology_with<V: Sync>(
    complex: &SimplicialComplex<V>,
    exec: Execution,
) -> HomologyProfile {
    let top = complex.dimension();
    // smith[k] is the form of ∂_k for k in 0..=top+1.
    let smith: Vec<SmithForm> = par::map_range(exec, (top + 2) as usize, |k| {
        smith_normal_form(&boundary_matrix(complex, k as i32))
    });
    let rank = |k: i32| -> usize {
        if k < 0 {
            0
        } else {
            smith[k as usize].rank()
        }
    };
    let mut profile = HomologyProfile::new();
    for d in -1..=top {
        let free_rank = chain_rank(complex, d) - rank(d) - rank(d + 1);
        let torsion = smith[(d + 1) as usize]
            .torsion()
            .map(|t| t.to_u64().expect("torsion coefficient fits in u64"))
            .collect();
        profile.add_group(d, HomologyGroup { free_rank, torsion });
    }
    profile
}

/// Reduced homology of `K * S^d` from that of `K`.
pub fn shift_join_sphere(profile: &HomologyProfile, d: i32) -> HomologyProfile {
    assert!(d >= -1, "sphere dimension must be at least -1");
    profile.shifted(d + 1)
}

/// `H̃_*(Δ(L_{<x}))` for every lattice element `x`.
pub fn lower_interval_homologies(lattice: &IntersectionLattice, exec: Execution) -> Vec<HomologyProfile> {
    par::map_range(exec, lattice.len(), |x| {
        let below = lattice
            .poset()
            .lower_set(x, true)
            .expect("element index is in range");
        reduced_homology_with(&order_complex(&below), Execution::Sequential)
    })
}

/// Reduced homology of the one-point compactified union, as the wedge over
/// `x` of `Δ(L_{<x}) * S^{dim B(x)}`.
pub fn compactified_union_homology(lattice: &IntersectionLattice) -> HomologyProfile {
    let lower = lower_interval_homologies(lattice, Execution::default());
    compactified_from_lower(lattice, &lower)
}

pub(crate) fn compactified_from_lower(
    lattice: &IntersectionLattice,
    lower: &[HomologyProfile],
) -> HomologyProfile {
    lower.iter().enumerate().fold(HomologyProfile::new(), |acc, (x, h)| {
        acc.direct_sum(&shift_join_sphere(h, lattice.dimension(x) as i32))
    })
}

/// Reduced integral cohomology of the complement in `Q^n`:
/// `H̃^i = ⊕_x H̃_{n - i - dim B(x) - 2}(Δ(L_{<x}))`.
pub fn complement_cohomology(lattice: &IntersectionLattice, ambient_dim: usize) -> HomologyProfile {
    let lower = lower_interval_homologies(lattice, Execution::default());
    complement_from_lower(lattice, ambient_dim, &lower)
}

pub(crate) fn complement_from_lower(
    lattice: &IntersectionLattice,
    ambient_dim: usize,
    lower: &[HomologyProfile],
) -> HomologyProfile {
    let n = ambient_dim as i32;
    let mut out = HomologyProfile::new();
    for (x, h) in lower.iter().enumerate() {
        let dim = lattice.dimension(x) as i32;
        for j in h.degrees() {
            out.add_group(n - dim - 2 - j, h.group(j));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityVerdict {
    Pass,
    /// Free ranks agree but torsion sits in different degrees.
    Warn,
    Fail,
}

impl fmt::Display for DualityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityVerdict::Pass => "pass",
            DualityVerdict::Warn => "warn",
            DualityVerdict::Fail => "fail",
        })
    }
}

/// Compares `H̃^i(M)` with `H̃_{n-i-1}(Û)` in every degree.
pub fn duality_verdict(
    complement: &HomologyProfile,
    compactified: &HomologyProfile,
    ambient_dim: usize,
) -> DualityVerdict {
    let n = ambient_dim as i32;
    let degrees: BTreeSet<i32> = complement
        .degrees()
        .chain(compactified.degrees().map(|k| n - k - 1))
        .collect();
    let mut verdict = DualityVerdict::Pass;
    for i in degrees {
        if complement.free_rank(i) != compactified.free_rank(n - i - 1) {
            return DualityVerdict::Fail;
        }
        if complement.torsion(i) != compactified.torsion(n - i - 1) {
            verdict = DualityVerdict::Warn;
        }
    }
    verdict
}

pub fn alexander_duality_check(lattice: &IntersectionLattice, ambient_dim: usize) -> bool {
    let lower = lower_interval_homologies(lattice, Execution::default());
    let complement = complement_from_lower(lattice, ambient_dim, &lower);
    let compact = compactified_from_lower(lattice, &lower);
    duality_verdict(&complement, &compact, ambient_dim) != DualityVerdict::Fail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{full_simplex, join_complex, sphere_complex};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_small() {
        let m = SparseMatrix::from_dense(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(smith_normal_form(&m).diagonal, big(&[2, 4]));
        let id = SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(smith_normal_form(&id).diagonal, big(&[1, 1, 1]));
        let z = SparseMatrix::zeros(3, 4);
        assert_eq!(smith_normal_form(&z).rank(), 0);
        // diag(2, 3) ~ diag(1, 6)
        let d = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&d).diagonal, big(&[1, 6]));
    }

    #[test]
    fn snf_overflow_falls_back_to_bigint() {
        let big_entry = i64::MAX / 2 + 1;
        let m = SparseMatrix::from_dense(&[vec![big_entry, 3], vec![3, big_entry]]);
        let s = smith_normal_form(&m);
        // gcd of entries is 1; the product of factors is |det|.
        let det = BigInt::from(big_entry) * BigInt::from(big_entry) - BigInt::from(9);
        assert_eq!(s.diagonal[0], BigInt::from(1));
        assert_eq!(s.diagonal[1], det.abs());
    }

    #[test]
    fn boundary_matrices() {
        let tri = sphere_complex(1);
        let d1 = boundary_matrix(&tri, 1);
        assert_eq!((d1.rows, d1.cols), (3, 3));
        for j in 0..3 {
            let col: Vec<i64> = d1.to_dense().iter().map(|r| r[j]).collect();
            assert_eq!(col.iter().filter(|&&v| v == 1).count(), 1);
            assert_eq!(col.iter().filter(|&&v| v == -1).count(), 1);
        }
        let e = boundary_matrix(&SimplicialComplex::<u8>::empty(), 0);
        assert_eq!((e.rows, e.cols), (1, 0));
        let k = full_simplex(4);
        for d in 0..=4 {
            let prod = boundary_matrix(&k, d).mul(&boundary_matrix(&k, d + 1));
            assert!(prod.iter().flatten().all(|&v| v == 0));
        }
    }

    #[test]
    fn homology_basics() {
        let circle = reduced_homology(&sphere_complex(1));
        assert_eq!(circle, HomologyProfile::sphere(1));
        assert_eq!(
            reduced_homology(&SimplicialComplex::<u8>::empty()),
            HomologyProfile::sphere(-1)
        );
        assert!(reduced_homology(&full_simplex(4)).is_zero());
        assert_eq!(reduced_homology(&sphere_complex(3)), HomologyProfile::sphere(3));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let rp2 = SimplicialComplex::from_facets((0..6).collect(), facets.iter().map(|f| f.to_vec()))
            .unwrap();
        assert_eq!(rp2.f_vector(), vec![6, 15, 10]);
        let h = reduced_homology(&rp2);
        assert_eq!(h.free_rank(1), 0);
        assert_eq!(h.torsion(1), &[2]);
        assert!(h.group(2).is_trivial());
        assert!(h.group(0).is_trivial());
    }

    #[test]
    fn shifts() {
        let empty = HomologyProfile::sphere(-1);
        assert_eq!(shift_join_sphere(&empty, 1), HomologyProfile::sphere(1));
        let mut three_points = HomologyProfile::new();
        three_points.add_group(0, HomologyGroup { free_rank: 2, torsion: vec![] });
        let shifted = shift_join_sphere(&three_points, 0);
        assert_eq!(shifted.free_rank(1), 2);
        let pts = SimplicialComplex::from_facets(vec![0, 1, 2], [vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(reduced_homology(&join_complex(&pts, &sphere_complex(0))), shifted);
        assert_eq!(shift_join_sphere(&three_points, -1), three_points);
    }

    #[test]
    fn profile_sums_normalize_torsion() {
        let mut a = HomologyProfile::new();
        a.add_group(1, HomologyGroup { free_rank: 0, torsion: vec![2] });
        let mut b = HomologyProfile::new();
        b.add_group(1, HomologyGroup { free_rank: 1, torsion: vec![3] });
        let s = a.direct_sum(&b);
        assert_eq!(s.torsion(1), &[6]);
        assert_eq!(s.free_rank(1), 1);
        let mut c = HomologyProfile::new();
        c.add_group(1, HomologyGroup { free_rank: 0, torsion: vec![2, 4] });
        assert_eq!(c.direct_sum(&a).torsion(1), &[2, 2, 4]);
    }

    #[test]
    fn duality_verdicts() {
        let m = HomologyProfile::sphere(0);
        let u = HomologyProfile::sphere(1);
        assert_eq!(duality_verdict(&m, &u, 2), DualityVerdict::Pass);
        assert_eq!(duality_verdict(&m, &u, 3), DualityVerdict::Fail);
        let mut mt = m.clone();
        mt.add_group(0, HomologyGroup { free_rank: 0, torsion: vec![2] });
        assert_eq!(duality_verdict(&mt, &u, 2), DualityVerdict::Warn);
    }

    #[test]
    fn euler_relation() {
        for k in [sphere_complex(2), full_simplex(3), join_complex(&sphere_complex(0), &sphere_complex(1)).map_labels(|_| 0)] {
            let h = reduced_homology(&k);
            assert_eq!(h.reduced_euler_characteristic() + 1, k.euler_characteristic());
        }
    }
}
