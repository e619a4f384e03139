//! Exact rational linear algebra for affine subspaces of `Q^n`.
//!
//! An [`AffineSubspace`] is stored as the solution set of `A x = b` with
//! `[A | b]` in reduced row echelon form (unit pivots, strictly increasing
//! pivot columns, no zero rows). That form is unique, so structural equality
//! and hashing coincide with equality of point sets.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{equations} equations but {rhs} right-hand-side entries")]
    RhsLength { equations: usize, rhs: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("point has {found} coordinates, expected {expected}")]
    PointLength { expected: usize, found: usize },
}

/// A nonempty affine subspace of `Q^n` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineSubspace {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

/// Row-reduces `rows` in place (Gauss-Jordan) and returns the pivot column of
/// every nonzero row. Zero rows end up at the bottom. Only the first `width`
/// columns are eligible as pivots, so an augmented column can ride along.
fn rref_in_place(rows: &mut [Vec<Rational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

impl AffineSubspace {
    /// Canonicalizes the system `equations · x = rhs` over `Q^n`.
    ///
    /// Returns `Ok(None)` when the system is inconsistent.
    pub fn canonicalize(
        equations: &[Vec<Rational>],
        rhs: &[Rational],
        ambient_dim: usize,
    ) -> Result<Option<Self>, LinError> {
        if equations.len() != rhs.len() {
            return Err(LinError::RhsLength {
                equations: equations.len(),
                rhs: rhs.len(),
            });
        }
        let mut aug = Vec::with_capacity(equations.len());
        for (i, (row, b)) in equations.iter().zip(rhs).enumerate() {
            if row.len() != ambient_dim {
                return Err(LinError::RowLength {
                    row: i,
                    expected: ambient_dim,
                    found: row.len(),
                });
            }
            let mut r = row.clone();
            r.push(b.clone());
            aug.push(r);
        }
        Ok(Self::from_augmented(aug, ambient_dim))
    }

    fn from_augmented(mut aug: Vec<Vec<Rational>>, n: usize) -> Option<Self> {
        let pivots = rref_in_place(&mut aug, n);
        let rank = pivots.len();
        if aug[rank..].iter().any(|row| !row[n].is_zero()) {
            return None;
        }
        aug.truncate(rank);
        let mut rows = Vec::with_capacity(rank);
        let mut rhs = Vec::with_capacity(rank);
        for mut row in aug {
            rhs.push(row.pop().expect("augmented row"));
            rows.push(row);
        }
        Some(Self {
            ambient_dim: n,
            rows,
            rhs,
        })
    }

    /// The whole space `Q^n`.
    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Builds `point + span(directions)`.
    pub fn from_point_directions(
        point: &[Rational],
        directions: &[Vec<Rational>],
    ) -> Result<Self, LinError> {
        let n = point.len();
        for (i, d) in directions.iter().enumerate() {
            if d.len() != n {
                return Err(LinError::RowLength {
                    row: i,
                    expected: n,
                    found: d.len(),
                });
            }
        }
        // Equations are the null space of the direction matrix.
        let mut dirs = directions.to_vec();
        let pivots = rref_in_place(&mut dirs, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut equations = Vec::with_capacity(free.len());
        for &f in &free {
            let mut w = vec![Rational::zero(); n];
            w[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                w[p] = -dirs[r][f].clone();
            }
            equations.push(w);
        }
        let rhs: Vec<Rational> = equations.iter().map(|w| dot(w, point)).collect();
        Ok(Self::canonicalize(&equations, &rhs, n)?.expect("a point always satisfies its own equations"))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dimension(&self) -> usize {
        self.ambient_dim - self.rows.len()
    }

    pub fn codimension(&self) -> usize {
        self.rows.len()
    }

    pub fn equations(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `self ∩ other`, or `None` when they are disjoint.
    pub fn intersect(&self, other: &Self) -> Result<Option<Self>, LinError> {
        self.check_ambient(other)?;
        let aug = self
            .augmented_rows()
            .chain(other.augmented_rows())
            .collect::<Vec<_>>();
        if aug.is_empty() {
            return Ok(Some(Self::full(self.ambient_dim)));
        }
        Ok(Self::from_augmented(aug, self.ambient_dim))
    }

    fn augmented_rows(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        self.rows.iter().zip(&self.rhs).map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
    }

    /// True iff `other ⊆ self` as point sets.
    pub fn contains(&self, other: &Self) -> Result<bool, LinError> {
        self.check_ambient(other)?;
        if other.dimension() > self.dimension() {
            return Ok(false);
        }
        // other ⊆ self iff adding self's equations to other's changes nothing.
        Ok(self.intersect(other)?.as_ref() == Some(other))
    }

    pub fn contains_point(&self, point: &[Rational]) -> Result<bool, LinError> {
        if point.len() != self.ambient_dim {
            return Err(LinError::PointLength {
                expected: self.ambient_dim,
                found: point.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .zip(&self.rhs)
            .all(|(row, b)| &dot(row, point) == b))
    }

    /// A particular point and a basis of directions with
    /// `self = point + span(directions)`.
    pub fn parametric(&self) -> (Vec<Rational>, Vec<Vec<Rational>>) {
        let n = self.ambient_dim;
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.iter().position(|v| !v.is_zero()).expect("no zero rows"))
            .collect();
        let mut point = vec![Rational::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            point[p] = self.rhs[r].clone();
        }
        let directions = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut d = vec![Rational::zero(); n];
                d[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    d[p] = -self.rows[r][f].clone();
                }
                d
            })
            .collect();
        (point, directions)
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Convenience for tests and examples: integer coefficient rows.
pub fn subspace_from_ints(
    equations: &[&[i64]],
    rhs: &[i64],
    ambient_dim: usize,
) -> Result<Option<AffineSubspace>, LinError> {
    let eq: Vec<Vec<Rational>> = equations
        .iter()
        .map(|row| row.iter().map(|&v| int(v)).collect())
        .collect();
    let b: Vec<Rational> = rhs.iter().map(|&v| int(v)).collect();
    AffineSubspace::canonicalize(&eq, &b, ambient_dim)
}

impl fmt::Debug for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineSubspace({self})")
    }
}

impl fmt::Display for AffineSubspace {
    /// Renders the equations, e.g. `{x1 - x2 = 0, x3 = 1}` or `Q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "Q^{}", self.ambient_dim);
        }
        write!(f, "{{")?;
        for (i, (row, b)) in self.rows.iter().zip(&self.rhs).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let mut first = true;
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c < &Rational::zero();
                let mag = if neg { -c.clone() } else { c.clone() };
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "x{}", j + 1)?;
                first = false;
            }
            write!(f, " = {b}")?;
        }
        write!(f, "}}")
    }
}
