//! Seed-deterministic random arrangements for property runs.
//!
//! Ambient dimension 2..=4, 2..=5 subspaces, integer coefficients in
//! `[-3, 3]`. Draws that are inconsistent, fill the whole space, or violate
//! the no-containment rule are rejected and redrawn.
//!
//! Coefficients are zero more often than uniform sampling would give, and
//! right-hand sides are zero half the time. Uniform draws are almost always
//! in general position, which leaves the Morse matching with little to do.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::exactlin::{int, AffineSubspace, Rational};
use crate::par::{self, Execution};

pub const COEFF_RANGE: std::ops::RangeInclusive<i64> = -3..=3;
/// Extra probability of drawing a zero coefficient.
const ZERO_BIAS: f64 = 0.35;

fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    if rng.random_bool(ZERO_BIAS) {
        int(0)
    } else {
        int(rng.random_range(COEFF_RANGE))
    }
}

fn random_subspace<R: Rng>(rng: &mut R, n: usize) -> AffineSubspace {
    loop {
        let codim = rng.random_range(1..n.max(2));
        let rows: Vec<Vec<Rational>> = (0..codim)
            .map(|_| (0..n).map(|_| coefficient(rng)).collect())
            .collect();
        let through_origin = rng.random_bool(0.5);
        let rhs: Vec<Rational> = (0..codim)
            .map(|_| if through_origin { int(0) } else { coefficient(rng) })
            .collect();
        if let Ok(Some(s)) = AffineSubspace::canonicalize(&rows, &rhs, n) {
            if s.codimension() > 0 {
                return s;
            }
        }
    }
}

/// One random arrangement from `rng`.
pub fn random_arrangement<R: Rng>(rng: &mut R) -> Arrangement {
    let n = rng.random_range(2..=4usize);
    let k = rng.random_range(2..=5usize);
    let mut subspaces: Vec<AffineSubspace> = Vec::with_capacity(k);
    while subspaces.len() < k {
        let s = random_subspace(rng, n);
        let comparable = subspaces.iter().any(|t| {
            t.contains(&s).expect("same ambient dimension") || s.contains(t).expect("same ambient dimension")
        });
        if !comparable {
            subspaces.push(s);
        }
    }
    Arrangement::validate(subspaces, n).expect("generator rejects containments")
}

/// Arrangement `index` of the corpus for `seed`. Each index has its own
/// stream, so arrangements can be drawn independently.
pub fn corpus_arrangement(seed: u64, index: u64) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    random_arrangement(&mut rng)
}

pub fn random_corpus(seed: u64, count: usize) -> Vec<Arrangement> {
    random_corpus_with(seed, count, Execution::default())
}

pub fn random_corpus_with(seed: u64, count: usize, exec: Execution) -> Vec<Arrangement> {
    par::map_range(exec, count, |i| corpus_arrangement(seed, i as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let a = random_corpus_with(42, 30, Execution::Sequential);
        let b = random_corpus_with(42, 30, Execution::Parallel);
        assert_eq!(a, b);
        for arr in &a {
            assert!((2..=4).contains(&arr.ambient_dim()));
            assert!((2..=5).contains(&arr.len()));
            for s in arr.subspaces() {
                assert!(s.codimension() >= 1);
            }
        }
        assert_ne!(random_corpus(7, 5), random_corpus(8, 5));
    }
}
