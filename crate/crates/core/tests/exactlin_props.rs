use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use subarr::exactlin::{int, AffineSubspace, Rational};

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

/// A consistent subspace of `Q^n`, or `None` when the draw is inconsistent.
fn subspace(n: usize) -> impl Strategy<Value = Option<AffineSubspace>> {
    (1..=n).prop_flat_map(move |m| {
        (
            prop::collection::vec(prop::collection::vec(small(), n), m),
            prop::collection::vec(small(), m),
        )
            .prop_map(move |(rows, rhs)| {
                let rows: Vec<Vec<Rational>> =
                    rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
                let rhs: Vec<Rational> = rhs.iter().map(|&v| int(v)).collect();
                AffineSubspace::canonicalize(&rows, &rhs, n).unwrap()
            })
    })
}

fn three(n: usize) -> impl Strategy<Value = (AffineSubspace, AffineSubspace, AffineSubspace)> {
    (subspace(n), subspace(n), subspace(n))
        .prop_filter_map("inconsistent draw", |(a, b, c)| Some((a?, b?, c?)))
}

/// Brute-force membership: substitute the point into the original system.
fn satisfies(rows: &[Vec<i64>], rhs: &[i64], p: &[Rational]) -> bool {
    rows.iter().zip(rhs).all(|(row, &b)| {
        let lhs: Rational = row.iter().zip(p).map(|(&a, x)| int(a) * x).sum();
        lhs == int(b)
    })
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(s in subspace(4)) {
        if let Some(s) = s {
            let again = AffineSubspace::canonicalize(s.equations(), s.rhs(), 4).unwrap();
            prop_assert_eq!(again, Some(s));
        }
    }

    #[test]
    fn intersection_laws((a, b, c) in three(3)) {
        let ab = a.intersect(&b).unwrap();
        prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), Some(a.clone()));
        let left = ab.as_ref().and_then(|x| x.intersect(&c).unwrap());
        let right = b.intersect(&c).unwrap().and_then(|x| a.intersect(&x).unwrap());
        prop_assert_eq!(left, right);
        if let Some(m) = &ab {
            prop_assert!(m.dimension() <= a.dimension().min(b.dimension()));
            prop_assert!(a.contains(m).unwrap() && b.contains(m).unwrap());
        }
        prop_assert_eq!(a.contains(&b).unwrap(), ab.as_ref() == Some(&b));
    }

    #[test]
    fn parametric_points_satisfy_the_input_system(
        rows in prop::collection::vec(prop::collection::vec(small(), 4), 1..=3),
        rhs in prop::collection::vec(small(), 3),
        coeffs in prop::collection::vec((-6i64..=6, 1i64..=5), 4),
    ) {
        let rhs = &rhs[..rows.len()];
        let qrows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        let qrhs: Vec<Rational> = rhs.iter().map(|&v| int(v)).collect();
        if let Some(s) = AffineSubspace::canonicalize(&qrows, &qrhs, 4).unwrap() {
            let (point, dirs) = s.parametric();
            prop_assert_eq!(dirs.len(), s.dimension());
            let mut p = point.clone();
            for (d, &(num, den)) in dirs.iter().zip(&coeffs) {
                let c = BigRational::new(BigInt::from(num), BigInt::from(den));
                for (x, y) in p.iter_mut().zip(d) {
                    *x += &c * y;
                }
            }
            prop_assert!(satisfies(&rows, rhs, &p));
            prop_assert!(s.contains_point(&p).unwrap());
            let back = AffineSubspace::from_point_directions(&point, &dirs).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
