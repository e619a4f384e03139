use std::collections::BTreeSet;

use proptest::prelude::*;

use subarr::arrangement::{
    intersection_semilattice, intersection_semilattice_with, nerve_of_lattice, vassiliev_skeleton,
    zz_skeleton, Arrangement,
};
use subarr::complexes::subdivision_size;
use subarr::exactlin::{subspace_from_ints, AffineSubspace};
use subarr::generate::corpus_arrangement;
use subarr::homology::reduced_homology;
use subarr::par::Execution;

/// Every nonempty intersection of a nonempty subset of the atoms, by
/// enumerating all subsets.
fn subset_flats(arr: &Arrangement) -> BTreeSet<AffineSubspace> {
    let k = arr.len();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << k) {
        let mut acc = Some(AffineSubspace::full(arr.ambient_dim()));
        for (i, s) in arr.subspaces().iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc.and_then(|a| a.intersect(s).unwrap());
            }
        }
        if let Some(flat) = acc {
            out.insert(flat);
        }
    }
    out
}

fn planes(coeffs: &[[i64; 4]]) -> Arrangement {
    let subspaces = coeffs
        .iter()
        .map(|c| subspace_from_ints(&[&c[..3]], &[c[3]], 3).unwrap().unwrap())
        .collect();
    Arrangement::validate(subspaces, 3).unwrap()
}

#[test]
fn four_generic_planes() {
    let arr = planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]]);
    let l = intersection_semilattice(&arr);
    assert_eq!(l.len(), 14);
    let dims: Vec<usize> = (0..l.len()).map(|x| l.dimension(x)).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 4);
    assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 6);
    assert_eq!(dims.iter().filter(|&&d| d == 0).count(), 4);
    assert_eq!(subset_flats(&arr).len(), 14);
}

#[test]
fn parallel_planes_have_no_join() {
    let arr = planes(&[[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 0]]);
    let l = intersection_semilattice(&arr);
    // Two parallel planes, the third meets each in a line.
    assert_eq!(l.len(), 5);
    assert_eq!(l.join_of_atoms(&[0, 1]).unwrap(), None);
    assert_eq!(nerve_of_lattice(&l).f_vector(), vec![3, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_matches_subset_oracle(seed in any::<u64>(), index in 0u64..1000) {
        let arr = corpus_arrangement(seed, index);
        let l = intersection_semilattice(&arr);
        let flats: BTreeSet<AffineSubspace> = (0..l.len()).map(|x| l.flat(x).clone()).collect();
        prop_assert_eq!(flats.len(), l.len());
        prop_assert_eq!(&flats, &subset_flats(&arr));
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(l.poset().leq(x, y), l.flat(x).contains(l.flat(y)).unwrap());
            }
        }
        prop_assert!(l.poset().is_semilattice());
        prop_assert_eq!(l.poset().minimal_elements(), (0..arr.len()).collect::<Vec<_>>());
        let seq = intersection_semilattice_with(&arr, Execution::Sequential);
        prop_assert_eq!(seq.poset().elements(), l.poset().elements());
    }

    #[test]
    fn skeletons_agree(seed in any::<u64>(), index in 0u64..1000) {
        let l = intersection_semilattice(&corpus_arrangement(seed, index));
        let zz = zz_skeleton(&l);
        let nerve = nerve_of_lattice(&l);
        let bd = vassiliev_skeleton(&l);
        prop_assert_eq!(subdivision_size(&nerve), bd.len() as u128);
        prop_assert!(bd.is_downward_closed() && zz.is_downward_closed());
        prop_assert_eq!(bd.euler_characteristic(), nerve.euler_characteristic());
        let h = reduced_homology(&zz);
        prop_assert_eq!(&reduced_homology(&bd), &h);
        prop_assert_eq!(&reduced_homology(&nerve), &h);
    }
}
