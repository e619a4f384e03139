use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use subarr::arrangement::{intersection_semilattice, intersection_semilattice_with, vassiliev_skeleton, Arrangement};
use subarr::exactlin::subspace_from_ints;
use subarr::generate::random_corpus_with;
use subarr::homology::{lower_interval_homologies, reduced_homology_with};
use subarr::morse::build_matching_with;
use subarr::par::Execution;
use subarr::verify::{verify_corpus, VerifyOptions};

const POLICIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// `k` planes through the origin of `Q^4` with normals `(1, t, t^2, t^3)`.
fn moment_planes(k: i64) -> Arrangement {
    let subspaces = (1..=k)
        .map(|t| subspace_from_ints(&[&[1, t, t * t, t * t * t]], &[0], 4).unwrap().unwrap())
        .collect();
    Arrangement::validate(subspaces, 4).unwrap()
}

fn lattice(c: &mut Criterion) {
    let arr = moment_planes(7);
    let mut g = c.benchmark_group("intersection_semilattice");
    for (name, exec) in POLICIES {
        g.bench_function(name, |b| b.iter(|| intersection_semilattice_with(black_box(&arr), exec)));
    }
    g.finish();
}

fn matching_and_homology(c: &mut Criterion) {
    let arr = moment_planes(5);
    let l = intersection_semilattice(&arr);
    let k = vassiliev_skeleton(&l);
    let mut g = c.benchmark_group("skeleton");
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new("build_matching", name), &exec, |b, &e| {
            b.iter(|| build_matching_with(&l, &k, e))
        });
        g.bench_with_input(BenchmarkId::new("reduced_homology", name), &exec, |b, &e| {
            b.iter(|| reduced_homology_with(&k, e))
        });
        g.bench_with_input(BenchmarkId::new("lower_intervals", name), &exec, |b, &e| {
            b.iter(|| lower_interval_homologies(&l, e))
        });
    }
    g.finish();
}

fn corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("corpus");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new("generate", name), &exec, |b, &e| {
            b.iter(|| random_corpus_with(7, 200, e))
        });
        let opts = VerifyOptions {
            exec,
            homology_each_collapse: false,
            ..VerifyOptions::default()
        };
        g.bench_with_input(BenchmarkId::new("verify", name), &opts, |b, o| {
            b.iter(|| verify_corpus(7, 40, o))
        });
    }
    g.finish();
}

criterion_group!(benches, lattice, matching_and_homology, corpus);
criterion_main!(benches);
