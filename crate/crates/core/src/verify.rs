//! Runs every module invariant on one arrangement, or on a random corpus.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{
    intersection_semilattice_with, nerve_of_lattice, vassiliev_skeleton, zz_skeleton, Arrangement,
    IntersectionLattice,
};
use crate::complexes::{
    barycentric_subdivision, join_complex, order_complex, sphere_complex, subdivision_size,
    SimplicialComplex,
};
use crate::exactlin::{AffineSubspace, Rational};
use crate::generate::corpus_arrangement;
use crate::homology::{
    boundary_squared_is_zero, compactified_from_lower, complement_from_lower, duality_verdict,
    lower_interval_homologies, reduced_homology_with, shift_join_sphere, DualityVerdict,
    HomologyProfile,
};
use crate::morse::{
    build_matching_with, classify, collapse_sequence, critical_matches_order_complex,
    critical_subcomplex, partition_holds, replay_collapses, verify_acyclic,
    verify_identity_condition, verify_iota_monotone,
};
use crate::par::{self, Execution};

/// Default cap on the number of simplices of `Bd(N(L))`.
pub const DEFAULT_MAX_SIMPLICES: u128 = 200_000;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_simplices: u128,
    /// Recompute homology after every elementary collapse.
    pub homology_each_collapse: bool,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_simplices: DEFAULT_MAX_SIMPLICES,
            homology_each_collapse: true,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{verdict} {}", c.name)?;
            } else {
                writeln!(f, "{verdict} {} ({})", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Bd(N(L)) would have {size} simplices, above the limit of {limit}")]
pub struct TooLarge {
    pub size: u128,
    pub limit: u128,
}

/// Size of `Bd(N(L))` without building it.
pub fn vassiliev_size(lattice: &IntersectionLattice) -> u128 {
    subdivision_size(&nerve_of_lattice(lattice))
}

pub fn check_size(lattice: &IntersectionLattice, limit: u128) -> Result<u128, TooLarge> {
    let size = vassiliev_size(lattice);
    if size > limit {
        return Err(TooLarge { size, limit });
    }
    Ok(size)
}

fn check_exactlin(report: &mut VerifyReport, lattice: &IntersectionLattice) {
    let flats: Vec<&AffineSubspace> = (0..lattice.len()).map(|x| lattice.flat(x)).collect();

    let idempotent = flats.iter().all(|f| {
        AffineSubspace::canonicalize(f.equations(), f.rhs(), f.ambient_dim())
            .ok()
            .flatten()
            .as_ref()
            == Some(*f)
    });
    report.push("exactlin.canonical_idempotent", idempotent, "");

    let mut laws = true;
    for a in &flats {
        laws &= a.intersect(a).ok().flatten().as_ref() == Some(*a);
        for b in &flats {
            let ab = a.intersect(b).expect("same ambient dimension");
            let ba = b.intersect(a).expect("same ambient dimension");
            laws &= ab == ba;
            if let Some(m) = &ab {
                laws &= m.dimension() <= a.dimension().min(b.dimension());
                laws &= a.contains(m).unwrap_or(false) && b.contains(m).unwrap_or(false);
            }
        }
    }
    let k = lattice.num_atoms();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let (a, b, c) = (flats[i], flats[j], flats[l]);
                let left = a.intersect(b).unwrap().and_then(|ab| ab.intersect(c).unwrap());
                let right = b.intersect(c).unwrap().and_then(|bc| a.intersect(&bc).unwrap());
                laws &= left == right;
            }
        }
    }
    report.push("exactlin.intersection_laws", laws, "");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut members = true;
    for f in &flats {
        let (point, dirs) = f.parametric();
        for _ in 0..4 {
            let mut p: Vec<Rational> = point.clone();
            for d in &dirs {
                let c = Rational::new(rng.random_range(-5i64..=5).into(), rng.random_range(1i64..=4).into());
                for (pi, di) in p.iter_mut().zip(d) {
                    *pi += &c * di;
                }
            }
            members &= f.contains_point(&p).unwrap_or(false);
        }
        // A point off the flat: perturb along an equation's normal.
        if let Some(row) = f.equations().first() {
            let off: Vec<Rational> = point.iter().zip(row).map(|(p, r)| p + r).collect();
            members &= !f.contains_point(&off).unwrap_or(true);
        }
    }
    report.push("exactlin.membership", members, "");
}

fn check_lattice(report: &mut VerifyReport, lattice: &IntersectionLattice) {
    let p = lattice.poset();
    report.push("poset.axioms", p.check_axioms().is_ok(), "");
    report.push("poset.semilattice", p.is_semilattice(), "");
    let singleton = (0..p.len()).all(|x| p.join(&[x]) == Ok(Some(x)));
    report.push("poset.join_singleton", singleton, "");
    let lower_induced = (0..p.len()).all(|x| {
        let idx = p.lower_set_indices(x, true).expect("in range");
        let sub = p.lower_set(x, true).expect("in range");
        idx.iter()
            .enumerate()
            .all(|(a, &i)| idx.iter().enumerate().all(|(b, &j)| sub.leq(a, b) == p.leq(i, j)))
    });
    report.push("poset.lower_set_induced", lower_induced, "");
    let bd_ok = p.len() > 12 || p.barycentric_subdivision().len() as u128 == p.chain_count();
    report.push("poset.subdivision_size", bd_ok, format!("{} chains", p.chain_count()));

    let atoms: Vec<usize> = (0..lattice.num_atoms()).collect();
    report.push("lattice.atoms_minimal", p.minimal_elements() == atoms, "");

    let mut order = true;
    for x in 0..p.len() {
        for y in 0..p.len() {
            let contains = lattice.flat(x).contains(lattice.flat(y)).unwrap_or(false);
            order &= p.leq(x, y) == contains;
            if p.lt(x, y) {
                order &= lattice.dimension(x) > lattice.dimension(y);
            }
        }
    }
    report.push("lattice.order_reversing", order, "");

    let flats_ok = (0..p.len()).all(|x| {
        let below = lattice.atoms_below(x);
        let meet = below.iter().skip(1).try_fold(lattice.flat(below[0]).clone(), |acc, &a| {
            acc.intersect(lattice.flat(a)).ok().flatten()
        });
        meet.as_ref() == Some(lattice.flat(x))
    });
    report.push("lattice.flat_is_atom_intersection", flats_ok, "");

    let mut closed = true;
    for x in 0..p.len() {
        for y in 0..p.len() {
            if let Some(m) = lattice.flat(x).intersect(lattice.flat(y)).expect("same ambient") {
                closed &= (0..p.len()).any(|z| lattice.flat(z) == &m);
            }
        }
    }
    report.push("lattice.closed_under_intersection", closed, "");
}

fn check_complexes(
    report: &mut VerifyReport,
    zz: &SimplicialComplex<usize>,
    nerve: &SimplicialComplex<usize>,
    bd: &SimplicialComplex<Vec<usize>>,
) {
    let closed = zz.is_downward_closed() && nerve.is_downward_closed() && bd.is_downward_closed();
    report.push("complexes.downward_closed", closed, "");
    let bd_direct = barycentric_subdivision(nerve);
    report.push(
        "complexes.subdivision_euler",
        bd_direct.euler_characteristic() == nerve.euler_characteristic()
            && bd.euler_characteristic() == nerve.euler_characteristic(),
        format!("chi = {}", nerve.euler_characteristic()),
    );
    let chi = zz.euler_characteristic();
    let join_ok = (-1..=2).all(|d| {
        let s = sphere_complex(d);
        let cs = s.euler_characteristic();
        join_complex(zz, &s).euler_characteristic() == chi + cs - chi * cs
    });
    report.push("complexes.join_euler", join_ok, "");
}

fn check_homology(
    report: &mut VerifyReport,
    lattice: &IntersectionLattice,
    zz: &SimplicialComplex<usize>,
    bd: &SimplicialComplex<Vec<usize>>,
    exec: Execution,
) -> HomologyProfile {
    let dd = (0..=bd.dimension()).all(|d| boundary_squared_is_zero(bd, d))
        && (0..=zz.dimension()).all(|d| boundary_squared_is_zero(zz, d));
    report.push("homology.boundary_squared_zero", dd, "");

    let h_zz = reduced_homology_with(zz, exec);
    let h_bd = reduced_homology_with(bd, exec);
    let euler = h_zz.reduced_euler_characteristic() + 1 == zz.euler_characteristic()
        && h_bd.reduced_euler_characteristic() + 1 == bd.euler_characteristic();
    report.push("homology.euler_relation", euler, "");
    report.push(
        "homology.nerve_theorem",
        h_zz == h_bd,
        format!("Delta(L): {h_zz}; Bd(N(L)): {h_bd}"),
    );

    let lower = lower_interval_homologies(lattice, exec);
    let mut shift_ok = true;
    let mut corpus: Vec<(SimplicialComplex<usize>, HomologyProfile)> = vec![(zz.clone(), h_zz.clone())];
    for (x, h) in lower.iter().enumerate() {
        let below = lattice.poset().lower_set(x, true).expect("in range");
        corpus.push((order_complex(&below).index_labels(), h.clone()));
    }
    for (k, h) in &corpus {
        for d in -1..=2 {
            let joined = join_complex(k, &sphere_complex(d));
            shift_ok &= shift_join_sphere(h, d) == reduced_homology_with(&joined, Execution::Sequential);
        }
    }
    report.push("homology.join_shift", shift_ok, format!("{} complexes", corpus.len()));

    let n = lattice.ambient_dim();
    let complement = complement_from_lower(lattice, n, &lower);
    let compact = compactified_from_lower(lattice, &lower);
    let verdict = duality_verdict(&complement, &compact, n);
    report.push(
        "homology.alexander_duality",
        verdict != DualityVerdict::Fail,
        format!("{verdict}"),
    );
    h_bd
}

fn check_morse(
    report: &mut VerifyReport,
    lattice: &IntersectionLattice,
    bd: &SimplicialComplex<Vec<usize>>,
    h_bd: &HomologyProfile,
    opts: &VerifyOptions,
) {
    let classes = classify(lattice, bd, opts.exec);
    let w = build_matching_with(lattice, bd, opts.exec);
    report.push(
        "morse.partition",
        partition_holds(&classes, &w)
            && w.forward().len() + w.backward().len() + w.critical().len() == bd.len(),
        format!("{} pairs, {} critical", w.len(), w.critical().len()),
    );
    let acyclic = verify_acyclic(bd, &w);
    let iota = verify_iota_monotone(lattice, bd, &w);
    report.push("morse.acyclic_cycle_search", acyclic, "");
    report.push("morse.acyclic_iota", iota, "");

    let critical = critical_subcomplex(bd, &w);
    let iso = critical
        .as_ref()
        .is_ok_and(|c| critical_matches_order_complex(lattice, c));
    report.push("morse.critical_is_order_complex", iso, "");

    let identity = verify_identity_condition(lattice, bd, &w);
    report.push(
        "morse.identity_condition",
        identity.all_passed(),
        format!("{}/{}", identity.passed(), identity.entries.len()),
    );

    let Ok(steps) = collapse_sequence(bd, &w) else {
        report.push("morse.collapse_sequence", false, "stuck");
        return;
    };
    let chi = bd.euler_characteristic();
    let mut euler_ok = true;
    let mut homology_ok = true;
    let replay = replay_collapses(bd, &steps, |_, live| {
        let current = bd.subcomplex(live).expect("collapses keep a complex");
        euler_ok &= current.euler_characteristic() == chi;
        if opts.homology_each_collapse {
            homology_ok &= &reduced_homology_with(&current, Execution::Sequential) == h_bd;
        }
        true
    });
    let final_ok = match (&replay, &critical) {
        (Ok(live), Ok(_)) => *live == w.critical(),
        _ => false,
    };
    report.push(
        "morse.collapse_sequence",
        replay.is_ok() && final_ok && steps.len() == w.len(),
        format!("{} collapses: {} -> {} simplices", steps.len(), bd.len(), bd.len() - 2 * steps.len()),
    );
    report.push("morse.collapse_euler", euler_ok, "");
    if opts.homology_each_collapse {
        report.push("morse.collapse_homology", homology_ok, "");
    }
}

/// Runs every invariant suite on `arr`.
pub fn verify_arrangement(arr: &Arrangement, opts: &VerifyOptions) -> Result<VerifyReport, TooLarge> {
    let lattice = intersection_semilattice_with(arr, opts.exec);
    check_size(&lattice, opts.max_simplices)?;
    let zz = zz_skeleton(&lattice);
    let nerve = nerve_of_lattice(&lattice);
    let bd = vassiliev_skeleton(&lattice);

    let mut report = VerifyReport::default();
    check_exactlin(&mut report, &lattice);
    check_lattice(&mut report, &lattice);
    check_complexes(&mut report, &zz, &nerve, &bd);
    let h_bd = check_homology(&mut report, &lattice, &zz, &bd, opts.exec);
    check_morse(&mut report, &lattice, &bd, &h_bd, opts);
    Ok(report)
}

/// Verifies arrangements `0..count` of the corpus for `seed`. Arrangements
/// fan out across workers when `opts.exec` allows; each one is verified
/// sequentially inside. Reports come back in corpus order.
pub fn verify_corpus(
    seed: u64,
    count: usize,
    opts: &VerifyOptions,
) -> Vec<(Arrangement, Result<VerifyReport, TooLarge>)> {
    let inner = VerifyOptions {
        exec: Execution::Sequential,
        ..opts.clone()
    };
    par::map_range(opts.exec, count, |i| {
        let arr = corpus_arrangement(seed, i as u64);
        let r = verify_arrangement(&arr, &inner);
        (arr, r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::*;
    use crate::arrangement::intersection_semilattice;

    #[test]
    fn fixtures_pass_every_check() {
        for arr in [three_lines(), coordinate_axes(), parallel_lines(), skew_lines(), hyperplane(3)] {
            let report = verify_arrangement(&arr, &VerifyOptions::default()).unwrap();
            assert!(report.all_passed(), "{report}");
            assert!(report.checks.len() >= 25);
        }
    }

    #[test]
    fn three_lines_details() {
        let report = verify_arrangement(&three_lines(), &VerifyOptions::default()).unwrap();
        assert_eq!(report.get("morse.identity_condition").unwrap().detail, "9/9");
        assert_eq!(
            report.get("morse.collapse_sequence").unwrap().detail,
            "9 collapses: 25 -> 7 simplices"
        );
    }

    #[test]
    fn size_guard() {
        let l = intersection_semilattice(&three_lines());
        assert_eq!(vassiliev_size(&l), 25);
        assert_eq!(check_size(&l, 24), Err(TooLarge { size: 25, limit: 24 }));
        let opts = VerifyOptions {
            max_simplices: 10,
            ..Default::default()
        };
        assert!(verify_arrangement(&three_lines(), &opts).is_err());
    }

    #[test]
    fn small_corpus() {
        let opts = VerifyOptions::default();
        for (arr, r) in verify_corpus(3, 8, &opts) {
            let r = r.unwrap();
            assert!(r.all_passed(), "{arr:?}\n{r}");
        }
    }
}
