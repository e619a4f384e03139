//! Library side of the `subarr` command: file loading, commands, reports.

pub mod input;
pub mod report;

use subarr::arrangement::{intersection_semilattice, vassiliev_skeleton, zz_skeleton, Arrangement};
use subarr::homology::{compactified_union_homology, complement_cohomology, duality_verdict};
use subarr::morse::{
    build_matching, collapse_sequence, critical_matches_order_complex, critical_subcomplex,
    format_trace, replay_collapses, verify_acyclic, verify_identity_condition, verify_iota_monotone,
};
use subarr::verify::{
    check_size, verify_arrangement, verify_corpus, TooLarge, VerifyOptions, DEFAULT_MAX_SIMPLICES,
};
use subarr::SimplicialComplex;

use input::InputError;
use report::{
    ArrangementVerify, BettiReport, CheckLine, CollapseReport, LatticeElement, ModelCounts, ModelsReport,
    Output, VerifyReport,
};

pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INVARIANT_FAILURE: u8 = 1;
    pub const VALIDATION_FAILURE: u8 = 2;
    pub const PARSE_FAILURE: u8 = 3;
    pub const INTERNAL_FAILURE: u8 = 4;
}

/// A command failure with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let code = match e {
            InputError::Parse { .. } => exit::PARSE_FAILURE,
            InputError::Invalid(_) => exit::VALIDATION_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<TooLarge> for Failure {
    fn from(e: TooLarge) -> Self {
        Failure {
            code: exit::VALIDATION_FAILURE,
            message: format!("{e}; raise --max-simplices to proceed"),
        }
    }
}

/// A finished command: the report and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finished {
    pub output: Output,
    pub code: u8,
}

impl Finished {
    fn ok(output: Output) -> Self {
        Self {
            output,
            code: exit::SUCCESS,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_simplices: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_simplices: DEFAULT_MAX_SIMPLICES,
        }
    }
}

pub fn lattice_report(arr: &Arrangement) -> Vec<LatticeElement> {
    let l = intersection_semilattice(arr);
    let pairs = l.poset().covering_pairs();
    (0..l.len())
        .map(|x| LatticeElement {
            name: l.element_name(x),
            dim: l.dimension(x),
            atoms: l.atoms_below(x).iter().map(|&a| l.element_name(a)).collect(),
            flat: l.flat(x).to_string(),
            covers: pairs
                .iter()
                .filter(|&&(_, upper)| upper == x)
                .map(|&(lower, _)| l.element_name(lower))
                .collect(),
        })
        .collect()
}

fn counts<V>(k: &SimplicialComplex<V>) -> ModelCounts {
    ModelCounts {
        f_vector: k.f_vector(),
        euler_characteristic: k.euler_characteristic(),
    }
}

pub fn cmd_lattice(arr: &Arrangement) -> Finished {
    Finished::ok(Output {
        lattice: Some(lattice_report(arr)),
        ..Output::default()
    })
}

pub fn cmd_models(arr: &Arrangement, limits: Limits) -> Result<Finished, Failure> {
    let l = intersection_semilattice(arr);
    check_size(&l, limits.max_simplices)?;
    Ok(Finished::ok(Output {
        models: Some(ModelsReport {
            vassiliev: counts(&vassiliev_skeleton(&l)),
            zz: counts(&zz_skeleton(&l)),
        }),
        ..Output::default()
    }))
}

pub fn cmd_collapse(arr: &Arrangement, trace: bool, limits: Limits) -> Result<Finished, Failure> {
    let l = intersection_semilattice(arr);
    check_size(&l, limits.max_simplices)?;
    let k = vassiliev_skeleton(&l);
    let w = build_matching(&l, &k);
    let acyclic = verify_acyclic(&k, &w);
    let iota_monotone = verify_iota_monotone(&l, &k, &w);
    let identity = verify_identity_condition(&l, &k, &w);
    let internal = |message: String| Failure {
        code: exit::INTERNAL_FAILURE,
        message,
    };
    let steps = collapse_sequence(&k, &w).map_err(|e| internal(format!("collapse failed: {e}")))?;
    let live = replay_collapses(&k, &steps, |_, _| true)
        .map_err(|step| internal(format!("collapse step {} is not a free-face removal", step + 1)))?;
    let critical_ok = critical_subcomplex(&k, &w).is_ok_and(|c| critical_matches_order_complex(&l, &c))
        && live == w.critical();
    let report = CollapseReport {
        pairs: steps.len(),
        initial_simplices: k.len(),
        final_simplices: live.len(),
        acyclic,
        iota_monotone,
        identity_passed: identity.passed(),
        identity_total: identity.entries.len(),
        critical_matches_order_complex: critical_ok,
        trace: if trace { format_trace(&k, &steps) } else { Vec::new() },
    };
    let code = if report.verified() {
        exit::SUCCESS
    } else {
        exit::INTERNAL_FAILURE
    };
    Ok(Finished {
        output: Output {
            collapse: Some(report),
            ..Output::default()
        },
        code,
    })
}

pub fn cmd_betti(arr: &Arrangement) -> Finished {
    let l = intersection_semilattice(arr);
    let n = arr.ambient_dim();
    let complement = complement_cohomology(&l, n);
    let compactified = compactified_union_homology(&l);
    let duality = duality_verdict(&complement, &compactified, n);
    Finished::ok(Output {
        betti: Some(BettiReport {
            complement,
            compactified,
            duality,
        }),
        ..Output::default()
    })
}

fn verify_entry(
    index: usize,
    arr: &Arrangement,
    result: Result<subarr::verify::VerifyReport, TooLarge>,
) -> ArrangementVerify {
    let mut entry = ArrangementVerify {
        index,
        ambient_dim: arr.ambient_dim(),
        subspaces: arr.len(),
        skipped: None,
        checks: Vec::new(),
    };
    match result {
        Ok(report) => {
            entry.checks = report
                .checks
                .into_iter()
                .map(|c| CheckLine {
                    name: c.name.to_string(),
                    passed: c.passed,
                    detail: c.detail,
                })
                .collect();
        }
        Err(e) => entry.skipped = Some(e.to_string()),
    }
    entry
}

fn verify_finished(arrangements: Vec<ArrangementVerify>) -> Finished {
    let passed = arrangements.iter().all(|a| a.passed());
    Finished {
        output: Output {
            verify: Some(VerifyReport { arrangements, passed }),
            ..Output::default()
        },
        code: if passed {
            exit::SUCCESS
        } else {
            exit::INVARIANT_FAILURE
        },
    }
}

pub fn cmd_verify_file(arr: &Arrangement, limits: Limits) -> Result<Finished, Failure> {
    check_size(&intersection_semilattice(arr), limits.max_simplices)?;
    let opts = VerifyOptions {
        max_simplices: limits.max_simplices,
        ..VerifyOptions::default()
    };
    Ok(verify_finished(vec![verify_entry(0, arr, verify_arrangement(arr, &opts))]))
}

/// Verifies arrangements `0..count` of the random corpus for `seed`.
/// Arrangements over the size limit are reported as skipped.
pub fn cmd_verify_random(seed: u64, count: usize, limits: Limits) -> Finished {
    let opts = VerifyOptions {
        max_simplices: limits.max_simplices,
        ..VerifyOptions::default()
    };
    let entries = verify_corpus(seed, count, &opts)
        .into_iter()
        .enumerate()
        .map(|(i, (arr, result))| verify_entry(i, &arr, result))
        .collect();
    verify_finished(entries)
}
