//! Command reports. Each one renders as text and serializes to JSON.

use std::fmt;

use serde::{Deserialize, Serialize};

use subarr::homology::{DualityVerdict, HomologyProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeElement {
    pub name: String,
    pub dim: usize,
    /// Atoms below this element, by name.
    pub atoms: Vec<String>,
    pub flat: String,
    /// Elements this one covers.
    pub covers: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelCounts {
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelsReport {
    pub vassiliev: ModelCounts,
    pub zz: ModelCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub pairs: usize,
    pub initial_simplices: usize,
    pub final_simplices: usize,
    pub acyclic: bool,
    pub iota_monotone: bool,
    pub identity_passed: usize,
    pub identity_total: usize,
    pub critical_matches_order_complex: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl CollapseReport {
    pub fn verified(&self) -> bool {
        self.acyclic
            && self.iota_monotone
            && self.identity_passed == self.identity_total
            && self.critical_matches_order_complex
            && self.initial_simplices == self.final_simplices + 2 * self.pairs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub complement: HomologyProfile,
    pub compactified: HomologyProfile,
    pub duality: DualityVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementVerify {
    pub index: usize,
    pub ambient_dim: usize,
    pub subspaces: usize,
    /// Set when the size guard skipped this arrangement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub checks: Vec<CheckLine>,
}

impl ArrangementVerify {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub arrangements: Vec<ArrangementVerify>,
    pub passed: bool,
}

/// Top-level JSON document; each command fills its own key.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Output {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<LatticeElement>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub models: Option<ModelsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collapse: Option<CollapseReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
}

impl Output {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub struct LatticeText<'a>(pub &'a [LatticeElement]);

impl fmt::Display for LatticeText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: usize = self.0.iter().map(|e| e.covers.len()).sum();
        writeln!(f, "{} elements, {} covers", self.0.len(), covers)?;
        for e in self.0 {
            write!(f, "{:>4}  dim {}  {}", e.name, e.dim, e.flat)?;
            if e.atoms.len() > 1 {
                write!(f, "  atoms {}", e.atoms.join(","))?;
            }
            writeln!(f)?;
        }
        for e in self.0 {
            for c in &e.covers {
                writeln!(f, "  {c} < {}", e.name)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ModelCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f_vec: Vec<String> = self.f_vector.iter().map(|c| c.to_string()).collect();
        let total: usize = self.f_vector.iter().sum();
        write!(
            f,
            "f = ({}), {total} simplices, chi = {}",
            f_vec.join(","),
            self.euler_characteristic
        )
    }
}

impl fmt::Display for ModelsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Vassiliev Bd(N(L)): {}", self.vassiliev)?;
        writeln!(f, "Ziegler-Zivaljevic Delta(L): {}", self.zz)
    }
}

impl fmt::Display for CollapseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.trace {
            writeln!(f, "{line}")?;
        }
        writeln!(
            f,
            "{} collapses: {} → {} simplices; acyclic: {}; identity conditions: {}/{}",
            self.pairs,
            self.initial_simplices,
            self.final_simplices,
            if self.acyclic && self.iota_monotone { "yes" } else { "no" },
            self.identity_passed,
            self.identity_total
        )
    }
}

fn profile_lines(
    f: &mut fmt::Formatter<'_>,
    p: &HomologyProfile,
    label: impl Fn(i32) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return writeln!(f, "  all groups vanish");
    }
    for d in p.degrees() {
        writeln!(f, "  {} = {}", label(d), p.group(d))?;
    }
    Ok(())
}

impl fmt::Display for BettiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "complement cohomology:")?;
        profile_lines(f, &self.complement, |d| format!("H~^{d}(M)"))?;
        writeln!(f, "compactified union homology:")?;
        profile_lines(f, &self.compactified, |d| format!("H~_{d}(U^)"))?;
        writeln!(f, "duality: {}", self.duality)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [single] = self.arrangements.as_slice() {
            if let Some(reason) = &single.skipped {
                return writeln!(f, "skipped: {reason}");
            }
            for c in &single.checks {
                write_check(f, &c.name, c.passed, &c.detail)?;
            }
        } else {
            // Aggregate per invariant, in first-seen order.
            let mut names: Vec<&str> = Vec::new();
            for a in &self.arrangements {
                for c in &a.checks {
                    if !names.contains(&c.name.as_str()) {
                        names.push(&c.name);
                    }
                }
            }
            for name in names {
                let results: Vec<(usize, &CheckLine)> = self
                    .arrangements
                    .iter()
                    .filter_map(|a| a.checks.iter().find(|c| c.name == name).map(|c| (a.index, c)))
                    .collect();
                let ok = results.iter().filter(|(_, c)| c.passed).count();
                let detail = format!("{ok}/{}", results.len());
                write_check(f, name, ok == results.len(), &detail)?;
                for (index, c) in results.iter().filter(|(_, c)| !c.passed) {
                    writeln!(f, "    arrangement {index}: {}", c.detail)?;
                }
            }
            let skipped: Vec<&ArrangementVerify> =
                self.arrangements.iter().filter(|a| a.skipped.is_some()).collect();
            for a in &skipped {
                writeln!(f, "skipped arrangement {}: {}", a.index, a.skipped.as_deref().unwrap_or(""))?;
            }
            writeln!(
                f,
                "{} arrangements checked, {} skipped",
                self.arrangements.len() - skipped.len(),
                skipped.len()
            )?;
        }
        writeln!(f, "{}", if self.passed { "all invariants pass" } else { "FAILED" })
    }
}

fn write_check(f: &mut fmt::Formatter<'_>, name: &str, passed: bool, detail: &str) -> fmt::Result {
    let verdict = if passed { "pass" } else { "FAIL" };
    if detail.is_empty() {
        writeln!(f, "{verdict} {name}")
    } else {
        writeln!(f, "{verdict} {name} ({detail})")
    }
}
