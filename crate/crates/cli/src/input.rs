//! Arrangement files: JSON with rationals written as strings.
//!
//! ```json
//! {
//!   "ambient_dim": 2,
//!   "subspaces": [
//!     { "equations": [["1", "0"]], "rhs": ["0"] },
//!     { "point": ["0", "0"], "directions": [["1", "-1/2"]] }
//!   ]
//! }
//! ```

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use subarr::exactlin::{AffineSubspace, LinError, Rational};
use subarr::{Arrangement, ArrangementError};

/// One subspace as written in a file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubspaceSpec {
    Equations {
        equations: Vec<Vec<String>>,
        rhs: Vec<String>,
    },
    Parametric {
        point: Vec<String>,
        directions: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub ambient_dim: usize,
    pub subspaces: Vec<SubspaceSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    /// The text is not a well-formed arrangement file.
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    /// Well-formed, but not a valid arrangement.
    #[error("invalid arrangement: {0}")]
    Invalid(String),
}

fn parse_error(path: &str, message: impl Into<String>) -> InputError {
    InputError::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str, path: &str) -> Result<Rational, InputError> {
    Rational::from_str(text.trim()).map_err(|e| parse_error(path, format!("bad rational {text:?}: {e}")))
}

/// Writes `r` the way files spell it.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, InputError> {
    obj.get(key)
        .ok_or_else(|| parse_error(path, format!("missing field {key:?}")))
}

fn rational_vec(v: &Value, path: &str) -> Result<Vec<String>, InputError> {
    let items = v.as_array().ok_or_else(|| parse_error(path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{path}[{i}]");
            let s = x
                .as_str()
                .ok_or_else(|| parse_error(&p, "expected a rational written as a string"))?;
            parse_rational(s, &p)?;
            Ok(s.to_string())
        })
        .collect()
}

fn rational_matrix(v: &Value, path: &str) -> Result<Vec<Vec<String>>, InputError> {
    let rows = v.as_array().ok_or_else(|| parse_error(path, "expected an array of rows"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| rational_vec(row, &format!("{path}[{i}]")))
        .collect()
}

impl ArrangementFile {
    /// Parses file text, checking every rational literal. Errors name the
    /// offending field, e.g. `subspaces[0].rhs[1]`.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let root: Value = serde_json::from_str(text).map_err(|e| parse_error("$", e.to_string()))?;
        let obj = root.as_object().ok_or_else(|| parse_error("$", "expected an object"))?;
        let ambient_dim = field(obj, "ambient_dim", "$")?
            .as_u64()
            .ok_or_else(|| parse_error("ambient_dim", "expected a non-negative integer"))?
            as usize;
        let list = field(obj, "subspaces", "$")?
            .as_array()
            .ok_or_else(|| parse_error("subspaces", "expected an array"))?;
        let mut subspaces = Vec::with_capacity(list.len());
        for (i, item) in list.iter().enumerate() {
            let path = format!("subspaces[{i}]");
            let o = item.as_object().ok_or_else(|| parse_error(&path, "expected an object"))?;
            let spec = if o.contains_key("equations") || o.contains_key("rhs") {
                SubspaceSpec::Equations {
                    equations: rational_matrix(field(o, "equations", &path)?, &format!("{path}.equations"))?,
                    rhs: rational_vec(field(o, "rhs", &path)?, &format!("{path}.rhs"))?,
                }
            } else if o.contains_key("point") || o.contains_key("directions") {
                SubspaceSpec::Parametric {
                    point: rational_vec(field(o, "point", &path)?, &format!("{path}.point"))?,
                    directions: rational_matrix(field(o, "directions", &path)?, &format!("{path}.directions"))?,
                }
            } else {
                return Err(parse_error(&path, "expected {equations, rhs} or {point, directions}"));
            };
            subspaces.push(spec);
        }
        Ok(Self {
            ambient_dim,
            subspaces,
        })
    }

    /// Converts to a validated arrangement.
    pub fn to_arrangement(&self) -> Result<Arrangement, InputError> {
        let n = self.ambient_dim;
        let mut out = Vec::with_capacity(self.subspaces.len());
        for (i, spec) in self.subspaces.iter().enumerate() {
            let path = format!("subspaces[{i}]");
            let parse_vec = |v: &[String], p: String| -> Result<Vec<Rational>, InputError> {
                v.iter()
                    .enumerate()
                    .map(|(k, s)| parse_rational(s, &format!("{p}[{k}]")))
                    .collect()
            };
            let subspace = match spec {
                SubspaceSpec::Equations { equations, rhs } => {
                    let rows = equations
                        .iter()
                        .enumerate()
                        .map(|(r, row)| parse_vec(row, format!("{path}.equations[{r}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    let b = parse_vec(rhs, format!("{path}.rhs"))?;
                    AffineSubspace::canonicalize(&rows, &b, n)
                        .map_err(|e| lin_error(&path, e))?
                        .ok_or_else(|| InputError::Invalid(format!("{path}: equations have no solution")))?
                }
                SubspaceSpec::Parametric { point, directions } => {
                    let p = parse_vec(point, format!("{path}.point"))?;
                    if p.len() != n {
                        return Err(parse_error(
                            &format!("{path}.point"),
                            format!("{} coordinates, expected {n}", p.len()),
                        ));
                    }
                    let dirs = directions
                        .iter()
                        .enumerate()
                        .map(|(r, d)| parse_vec(d, format!("{path}.directions[{r}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    AffineSubspace::from_point_directions(&p, &dirs).map_err(|e| lin_error(&path, e))?
                }
            };
            out.push(subspace);
        }
        Arrangement::validate(out, n).map_err(|e| InputError::Invalid(describe(&e)))
    }
}

fn lin_error(path: &str, e: LinError) -> InputError {
    let at = match &e {
        LinError::RowLength { row, .. } => format!("{path}.equations[{row}]"),
        LinError::RhsLength { .. } => format!("{path}.rhs"),
        LinError::PointLength { .. } => format!("{path}.directions"),
        LinError::AmbientMismatch { .. } => path.to_string(),
    };
    parse_error(&at, e.to_string())
}

fn describe(e: &ArrangementError) -> String {
    match e {
        ArrangementError::ContainmentViolation { contained, container } => format!(
            "ContainmentViolation: subspaces[{contained}] is contained in subspaces[{container}]"
        ),
        other => other.to_string(),
    }
}

/// Reads and validates an arrangement file in one step.
pub fn load(text: &str) -> Result<Arrangement, InputError> {
    ArrangementFile::parse(text)?.to_arrangement()
}

/// File form of a validated arrangement, in equation form.
pub fn to_file(arr: &Arrangement) -> ArrangementFile {
    ArrangementFile {
        ambient_dim: arr.ambient_dim(),
        subspaces: arr
            .subspaces()
            .iter()
            .map(|s| SubspaceSpec::Equations {
                equations: s
                    .equations()
                    .iter()
                    .map(|row| row.iter().map(format_rational).collect())
                    .collect(),
                rhs: s.rhs().iter().map(format_rational).collect(),
            })
            .collect(),
    }
}
