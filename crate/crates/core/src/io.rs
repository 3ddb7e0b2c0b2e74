//! The JSON algebra file:
//!
//! ```json
//! {
//!   "name": "H(-1, -1) over Q",
//!   "field": { "kind": "rational" },
//!   "dimension": 4,
//!   "basis": ["1", "i", "j", "k"],
//!   "unit": ["1", "0", "0", "0"],
//!   "structure": [[1, 2, 3, "1"], ...]
//! }
//! ```
//!
//! `structure` lists the nonzero coefficients `[i, j, k, c]` of `e_i e_j`
//! on `e_k`. Scalars are strings so rationals stay exact. Prime fields use
//! `{ "kind": "prime", "p": 7 }`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::scalar::{FieldKind, FieldSpec, Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema: {0}")]
    Schema(String),
    #[error("field: {0}")]
    Field(ScalarError),
    #[error("{location}: {source}")]
    Scalar { location: String, source: ScalarError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl IoError {
    /// Whether the file was rejected only because its field has characteristic 2.
    pub fn is_characteristic_two(&self) -> bool {
        matches!(self, IoError::Field(ScalarError::CharacteristicTwo))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldEntry {
    pub kind: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldEntry,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub structure: Vec<(usize, usize, usize, String)>,
}

impl FieldEntry {
    pub fn from_spec(field: FieldSpec) -> Self {
        FieldEntry { kind: field.kind(), p: field.modulus() }
    }

    pub fn to_spec(&self) -> Result<FieldSpec, IoError> {
        match (self.kind, self.p) {
            (FieldKind::Rational, None) => Ok(FieldSpec::rational()),
            (FieldKind::Rational, Some(_)) => Err(IoError::Schema("rational field takes no \"p\"".into())),
            (FieldKind::Prime, Some(p)) => FieldSpec::prime(p).map_err(IoError::Field),
            (FieldKind::Prime, None) => Err(IoError::Schema("prime field requires \"p\"".into())),
        }
    }
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &Algebra) -> Self {
        AlgebraFile {
            name: algebra.name().to_string(),
            field: FieldEntry::from_spec(algebra.field()),
            dimension: algebra.dim(),
            basis: algebra.labels().to_vec(),
            unit: algebra.unit().coords().iter().map(ToString::to_string).collect(),
            structure: algebra.entries().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect(),
        }
    }

    /// Validates the schema, index bounds and the unit axiom.
    pub fn to_algebra(&self) -> Result<Algebra, IoError> {
        let field = self.field.to_spec()?;
        if self.basis.len() != self.dimension {
            return Err(IoError::Schema(format!(
                "dimension is {} but basis has {} labels",
                self.dimension,
                self.basis.len()
            )));
        }
        if self.unit.len() != self.dimension {
            return Err(IoError::Schema(format!(
                "dimension is {} but unit has {} coordinates",
                self.dimension,
                self.unit.len()
            )));
        }
        let parse = |text: &str, location: String| {
            Scalar::parse(text, field).map_err(|source| IoError::Scalar { location, source })
        };
        let unit =
            self.unit.iter().enumerate().map(|(i, s)| parse(s, format!("unit[{i}]"))).collect::<Result<Vec<_>, _>>()?;
        let entries = self
            .structure
            .iter()
            .enumerate()
            .map(|(n, (i, j, k, c))| Ok((*i, *j, *k, parse(c, format!("structure entry {n}"))?)))
            .collect::<Result<Vec<_>, IoError>>()?;
        Ok(Algebra::new(self.name.clone(), field, self.basis.clone(), unit, entries)?)
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_algebra()
}

/// Pretty JSON with a trailing newline.
pub fn render_algebra(algebra: &Algebra) -> String {
    to_json(&AlgebraFile::from_algebra(algebra))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("in-memory values serialize");
    text.push('\n');
    text
}

pub fn load_algebra(path: &Path) -> Result<Algebra, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Io { path: path.to_path_buf(), source })?;
    parse_algebra(&text)
}

pub fn save_algebra(algebra: &Algebra, path: &Path) -> Result<(), IoError> {
    fs::write(path, render_algebra(algebra)).map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}
