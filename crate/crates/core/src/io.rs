//! JSON matrix files:
//!
//! ```json
//! {"sign": "minus", "parity": [0, 1, 1], "gamma": [[1, 3, 0], [1, 0, -1], [1, -1, 1]]}
//! ```
//!
//! Rows are listed top to bottom and carry the parities in order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signature::{Sign, Signature};
use crate::tgwdatum::GammaMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub sign: Sign,
    pub parity: Vec<u8>,
    pub gamma: Vec<Vec<i64>>,
}

impl MatrixFile {
    pub fn from_gamma(gamma: &GammaMatrix) -> Self {
        MatrixFile {
            sign: gamma.signature().sign(),
            parity: gamma.signature().parity_bits(),
            gamma: gamma.rows().to_vec(),
        }
    }

    pub fn into_gamma(self) -> Result<GammaMatrix> {
        let sig = Signature::from_bits(self.sign, &self.parity)?;
        GammaMatrix::new(sig, self.gamma)
    }
}

/// Parses a matrix file; syntax errors carry the line and column.
pub fn parse_matrix(text: &str) -> Result<GammaMatrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e)))?;
    file.into_gamma()
}

pub fn read_matrix(path: &std::path::Path) -> Result<GammaMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn render_matrix(gamma: &GammaMatrix) -> String {
    serde_json::to_string(&MatrixFile::from_gamma(gamma)).expect("matrix files always serialize")
}
