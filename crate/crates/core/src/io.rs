//! JSON documents for complexes, cells and axiom reports.
//!
//! A complex document looks like
//!
//! ```json
//! {
//!   "version": 1,
//!   "elements": [
//!     { "id": "0", "dim": 0, "minus": [], "plus": [] },
//!     { "id": "1", "dim": 0, "minus": [], "plus": [] },
//!     { "id": "01", "dim": 1, "minus": ["0"], "plus": ["1"] }
//!   ]
//! }
//! ```
//!
//! [`serialize_complex`] writes the canonical form: elements sorted by
//! `(dim, id)`, face lists sorted by id, two-space indentation and a trailing
//! newline. Parsing and re-serializing canonical text is the identity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::axioms::{check_pre_parity, AxiomReport};
use crate::cells::{Cell, CellFromNamesError};
use crate::complex::{Complex, ComplexError, ElementRecord};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub version: u32,
    pub elements: Vec<ElementRecord>,
}

impl ComplexDocument {
    pub fn from_complex(c: &Complex) -> ComplexDocument {
        let mut elements = c.records();
        elements.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        for r in &mut elements {
            r.minus.sort();
            r.plus.sort();
        }
        ComplexDocument {
            version: FORMAT_VERSION,
            elements,
        }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported document version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error(transparent)]
    Structure(#[from] ComplexError),
    #[error("pre-parity validation failed: {}", summarize(.0))]
    Validation(AxiomReport),
}

fn summarize(report: &AxiomReport) -> String {
    let first = report
        .witnesses()
        .first()
        .and_then(|w| serde_json::to_string(w).ok())
        .unwrap_or_default();
    format!("{report}; first witness {first}")
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Parses a document and builds the complex, checking only that ids are
/// unique and every referenced face exists.
pub fn parse_document(text: &str) -> Result<Complex, IoError> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    if doc.version != FORMAT_VERSION {
        return Err(IoError::Version(doc.version));
    }
    Ok(Complex::new(doc.elements)?)
}

/// Parses a document and rejects it unless the pre-parity conditions hold.
pub fn parse_complex(text: &str) -> Result<Complex, IoError> {
    let c = parse_document(text)?;
    let report = check_pre_parity(&c);
    if report.passed() {
        Ok(c)
    } else {
        Err(IoError::Validation(report))
    }
}

/// Canonical document text.
pub fn serialize_complex(c: &Complex) -> String {
    let mut out = serde_json::to_string_pretty(&ComplexDocument::from_complex(c))
        .expect("documents always serialize");
    out.push('\n');
    out
}

/// A cell by element names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDocument {
    pub m: Vec<String>,
    pub p: Vec<String>,
}

impl CellDocument {
    pub fn from_cell(c: &Complex, cell: &Cell) -> CellDocument {
        CellDocument {
            m: c.names(cell.m()),
            p: c.names(cell.p()),
        }
    }

    pub fn to_cell(&self, c: &Complex) -> Result<Cell, CellFromNamesError> {
        Cell::from_names(c, &self.m, &self.p)
    }
}

/// Reports as a JSON object `{"passed": bool, "reports": [...]}`.
pub fn render_reports(reports: &[AxiomReport]) -> String {
    #[derive(Serialize)]
    struct Summary<'a> {
        passed: bool,
        reports: &'a [AxiomReport],
    }
    let mut out = serde_json::to_string_pretty(&Summary {
        passed: reports.iter().all(AxiomReport::passed),
        reports,
    })
    .expect("reports always serialize");
    out.push('\n');
    out
}
