//! Error types shared across the core crate.

use thiserror::Error;

use crate::addr::Location;

/// Formula syntax error with a byte position into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula syntax error at position {position}: {message}")]
pub struct FormulaError {
    pub position: usize,
    pub message: String,
}

impl FormulaError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        FormulaError {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn shift(mut self, by: usize) -> Self {
        self.position += by;
        self
    }
}

/// Errors raised while reading a workbook document.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("line {line}: duplicate cell {address}")]
    DuplicateCell { line: usize, address: String },
    #[error("line {line}: unknown directive '{directive}'")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: {source}")]
    FormulaSyntax {
        line: usize,
        #[source]
        source: FormulaError,
    },
}

impl ParseError {
    pub fn malformed(line: usize, message: impl Into<String>) -> Self {
        ParseError::MalformedLine {
            line,
            message: message.into(),
        }
    }
}

/// Errors from the weight-table loader and classifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RiskError {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("weight file line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("weight file line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Errors from applying a correction plan.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorrectionError {
    #[error("correction target missing: {0:?}")]
    TargetMissing(Location),
}

/// Errors from the risk register.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegisterError {
    #[error("illegal transition: {event} from {from}")]
    IllegalTransition { from: String, event: String },
    #[error("no default strategy configured for unmapped category '{0}'")]
    NoDefaultConfigured(String),
}
