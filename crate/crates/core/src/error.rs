use thiserror::Error;

use crate::barred::Violation;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero polynomial has no canonical form")]
    ZeroPolynomial,

    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("polynomial has integer content {content}; knot polynomials are primitive")]
    NonPrimitive { content: String },

    #[error("polynomial is not symmetric under c(i,j) = c(-i, j-2i)")]
    NotSymmetric,

    #[error("polynomial is a unit")]
    Unit,

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("invalid complex: {}", format_violations(.0))]
    InvalidComplex(Vec<Violation>),

    #[error("invalid knot input: {0}")]
    InvalidInput(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
