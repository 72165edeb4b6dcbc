use serde_json::{json, Value};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Domain errors shared by every module.
///
/// Witness data is carried inline so that callers (and the CLI) can report
/// exactly which points, coordinates or cells caused the failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval endpoints {lo} and {hi} are not ordered")]
    IncomparableEndpoints { lo: String, hi: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("coordinate {coord} is not monotone: {lo} <= {hi} but f({lo}) > f({hi})")]
    NotMonotone { coord: usize, lo: String, hi: String },

    #[error("arity {arity} exceeds the supported bound {bound}")]
    ArityTooLarge { arity: usize, bound: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("permutation degree {found} does not match arity {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("coordinates {first} and {second} share variable {variable}")]
    NotBoxplus { first: usize, second: usize, variable: usize },

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("morphism is not surjective")]
    NotSurjective,

    #[error("map is monotone")]
    IsMonotone,

    #[error("every 1-dimensional interval maps onto an interval")]
    PreservesOneDimIntervals,

    #[error("size guard exceeded: {0}")]
    SizeExceeded(String),

    #[error("elements {x} and {y} have no meet")]
    NotMeetSemilattice { x: String, y: String },

    #[error("simplex {simplex:?} has a face that is not in the complex")]
    NotFaceClosed { simplex: Vec<usize> },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in `{"error": ...}` payloads.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IncomparableEndpoints { .. } => "IncomparableEndpoints",
            Error::InvalidPoset(_) => "InvalidPoset",
            Error::NotMonotone { .. } => "NotMonotone",
            Error::ArityTooLarge { .. } => "ArityTooLarge",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotBoxplus { .. } => "NotBoxplus",
            Error::MalformedDecomposition(_) => "MalformedDecomposition",
            Error::NotSurjective => "NotSurjective",
            Error::IsMonotone => "IsMonotone",
            Error::PreservesOneDimIntervals => "PreservesOneDimIntervals",
            Error::SizeExceeded(_) => "SizeExceeded",
            Error::NotMeetSemilattice { .. } => "NotMeetSemilattice",
            Error::NotFaceClosed { .. } => "NotFaceClosed",
            Error::Parse(_) => "Parse",
        }
    }

    pub fn witness(&self) -> Value {
        match self {
            Error::IncomparableEndpoints { lo, hi } => json!({ "lo": lo, "hi": hi }),
            Error::NotMonotone { coord, lo, hi } => json!({ "coordinate": coord, "lo": lo, "hi": hi }),
            Error::ArityTooLarge { arity, bound } => json!({ "arity": arity, "bound": bound }),
            Error::ArityMismatch { expected, found } | Error::DegreeMismatch { expected, found } => {
                json!({ "expected": expected, "found": found })
            }
            Error::IndexOutOfRange { index, bound } => json!({ "index": index, "bound": bound }),
            Error::NotBoxplus { first, second, variable } => {
                json!({ "coordinates": [first, second], "variable": variable })
            }
            Error::NotMeetSemilattice { x, y } => json!({ "x": x, "y": y }),
            Error::NotFaceClosed { simplex } => json!({ "simplex": simplex }),
            Error::InvalidPoset(msg)
            | Error::MalformedDecomposition(msg)
            | Error::SizeExceeded(msg)
            | Error::Parse(msg) => json!(msg),
            Error::NotSurjective | Error::IsMonotone | Error::PreservesOneDimIntervals => Value::Null,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind(), "witness": self.witness(), "message": self.to_string() })
    }
}
