use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(
        "shape mismatch in {op}: left is {lhs_rows}x{lhs_cols}, right is {rhs_rows}x{rhs_cols}"
    )]
    Shape {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::field::Field, crate::field::Field),
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("morphisms are not parallel: {0}")]
    NotParallel(String),
    #[error("probe does not {kind} the pair at index {index}")]
    NotEqualizing { kind: &'static str, index: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(
        "index map ill-defined on class {class}: representatives {first} and {second} disagree"
    )]
    IllDefined {
        class: String,
        first: String,
        second: String,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("input not verified: {0}")]
    Unverified(String),
}
