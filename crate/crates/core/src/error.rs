use thiserror::Error;

/// Errors raised while reading or converting a knot-diagram notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid structure: {0}")]
    Structure(String),
}

impl CodeError {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        CodeError::Syntax { pos, msg: msg.into() }
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        CodeError::Structure(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("diagram has no crossing {0}")]
    UnknownCrossing(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WarpingError {
    /// A cross-check between two independent computations failed.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no monotone diagram within {budget} crossing changes")]
    BudgetExceeded { budget: usize },
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("crossing signs are unknown; the bracket needs a fully signed diagram")]
    UnknownSigns,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    InvalidParam(String),
    #[error("parameters {0:?} close to a link with more than one component")]
    NotAKnot(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Data { line: usize, msg: String },
    #[error("entry {name}: {msg}")]
    Entry { name: String, msg: String },
}

/// Umbrella error for callers that mix several layers (CLI, bindings).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Warping(#[from] WarpingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Table(#[from] TableError),
}
