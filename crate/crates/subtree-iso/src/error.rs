use thiserror::Error;

/// Structural and textual problems with tree inputs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed line {line}: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("invalid level sequence: {0}")]
    InvalidLevelSequence(String),
    #[error("level-sequence output requires a rooted tree")]
    UnrootedLevelSeq,
    #[error("root {root} out of range for order {n}")]
    InvalidRoot { root: usize, n: usize },
}

/// Resource-limit failures in the counting layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("{op}: order {order} exceeds supported maximum {max}")]
    OrderCap {
        op: &'static str,
        order: usize,
        max: usize,
    },
    #[error("intermediate class set exceeded cap of {cap} codes")]
    SetCapExceeded { cap: usize },
    #[error("count exceeds integer range")]
    Overflow,
    #[error("rooted subtree count requires a rooted tree")]
    Unrooted,
}

/// Errors from search and verification drivers, which can fail on either a
/// range precondition or a resource limit in the counting layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Range(#[from] RangeError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// An `n` outside the range a generator or search supports.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{what}: n = {n} outside supported range {min}..={max}")]
pub struct RangeError {
    pub what: &'static str,
    pub n: usize,
    pub min: usize,
    pub max: usize,
}
