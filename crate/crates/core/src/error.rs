use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation images: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    CycleParse { input: String, reason: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid generating set: {0}")]
    InvalidGeneratingSet(String),

    #[error("graph is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),

    #[error("coloring incomplete: {0}")]
    IncompleteColoring(String),

    #[error("coloring does not fit graph: {0}")]
    ColoringShape(String),

    #[error("merge conflict: {0}")]
    MergeConflict(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("construction inapplicable: {0}")]
    Inapplicable(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
