use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "invalid affine permutation window {window:?}: residues mod {r} do not form a permutation"
    )]
    InvalidWindow { window: Vec<i64>, r: usize },

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),

    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("shape violation: {0}")]
    Shape(String),

    #[error("{0} is not a shortest double coset representative")]
    NotRepresentative(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
