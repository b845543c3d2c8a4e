//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, AdvecError>;

/// Everything that can go wrong while setting up or running a scheme.
#[derive(Debug, thiserror::Error)]
pub enum AdvecError {
    /// A step was asked to move information further than one cell.
    /// The offending grid index is reported; nothing is clamped.
    #[error(
        "CFL violation at index {index}: |u dt|/h = {courant:.6} > 1 (u = {u}, dt = {dt}, h = {h})"
    )]
    CflViolation {
        index: usize,
        u: f64,
        dt: f64,
        h: f64,
        courant: f64,
    },

    /// NaN or infinity reached a kernel input.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// Invalid run configuration (bad scheme/problem combination, bad file, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A diagnostic could not be evaluated on the given data.
    #[error("diagnostic error: {0}")]
    Diagnostic(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl AdvecError {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            AdvecError::Config(_) => 2,
            AdvecError::Io(_) => 2,
            AdvecError::CflViolation { .. } | AdvecError::NonFinite(_) => 3,
            AdvecError::Diagnostic(_) => 3,
        }
    }
}
