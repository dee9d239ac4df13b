use thiserror::Error;

/// Errors raised by algebra operations, suites and the command line front end.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid algebra descriptor `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("descriptor mismatch: `{left}` vs `{right}`")]
    DescriptorMismatch { left: String, right: String },

    #[error("coordinate vector has length {got}, algebra dimension is {expected}")]
    CoordinateLength { expected: usize, got: usize },

    #[error("element is not positive (minimum eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("element is not invertible (minimum eigenvalue {min_eigenvalue:e})")]
    Singular { min_eigenvalue: f64 },

    #[error("element is not an effect (spectrum [{min:e}, {max:e}])")]
    NotEffect { min: f64, max: f64 },

    #[error("element is not sharp (residual {residual:e})")]
    NotSharp { residual: f64 },

    #[error("element is not atomic")]
    NotAtomic,

    #[error("eigen-solver did not converge on a {size}x{size} block")]
    EigenNonConvergence { size: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("tensor size {n}x{m} exceeds the cap of {cap}")]
    TensorCapExceeded { n: usize, m: usize, cap: usize },

    #[error("explicit tensor products need complex factors, found `{0}`")]
    NonComplexTensor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
