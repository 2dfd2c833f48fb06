use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division by a power of `(q - 1)` left a remainder.
    #[error("not divisible by (q-1)^{power}: remainder {remainder} after {divided} exact steps")]
    NotDivisible {
        power: usize,
        divided: usize,
        remainder: String,
    },

    #[error("symmetric polynomials in {left} and {right} variables cannot be combined")]
    VarMismatch { left: usize, right: usize },

    #[error("partition {partition} has more than {num_vars} rows")]
    TooManyRows { partition: String, num_vars: usize },

    #[error("symmetric polynomial is not homogeneous (degrees {first} and {second})")]
    NotHomogeneous { first: usize, second: usize },

    #[error("degree {degree} exceeds the {num_vars} available variables")]
    DegreeExceedsVars { degree: usize, num_vars: usize },

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("graph is not the graph of a Schroder path: {0}")]
    NotAPathGraph(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("step pattern does not match: {0}")]
    PatternMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
