use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unrecognized family spec `{0}`")]
    FamilySpec(String),

    #[error("{family}: parameter out of range ({detail})")]
    ParamRange { family: String, detail: String },

    #[error("graph too large: {requested} vertices exceeds the {limit}-vertex capacity")]
    TooManyVertices { requested: usize, limit: usize },

    #[error("vertex {vertex} out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("operation needs at least {min} vertices, graph has {actual}")]
    TooFewVertices { min: usize, actual: usize },

    #[error("search budget exhausted: {needed} subset tests exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("word count overflowed u64")]
    CountOverflow,

    #[error("cyclic words need length >= 3, got {0}")]
    WordTooShort(usize),

    #[error("invalid letter `{0}`: expected one of C, A, B, D")]
    BadLetter(char),

    #[error("word length {word_len} does not match prism order {expected}")]
    WordLengthMismatch { word_len: usize, expected: usize },

    #[error("gap profile undefined: {0}")]
    GapProfile(&'static str),

    #[error("eigensolver did not converge after {sweeps} rotations (off-diagonal norm {remaining:.3e})")]
    EigenNoConvergence { sweeps: usize, remaining: f64 },

    #[error("graph is disconnected")]
    Disconnected,
}

pub type Result<T> = std::result::Result<T, Error>;
