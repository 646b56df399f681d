use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("edge index {index} out of range ({len} edges)")]
    EdgeIndex { index: usize, len: usize },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("refusing n={n}: exhaustive search is bounded to n <= {bound}")]
    BoundRefusal { n: usize, bound: usize },

    #[error("lower bound violated at n={n}: g={g} < {bound}; witness edges: {witness}")]
    BoundViolation {
        n: usize,
        g: i64,
        bound: String,
        witness: String,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 for I/O and parse failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
