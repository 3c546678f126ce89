use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("Pauli index {0} out of range 0..=3")]
    PauliIndex(usize),
    #[error("invalid boundary frame: {0}")]
    InvalidFrame(String),
    #[error("matrix is not Hermitian (residual {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is not an admissible boundary matrix (worst residual {0:.3e})")]
    NotAdmissible(f64),
    #[error("excluded parameter: cos η vanishes at η = {0}")]
    ExcludedParameter(f64),
    #[error("area must be positive, got {0}")]
    NonPositiveArea(f64),
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("dot has no interior sites")]
    EmptyDot,
    #[error("need at least two distinct cells to classify an edge")]
    TooFewCells,
    #[error("cell ({n}, {m}) does not lie on the edge")]
    CellNotOnEdge { n: i64, m: i64 },
    #[error("edge boundary condition is not of armchair-compatible form")]
    IncompatibleEdge,
    #[error("edges are parallel")]
    ParallelEdges,
    #[error("polygon is not closed: {0}")]
    OpenPolygon(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
