use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix size {rows}x{cols} exceeds the 2^16 limit")]
    TooLarge { rows: usize, cols: usize },

    #[error("generator has rank {rank} but {rows} rows")]
    RankDeficient { rows: usize, rank: usize },

    #[error("dimension {k} exceeds the enumeration cap of {cap}")]
    EnumerationCap { k: usize, cap: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("no tabulated family row for k={k}, s={s}")]
    UnknownFamilyRow { k: usize, s: usize },

    #[error("t={t} is below the admissible minimum {t_min}: entry a_{index} = {value}")]
    BelowTMin {
        t: i64,
        t_min: i64,
        index: usize,
        value: i64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("infeasible enumeration: {0}")]
    Infeasible(String),

    #[error("incomplete seed database: {0}")]
    IncompleteSeeds(String),

    #[error("d={d} exceeds the Griesmer bound {bound} for n={n}, k={k}")]
    AboveGriesmer { n: usize, k: usize, d: usize, bound: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
