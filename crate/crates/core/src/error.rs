use thiserror::Error;

/// Index six-tuple `(i, j, k, l, p, q)`, 1-based, naming a violated
/// componentwise identity.
pub type SixTuple = [usize; 6];

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("f and g do not commute (fg != gf)")]
    NonCommutingPair,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("operator is not invertible")]
    SingularOperator,

    #[error("not a solution of the Long equation: identity ({equation}) fails at (i,j,k,l,p,q) = {tuple:?}")]
    NotALongSolution { equation: u8, tuple: SixTuple },

    #[error("map is not idempotent: phi(phi({index})) != phi({index})")]
    NotIdempotent { index: usize },

    #[error("homogeneous component of degree `{degree}` is not invariant under the action of `{element}`")]
    NotASubmodule { degree: String, element: String },

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("centrality condition violated for representation matrix #{generator}")]
    CentralityViolated { generator: usize },

    #[error("bialgebra axiom `{axiom}` fails at basis tuple {witness:?}")]
    InvalidBialgebra { axiom: &'static str, witness: Vec<usize> },

    #[error("sigma is not a strong D-map: identity fails at basis pair {witness:?}")]
    NotAStrongDMap { witness: [usize; 2] },

    #[error("invalid coaction: {0}")]
    InvalidCoaction(String),

    #[error("invalid naming: {0}")]
    InvalidNaming(String),

    #[error("word longer than the configured cap of {cap}")]
    WordTooLong { cap: usize },

    #[error("path passes within {distance:e} of a diagonal (guard {guard:e})")]
    PathTooClose { distance: f64, guard: f64 },

    #[error("lifted dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("invalid loop: {0}")]
    InvalidLoop(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
