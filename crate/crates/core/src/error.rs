use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Verification failures are not errors; they are reported as data in
/// [`crate::verify::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("no permutation of rank {rank} has code {code}")]
    InvalidCode { code: String, rank: usize },
    #[error("rank mismatch: expected rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("permutation {0} is not 321-avoiding")]
    Not321Avoiding(String),
    #[error("permutation {0} is not restricted vexillary")]
    NotRestrictedVexillary(String),
    #[error("permutation {0} is not Grassmannian")]
    NotGrassmannian(String),
    #[error("rank {n} exceeds the configured maximum {cap}")]
    RankTooLarge { n: usize, cap: usize },
    #[error("shape {shape} does not fit in the {rows}x{cols} box")]
    ShapeOutOfBox { shape: String, rows: usize, cols: usize },
    #[error("composition {0} is not contained in the staircase of rank {1}")]
    CompositionOutOfBox(String, usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("bad flag: {0}")]
    BadFlag(String),
    #[error("polynomial involves variables outside x1..x{n}: {var}")]
    ForeignVariables { var: String, n: usize },
    #[error("unknown permutation class '{0}'")]
    UnknownClass(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("write failed: {0}")]
    Output(String),
    #[error("output closed")]
    BrokenPipe,
}

pub type Result<T> = std::result::Result<T, Error>;
