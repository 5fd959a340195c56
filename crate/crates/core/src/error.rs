use thiserror::Error;

use crate::scheme::axioms::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("relation table is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("relation value {value} at ({x}, {y}) is out of range 0..={d}")]
    ValueOutOfRange { x: usize, y: usize, value: usize, d: usize },

    #[error("association scheme axioms violated: {0}")]
    AxiomViolation(Box<AxiomReport>),

    #[error("eigenvalues could not be certified as Gaussian rationals: {0}")]
    SnapFailure(String),

    #[error("random combination has repeated eigenvalues after {attempts} attempts")]
    DegenerateCombination { attempts: usize },

    #[error("negative or non-real Krein parameter q[{i}][{j}][{k}] = {value}")]
    NegativeKrein { i: usize, j: usize, k: usize, value: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("fusion is not an association scheme (axiom {axiom} fails)")]
    ClosureFailure { axiom: u8, report: Box<AxiomReport> },

    #[error("size cap exceeded: {size} > {cap}")]
    SizeCap { size: u128, cap: usize },

    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("symbol {symbol} out of range for a base scheme on {v} vertices")]
    SymbolOutOfRange { symbol: usize, v: usize },

    #[error("scheme has no exact eigenmatrix (numeric-only mode)")]
    NumericOnly,

    #[error("code is not additive: {a:?} + {b:?} is not a codeword")]
    NotAdditive { a: Vec<usize>, b: Vec<usize> },

    #[error("base scheme has no translation structure")]
    NoTranslation,

    #[error("invalid translation structure: {0}")]
    InvalidTranslation(String),

    #[error("duplicate codeword {0:?} (line {1})")]
    DuplicateWord(Vec<usize>, usize),

    #[error("code is empty")]
    EmptyCode,

    #[error("(PT)^3 is not scalar: entry ({row}, {col}) = {value}")]
    NotScalar { row: usize, col: usize, value: String },

    #[error("(PT)^3 vanishes; constant must be nonzero")]
    ZeroConstant,

    #[error("matrix is not diagonal")]
    NotDiagonal,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
