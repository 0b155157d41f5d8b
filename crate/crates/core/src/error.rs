use thiserror::Error;

use crate::lie_data::LieType;

#[derive(Debug, Error)]
pub enum Error {
    #[error("level {level} is below the minimum {min} for type {ty}")]
    IllegalLevel { ty: LieType, level: usize, min: usize },

    #[error("root {root} is not a root of type {ty}")]
    ShapeMismatch { ty: LieType, root: String },

    #[error("operands have different types or levels: {0}")]
    TypeMismatch(String),

    #[error("scope level {scope} is too small (need at least {needed})")]
    ScopeTooSmall { scope: usize, needed: usize },

    #[error("weight is not integral at level {level}")]
    NotIntegral { level: usize },

    #[error("weight difference is not in the root lattice")]
    NotInRootLattice,

    #[error("mu is not below lambda in the dominance order")]
    NotComparable,

    #[error("weights lie in different blocks")]
    DifferentBlocks,

    #[error("block is dot-singular at level {level}: stabilizer contains {roots}")]
    SingularBlockUnsupported { level: usize, roots: String },

    #[error("Weyl group of {descriptor} has order above the limit {limit}")]
    ScaleGuardrail { descriptor: String, limit: u64 },

    #[error("element outside the Coxeter system: {0}")]
    OutOfScope(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache I/O error: {0}")]
    CacheIo(#[from] std::io::Error),

    #[error("cache is corrupt: {0}")]
    CacheCorrupt(String),
}

impl Error {
    /// Stable variant name, used by the CLI when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IllegalLevel { .. } => "IllegalLevel",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::TypeMismatch(_) => "TypeMismatch",
            Error::ScopeTooSmall { .. } => "ScopeTooSmall",
            Error::NotIntegral { .. } => "NotIntegral",
            Error::NotInRootLattice => "NotInRootLattice",
            Error::NotComparable => "NotComparable",
            Error::DifferentBlocks => "DifferentBlocks",
            Error::SingularBlockUnsupported { .. } => "SingularBlockUnsupported",
            Error::ScaleGuardrail { .. } => "ScaleGuardrail",
            Error::OutOfScope(_) => "OutOfScope",
            Error::Parse(_) => "ParseError",
            Error::CacheIo(_) => "CacheIo",
            Error::CacheCorrupt(_) => "CacheCorrupt",
        }
    }

    pub fn is_io(&self) -> bool {
        matches!(self, Error::CacheIo(_) | Error::CacheCorrupt(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
