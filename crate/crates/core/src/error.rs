use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..=32")]
    UnsupportedDimension(u32),

    #[error("face text {text:?} has length {len}, expected {expected}")]
    LengthMismatch {
        text: String,
        len: usize,
        expected: u32,
    },

    #[error("illegal character {ch:?} in face text {text:?}")]
    IllegalCharacter { text: String, ch: char },

    #[error("faces live in different cubes (d={0} vs d={1})")]
    DimensionMismatch(u32, u32),

    #[error("face dimension {k} is out of range for {context}")]
    FaceDimensionOutOfRange { k: i32, context: String },

    #[error("{0} is not a vertex")]
    NotAVertex(String),

    #[error("face {face} has codimension {found}, expected {expected}")]
    CodimensionMismatch {
        face: String,
        found: u32,
        expected: u32,
    },

    #[error("duplicate face {0} in cover set")]
    DuplicateFace(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("malformed cover text at line {line}: {message}")]
    CoverFormat { line: usize, message: String },

    #[error("{0} requires d >= {1}, got d={2}")]
    DimensionTooSmall(&'static str, u32, u32),

    #[error("invalid search problem: {0}")]
    InvalidProblem(String),

    #[error("instance too large for exhaustive enumeration: {0} candidate sets")]
    TooLarge(u128),
}
