use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} out of range for alphabet of size {size}")]
    LetterOutOfRange { letter: i32, size: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("mismatched sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("operation requires n >= {min}, got n = {n}")]
    TooFewStrands { n: usize, min: usize },
    #[error("not a pure braid")]
    NotPure,
    #[error("integer overflow in group arithmetic")]
    Overflow,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse {what} from token {token:?}")]
    Parse { what: &'static str, token: String },
    #[error("conjugator does not carry {from} onto {to} preserving polarization")]
    NotCoherent { from: String, to: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
