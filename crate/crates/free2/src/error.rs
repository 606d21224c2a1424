use thiserror::Error;

/// Errors produced by parsing, expansion, and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("exponent at byte {pos} does not fit in a signed 64-bit integer")]
    ExponentOverflow { pos: usize },

    #[error("expansion needs {needed} letters, over the cap of {cap}")]
    LengthCap { needed: u128, cap: usize },

    #[error("the empty word has no primitive root")]
    EmptyWord,

    #[error("word is not primitive")]
    NotPrimitive,

    #[error("root of the given power is not primitive (exponent {exponent})")]
    NonPrimitiveRoot { exponent: u64 },

    #[error("expected a proper power, found exponent {exponent}")]
    NotAProperPower { exponent: u64 },

    #[error("parameter range is empty")]
    EmptyRange,

    #[error("family '{family}' does not take a twisting parameter n")]
    NoTwistParameter { family: &'static str },

    #[error("meridian genus is undefined at p = 0")]
    GenusUndefined,

    #[error("word length {len} exceeds the oracle bound {max}")]
    OracleBound { len: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
