use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero rational function")]
    DivisionByZero,

    #[error("multiplier must be nonzero")]
    ZeroMultiplier,

    #[error("point in indeterminacy locus")]
    Indeterminate,

    #[error("unbound generator `{0}`")]
    UnboundGenerator(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("mismatched moduli {0} and {1}")]
    ModulusMismatch(u64, u64),

    #[error("unsupported prime {0} (expected one of 2, 3, 5, 7)")]
    UnsupportedPrime(u64),

    #[error("invalid document: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }
}
