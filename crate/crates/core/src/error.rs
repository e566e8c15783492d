use thiserror::Error;

/// Everything that can go wrong while building a poset or evaluating an
/// operator on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid label `{0}`: labels are nonempty, contain no whitespace and only `_bot`/`_top` may start with `_`")]
    InvalidLabel(String),
    #[error("cycle detected: `{0}` < `{1}` would make the order reflexive")]
    CycleDetected(String, String),
    #[error("bounds violation: {0}")]
    BoundsViolation(String),
    #[error("a poset needs at least two elements")]
    TooSmall,
    #[error("empty input to {0}")]
    EmptyInput(&'static str),
    #[error("too many atoms: {got} (at most {max})")]
    TooManyAtoms { got: usize, max: usize },
    #[error("ambiguous bounds: several pairs share the {0} value sum")]
    AmbiguousBounds(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("signed misuse: {0}")]
    SignedMisuse(String),
    #[error("degenerate conditional: {0} has probability zero")]
    DegenerateConditional(&'static str),
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("arity error: `{func}` takes {expected} argument(s), got {got}")]
    Arity {
        func: String,
        expected: &'static str,
        got: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable discriminant name, used when comparing error outcomes of two
    /// evaluation paths without caring about the message payload.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::CycleDetected(..) => "CycleDetected",
            Error::BoundsViolation(_) => "BoundsViolation",
            Error::TooSmall => "TooSmall",
            Error::EmptyInput(_) => "EmptyInput",
            Error::TooManyAtoms { .. } => "TooManyAtoms",
            Error::AmbiguousBounds(_) => "AmbiguousBounds",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::UnknownFixture(_) => "UnknownFixture",
            Error::SignedMisuse(_) => "SignedMisuse",
            Error::DegenerateConditional(_) => "DegenerateConditional",
            Error::Syntax { .. } => "Syntax",
            Error::Arity { .. } => "Arity",
        }
    }
}
