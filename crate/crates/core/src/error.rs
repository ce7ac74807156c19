use thiserror::Error;

/// Errors raised by the library. Input-level problems (parse errors,
/// degenerate pencils) and mathematical obstructions share one enum so the
/// CLI can map them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinimalPolynomial(String),
    #[error("minimal polynomial {0} is reducible over Q")]
    ReducibleMinimalPolynomial(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("substituted polynomial is not divisible by x^{drop}")]
    InexactDivision { drop: u32 },
    #[error("no cluster point with id {0}")]
    UnknownPoint(usize),
    #[error("pencil generators must be nonzero homogeneous forms of one degree d >= 1: {0}")]
    InvalidPencil(String),
    #[error("the generators share the fixed component {gcd}")]
    FixedComponent { gcd: String },
    #[error("base point not rational over the field; adjoin a root of {factor}")]
    ExtensionRequired { factor: String },
    #[error("base-point resolution exceeded the depth guard of {depth} levels")]
    NonTermination { depth: usize },
    #[error("linear system has projective dimension {0}, expected 0")]
    DimensionNotZero(i64),
    #[error("component {0} divides no member of the pencil")]
    NoFiberFound(String),
    #[error("component {0} divides every member of the pencil")]
    AmbiguousFiber(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A positioned input error; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("{0}")]
    Document(String),
}
