use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { message: String, position: usize },
    #[error("invalid exponent at position {position}: {message}")]
    BadExponent { message: String, position: usize },
    #[error("operands live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("invalid ring: {0}")]
    BadRing(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    WrongSize { expected: String, got: usize },
    #[error("{what} must be homogeneous of degree {expected}, got {got}")]
    DegreeMismatch { what: String, expected: u32, got: String },
    #[error("assembled generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("monomial {monomial} cannot be written in the even Veronese coordinates")]
    NotEven { monomial: String },
    #[error("decomposition of {what} does not reassemble to the original polynomial")]
    BadDecomposition { what: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator {index} ({text}) is not homogeneous; monomial degrees {degrees:?}")]
    Inhomogeneous { index: usize, text: String, degrees: Vec<u32> },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("syzygy {index} does not annihilate the generators")]
    BadSyzygy { index: usize },
    #[error("direction fails the first-order cocycle condition on syzygy {syzygy}")]
    NotCocycle { syzygy: usize },
    #[error("direction has {got} components, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("component {index} of the direction must be homogeneous of degree {expected}")]
    ComponentDegree { index: usize, expected: u32 },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
