use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd: both polynomials are zero")]
    UndefinedGcd,
    #[error("degree order violated: deg Q = {q} exceeds deg P = {p}")]
    DegreeOrder { p: usize, q: usize },
    #[error("P must have degree at least 1")]
    DegenerateP,
    #[error("closed-form minor formula requires simple roots (root {0} is repeated)")]
    RepeatedRoot(Rational),
    #[error("minor size {size} out of range 1..={n}")]
    SizeOutOfRange { size: usize, n: usize },
    #[error("node sequence is empty")]
    EmptyNodes,
    #[error("nodes must be grouped: node {0} reappears after a different node")]
    NodesNotGrouped(Rational),
    #[error("insufficient Hermite data at node {node}: need {needed} values, have {have}")]
    InsufficientHermiteData {
        node: Rational,
        needed: usize,
        have: usize,
    },
    #[error("duplicate Hermite group for node {0}")]
    DuplicateHermiteNode(Rational),
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree: deflate first")]
    NotSquarefree,
    #[error("isolation width must be positive")]
    NonPositiveWidth,
    #[error("invalid value for `{field}`: {message}")]
    Input { field: String, message: String },
}

impl Error {
    pub(crate) fn input(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
