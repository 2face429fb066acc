use thiserror::Error;

/// Errors raised across the group, subset, graph and census layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is not a square matrix with entries in range")]
    MalformedTable,
    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("element 0 is not the identity: {0}")]
    NoIdentity(String),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("group order {order} exceeds the supported limit {limit}")]
    OrderLimitExceeded { order: usize, limit: usize },
    #[error("unsupported group: {0}")]
    UnsupportedOrder(String),
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("automorphism is not involutory")]
    NotInvolutory,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subset meets omega at {0}")]
    MeetsOmega(String),
    #[error("subset is not alpha-symmetric: alpha({0}^-1) is missing")]
    NotAlphaSymmetric(String),
    #[error("subset is empty")]
    EmptySubset,
    #[error("set is not closed under inverses: {0}")]
    NotSymmetricSet(String),
    #[error("subset is not square-free: {0} is a square")]
    NotSquareFree(String),
    #[error("graph has {n} vertices, limit is {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("output differs from golden file:\n{0}")]
    MismatchAgainstGolden(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
