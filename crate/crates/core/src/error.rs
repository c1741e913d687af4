use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set [1, {m}]")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("ambient size m = {m} exceeds the supported maximum {max}")]
    AmbientTooLarge { m: usize, max: usize },

    #[error("complement has {s} members, more than the supported maximum {max}")]
    TooManyMembers { s: usize, max: usize },

    #[error("ambient sizes differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("void complex has no missing-face presentation over a nonempty ideal convention")]
    VoidComplex,

    #[error("not a chain complex: consecutive maps do not compose to zero")]
    NotAChainComplex,

    #[error("matrix shapes do not match: {0}")]
    Shape(String),

    #[error("chain is not a cycle")]
    NotACycle,

    #[error("unsupported: ring reduction over Z with torsion")]
    TorsionUnsupported,

    #[error("{0} is not a field")]
    NotAField(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("classes belong to different Tor modules")]
    ForeignClass,

    #[error("invariant violated: {0}")]
    Invariant(String),
}
