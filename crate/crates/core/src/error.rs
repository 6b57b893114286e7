use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quiver has an oriented cycle through vertex {0}")]
    CyclicQuiver(usize),

    #[error("Cartan matrix is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("unknown Dynkin type label `{0}`")]
    UnknownType(String),

    #[error("`{0}` is not crystallographic; only Weyl groups are supported")]
    NonCrystallographic(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vector has length {got}, expected rank {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("{0:?} is not a real root")]
    NotRealRoot(Vec<i64>),

    #[error("{0:?} is not a positive root")]
    NotPositiveRoot(Vec<i64>),

    #[error("zero vector is not a root")]
    ZeroVector,

    #[error("operation requires a finite-type root system")]
    InfiniteType,

    #[error("operation requires a simply-laced root system")]
    NotSimplyLaced,

    #[error("operation requires type A")]
    NotTypeA,

    #[error("invalid selection: {0}")]
    InvalidSelection(String),

    #[error("selection {0:?} is not a cluster (deleted word is not reduced for w0)")]
    NotACluster(Vec<usize>),

    #[error("frame invariant violated: {0}")]
    FrameInvariant(String),

    #[error("mutation scan found {0} candidate sides, expected exactly one")]
    MutationScan(usize),

    #[error("witness does not multiply to the Coxeter element")]
    BadWitness,

    #[error("infinite-type orbit computation needs an explicit depth limit")]
    DepthLimitRequired,

    #[error("orbit exceeded {limit} factorizations; partial report attached")]
    ResourceLimit {
        limit: usize,
        partial: Box<crate::braid::OrbitReport>,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
