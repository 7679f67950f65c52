use thiserror::Error;

use crate::lattice::Site;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("expected a {expected:?} path")]
    WrongPathKind { expected: crate::lattice::PathKind },
    #[error("patch is not a box of the form {{-n..n}}^2 + v")]
    NotABox,
    #[error("configuration has no value at {0}")]
    MissingSite(Site),
    #[error("configurations disagree at {0}")]
    ConfigMismatch(Site),
    #[error("patch {inner} edges is not contained in the larger patch")]
    NotNested { inner: usize },
    #[error("generator {0} is not a Hermitian involution")]
    NotInvolution(usize),
    #[error("generators {0} and {1} anticommute")]
    Anticommuting(usize, usize),
    #[error("generator {0} is a product of earlier generators")]
    Dependent(usize),
    #[error("sites {0} listed more than once")]
    OverlappingPairs(Site),
    #[error("no certificate within {cap} growth rings; {residual} term(s) still residual")]
    GrowthCapExceeded { cap: u32, residual: usize },
    #[error("patch has {edges} edges; the dense oracle is capped at {cap}")]
    OracleTooLarge { edges: usize, cap: usize },
    #[error("operator support leaves the patch")]
    SupportOverflow,
    #[error("key set is not a superset of the cylinder's keys")]
    NotRefinement,
    #[error("boundary pattern has odd parity on {0}")]
    OddParity(&'static str),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
