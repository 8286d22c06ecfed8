use crate::axioms::AxiomReport;
use crate::set::{GroundSet, Subset};
use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A queried subset contains elements outside the ground set.
    OutOfGround { subset: Subset, ground: GroundSet },
    /// Two matroids that must share a ground set do not.
    GroundMismatch { left: GroundSet, right: GroundSet },
    /// Sets required to be disjoint overlap.
    Overlap { what: &'static str, overlap: Subset },
    /// A size-bounded operation was invoked beyond its configured bound.
    CapacityExceeded { what: &'static str, size: usize, limit: usize },
    /// An explicit family does not form a matroid.
    InvalidMatroid(AxiomReport),
    /// The provided set is not independent in both matroids.
    NotCommonIndependent { set: Subset },
    /// A part union admits a base of the restricted matroid that is
    /// independent in the partition matroid, so the covering-base
    /// construction does not apply.
    ConditionViolated { w: Subset },
    /// The claimed contraction basis is not a maximal independent subset of
    /// the contracted set.
    InvalidBasis { basis: Subset, contracted: Subset },
    /// Malformed argument with context.
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfGround { subset, ground } => {
                write!(f, "subset {subset} is not contained in ground set {ground}")
            }
            Error::GroundMismatch { left, right } => {
                write!(f, "ground sets differ: {left} vs {right}")
            }
            Error::Overlap { what, overlap } => {
                write!(f, "{what} must be disjoint; common elements {overlap}")
            }
            Error::CapacityExceeded { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds limit {limit}")
            }
            Error::InvalidMatroid(report) => {
                write!(f, "family is not a matroid: {report}")
            }
            Error::NotCommonIndependent { set } => {
                write!(f, "{set} is not independent in both matroids")
            }
            Error::ConditionViolated { w } => {
                write!(
                    f,
                    "part union {w} admits a base of the restriction that is independent in the partition matroid"
                )
            }
            Error::InvalidBasis { basis, contracted } => {
                write!(f, "{basis} is not a maximal independent subset of {contracted}")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
