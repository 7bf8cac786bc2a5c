use core::fmt;

use crate::rootsys::SimpleType;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the library. Every variant describes bad input; internal
/// invariant failures panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A `(type, rank)` pair outside the crystallographic list.
    InadmissibleType { kind: SimpleType, rank: usize },
    /// A root system needs at least one simple component.
    EmptySystem,
    /// The total rank does not fit into a node set.
    RankTooLarge(usize),
    DimensionMismatch { expected: usize, found: usize },
    /// Arguments are expressed in incompatible bases.
    BasisMismatch,
    /// The operation is only defined for simple (one-component) systems.
    NotSimple,
    NodeOutOfRange { node: usize, rank: usize },
    /// A weight that had to be dominant (for the relevant subsystem) is not.
    NotDominant,
    /// A weight that had to be integral has a non-integer coordinate.
    NonIntegral,
    /// The diagram has no branch node and no multiple edge.
    NoSingularity,
    /// The Levi subset is the whole diagram, so `P = G`.
    LeviIsWholeDiagram,
    EmptyGenerators,
    /// Brute-force search refused because the rank exceeds the configured bound.
    RankAboveBound { rank: usize, bound: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InadmissibleType { kind, rank } => {
                write!(f, "no simple root system of type {kind}{rank}")
            }
            Error::EmptySystem => f.write_str("root system specification is empty"),
            Error::RankTooLarge(r) => write!(f, "total rank {r} exceeds the supported 64 nodes"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::BasisMismatch => f.write_str("arguments are expressed in incompatible bases"),
            Error::NotSimple => f.write_str("operation requires a simple root system"),
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {} out of range for rank {rank}", node + 1)
            }
            Error::NotDominant => f.write_str("weight is not dominant for the chosen subsystem"),
            Error::NonIntegral => f.write_str("weight has non-integral coordinates"),
            Error::NoSingularity => f.write_str("Dynkin diagram has no singularity"),
            Error::LeviIsWholeDiagram => {
                f.write_str("Levi subset is the whole diagram (P = G)")
            }
            Error::EmptyGenerators => f.write_str("generator list is empty"),
            Error::RankAboveBound { rank, bound } => {
                write!(f, "rank {rank} exceeds the search bound {bound}")
            }
        }
    }
}

impl core::error::Error for Error {}
