//! Error type shared by the symbolic engine.

use crate::param::Param;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("exponential argument must have every term of positive total degree")]
    NonNilpotentExponent,
    #[error("composition argument must have every term of positive total degree")]
    CompositionDomain,
    #[error("series has zero constant term and no inverse")]
    NonInvertible,
    #[error("series is not divisible by {param}^{power}")]
    InexactDivision { param: Param, power: u32 },
    #[error("substituted symbol {param} occurs with a negative exponent")]
    LaurentSubstitution { param: Param },
    #[error("monomial degree exceeds the cap {cap}; raise the cap")]
    DegreeCapExceeded { cap: usize },
    #[error("tensor rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("element is not a linear combination of generators")]
    NonLinearElement,
    #[error("input tensor is not skew-symmetric")]
    NotSkew,
    #[error("matrix entries do not commute pairwise")]
    NonCommutingEntries,
    #[error("cocommutator is not a cocycle")]
    NotACocycle,
    #[error("cocommutator does not satisfy the dual Jacobi constraints")]
    ConstraintsViolated,
    #[error("map does not preserve the commutation table")]
    NotAnAutomorphism,
    #[error("completed coproduct fails coassociativity")]
    CompletionFailure,
    #[error("coproduct is outside the triangular pattern solvable for an antipode")]
    AntipodeUnsolvable,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
}
