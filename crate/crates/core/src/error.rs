use alloc::string::String;

use crate::rootsys::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan type {letter}{rank}: {reason}")]
    InvalidType {
        letter: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group of order {order} exceeds the size gate {gate}")]
    SizeGate { order: u128, gate: u128 },
    #[error("exterior algebra of dimension {dim} exceeds the gate {gate}")]
    DimensionGate { dim: usize, gate: usize },
    #[error("vector of length {found} does not match space dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Laurent division is not exact: {0}")]
    InexactDivision(String),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("character is not Weyl-invariant")]
    NotWeylInvariant,
    #[error("index routes disagree at weight {0}")]
    RouteMismatch(Weight),
    #[error("product-formula evaluations disagree for w = {word}, mu = {mu}")]
    ProductFormulaMismatch { word: String, mu: Weight },
    #[error("K-classes live on different spaces")]
    SpaceMismatch,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
