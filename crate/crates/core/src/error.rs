use thiserror::Error;

use crate::ladder::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("ladder condition fails for corners {first:?} and {second:?}: {missing:?} is not in the region")]
    NotALadder {
        first: Point,
        second: Point,
        missing: Point,
    },

    #[error("invalid cogenerator: {0}")]
    InvalidCogenerator(String),

    #[error("hypothesis violated: {which} of path {index} is {point:?}, which is not in the region")]
    HypothesisViolation {
        which: &'static str,
        index: usize,
        point: Point,
    },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("no allowed cutting point exists for {0}")]
    NoAllowedCut(String),

    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
