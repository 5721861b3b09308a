use thiserror::Error;

use crate::rootsys::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Cartan type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not positive definite (leading minor {minor} is {value})")]
    NotPositiveDefinite { minor: usize, value: i128 },

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("word {word:?} is not reduced (letter {position} produces a repeated or negative inversion)")]
    NonReduced { word: Vec<usize>, position: usize },

    /// The reading used here for the admissible pairings is {-2, -1, 0, 1}.
    #[error("eta pairing {value} with positive root #{root} lies outside {{-2, -1, 0, 1}}")]
    RangeViolation { root: usize, value: i64 },

    #[error("antichain is not abelian: {0:?} + {1:?} lies below the highest root")]
    NotAbelian(Vec<i64>, Vec<i64>),

    #[error("set of roots is not an antichain")]
    NotAntichain,

    #[error("root set is not an abelian dual order ideal")]
    NotAbelianIdeal,

    #[error("word {0:?} is not minuscule")]
    NotMinuscule(Vec<usize>),

    #[error("weight {0:?} is not the weight of an abelian ideal")]
    UnknownWeight(Vec<i64>),

    #[error("{0:?} is not a weakly decreasing sequence of positive integers")]
    NotPartition(Vec<usize>),

    #[error("partition {parts:?} does not fit in the staircase of size {n}")]
    OutOfStaircase { parts: Vec<usize>, n: usize },

    #[error("{0} requires a root system of type A")]
    NotTypeA(CartanType),

    #[error("permutation is not a diagram automorphism")]
    NotDiagramAutomorphism,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
