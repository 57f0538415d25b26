use thiserror::Error;

/// Errors produced by the arithmetic and invariant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("value {value} is not a canonical residue modulo {modulus}")]
    NonCanonical { value: u64, modulus: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("extended gcd is undefined for (0, 0)")]
    GcdOfZeros,

    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),

    #[error("{value} is not an invariant modulo {modulus}")]
    NotInvariant { value: u64, modulus: u64 },

    #[error("trivial invariant {value} modulo {modulus} carries no information")]
    TrivialWitness { value: u64, modulus: u64 },

    #[error("{m} exceeds the exhaustive bound {bound}; use the factorization-based routine")]
    AboveOracleBound { m: u64, bound: u64 },

    #[error("group of order {order} exceeds the table bound {bound}")]
    TableTooLarge { order: u64, bound: u64 },

    #[error("scan range [{lo}, {hi}] exceeds the bound {bound}")]
    RangeTooLarge { lo: u64, hi: u64, bound: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by a size limit rather than by bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::AboveOracleBound { .. }
                | Error::TableTooLarge { .. }
                | Error::RangeTooLarge { .. }
                | Error::Overflow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
