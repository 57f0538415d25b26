//! Invariants (idempotents) of `Z/mZ`: enumeration, anti-invariant duality,
//! compositeness certificates, the generalized Euler theorem and the Ω
//! exponent behind Carmichael numbers.
//!
//! Everything works on `u64` moduli; all functions are pure.

pub mod arith;
pub mod carmichael;
pub mod error;
pub mod euler;
pub mod invariants;

pub use arith::{Factorization, Modulus, Residue};
pub use error::{Error, Result};
