//! Exact integer and modular arithmetic over `u64`.
//!
//! Products are taken in `u128` so every modulus up to `u64::MAX` is safe.

mod factor;
mod modular;
mod prime;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use factor::factorize;
pub use modular::{
    add_mod, crt_combine, extended_gcd, gcd, lcm, mod_inverse, mod_pow, mul_mod, sub_mod,
};
pub use prime::is_prime;

/// The ambient modulus `m >= 1`. `m = 1` is the one-element ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical residue of `value`, which must already lie in `[0, m)`.
    pub fn residue(self, value: u64) -> Result<Residue> {
        Residue::new(value, self)
    }

    /// Residue of `value` after reduction.
    pub fn reduce(self, value: u64) -> Residue {
        Residue::reduce(value, self)
    }

    pub fn zero(self) -> Residue {
        Residue { value: 0, modulus: self }
    }

    /// `1 mod m`, which is `0` when `m = 1`.
    pub fn one(self) -> Residue {
        self.reduce(1)
    }

    pub fn factorize(self) -> Factorization {
        factorize(self.0).expect("modulus is non-zero")
    }

    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (0..self.0).map(move |value| Residue { value, modulus: self })
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(m: u64) -> Result<Self> {
        Modulus::new(m)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A canonical representative in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

#[allow(clippy::should_implement_trait)]
impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Result<Self> {
        if value >= modulus.get() {
            return Err(Error::NonCanonical { value, modulus: modulus.get() });
        }
        Ok(Residue { value, modulus })
    }

    pub fn reduce(value: u64, modulus: Modulus) -> Self {
        Residue { value: value % modulus.get(), modulus }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline]
    fn m(self) -> u64 {
        self.modulus.get()
    }

    pub fn mul(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue { value: mul_mod(self.value, other.value, self.m()), ..self }
    }

    pub fn add(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue { value: add_mod(self.value, other.value, self.m()), ..self }
    }

    pub fn sub(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue { value: sub_mod(self.value, other.value, self.m()), ..self }
    }

    /// `(m - x) mod m`.
    pub fn neg(self) -> Residue {
        Residue { value: sub_mod(0, self.value, self.m()), ..self }
    }

    pub fn square(self) -> Residue {
        self.mul(self)
    }

    /// `self^exp`; `x^0` is `1 mod m` (hence `0` when `m = 1`).
    pub fn pow(self, exp: u64) -> Residue {
        Residue { value: mod_pow(self.value, exp, self.m()), ..self }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1 % self.m()
    }

    /// Value under the `1..=m` display convention: `0` is written as `m`.
    pub fn paper_value(self) -> u64 {
        if self.value == 0 {
            self.m()
        } else {
            self.value
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit pairs, checking primality,
    /// ordering and exponent positivity.
    pub fn from_pairs(mut factors: Vec<(u64, u32)>) -> Result<Self> {
        factors.sort_unstable();
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidArgument(format!("repeated prime {}", w[0].0)));
            }
        }
        for &(p, k) in &factors {
            if k == 0 || !is_prime(p) {
                return Err(Error::InvalidArgument(format!("bad factor {p}^{k}")));
            }
        }
        let f = Factorization { factors };
        f.value()?;
        Ok(f)
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// `(p, k, p^k)` for every prime-power component.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u32, u64)> + '_ {
        self.factors.iter().map(|&(p, k)| (p, k, p.pow(k)))
    }

    /// Number of distinct primes, ω.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    /// The factored number, recomposed.
    pub fn value(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, k)| {
            p.checked_pow(k)
                .and_then(|pk| acc.checked_mul(pk))
                .ok_or(Error::Overflow("factorization product"))
        })
    }
}

/// Renders as `p^k*q*r`, with exponent 1 omitted and `1` for the empty product.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_canonical_form() {
        let m = Modulus::new(15).unwrap();
        assert!(m.residue(15).is_err());
        assert_eq!(m.reduce(21).value(), 6);
        assert_eq!(m.residue(6).unwrap().square().value(), 6);
        assert_eq!(m.residue(6).unwrap().neg().value(), 9);
        assert_eq!(m.zero().neg().value(), 0);
        assert_eq!(m.zero().paper_value(), 15);
        assert!(Modulus::new(0).is_err());
    }

    #[test]
    fn degenerate_ring() {
        let one = Modulus::new(1).unwrap();
        assert_eq!(one.one(), one.zero());
        assert!(one.zero().is_one());
        assert_eq!(one.zero().pow(0).value(), 0);
        assert_eq!(one.residues().count(), 1);
        assert_eq!(one.factorize().omega(), 0);
    }

    #[test]
    fn factorization_display() {
        let f = factorize(2 * 2 * 2 * 3 * 49).unwrap();
        assert_eq!(f.to_string(), "2^3*3*7^2");
        assert_eq!(factorize(1).unwrap().to_string(), "1");
        assert_eq!(factorize(561).unwrap().to_string(), "3*11*17");
    }

    #[test]
    fn factorization_from_pairs() {
        let f = Factorization::from_pairs(vec![(17, 1), (3, 1), (11, 1)]).unwrap();
        assert_eq!(f, factorize(561).unwrap());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(3, 0)]).is_err());
        assert!(Factorization::from_pairs(vec![(3, 1), (3, 2)]).is_err());
        assert!(Factorization::from_pairs(vec![(2, 64)]).is_err());
    }
}
