//! The Ω exponent, Carmichael numbers and the `(m - 1) / Ω` integrality test.
//!
//! Ω(m) is the lcm of `(p - 1)·p^(k-1)` over the prime powers of `m`, taken
//! verbatim for `p = 2` as well. It coincides with the Carmichael function λ
//! except when `8 | m`, where it is twice as large.

use rayon::prelude::*;

use crate::arith::{factorize, gcd, is_prime, lcm, mod_pow, Factorization, Modulus};
use crate::error::{Error, Result};
use crate::euler::phi_from;

/// Fermat checks are exhaustive over all coprime bases up to this modulus.
pub const FERMAT_EXHAUSTIVE_BOUND: u64 = 100_000;

/// Bases tried above [`FERMAT_EXHAUSTIVE_BOUND`] (those coprime to `m`).
pub const FERMAT_SAMPLE_BASES: [u64; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
    1_000_003,
];

/// Upper end accepted by [`scan_carmichael`].
pub const SCAN_BOUND: u64 = 1_000_000_000;

const SCAN_CHUNK: u64 = 16_384;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaReport {
    pub m: u64,
    pub omega_paper: u64,
    pub lambda_standard: u64,
    pub phi: u64,
    pub divides_phi: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarmichaelRecord {
    pub m: u64,
    pub factorization: Factorization,
    pub omega: u64,
    /// `(m - 1) / Ω` when the division is exact.
    pub ratio: Option<u64>,
    pub korselt: bool,
    /// `a^(m-1) ≡ 1` held for every base checked.
    pub fermat_verified: bool,
    /// Whether every coprime base was checked, rather than the sample list.
    pub fermat_exhaustive: bool,
}

impl CarmichaelRecord {
    pub fn is_carmichael(&self) -> bool {
        self.korselt
    }
}

fn omega_of(f: &Factorization) -> u64 {
    f.prime_powers()
        .map(|(p, _, q)| q / p * (p - 1))
        .fold(1, |acc, x| lcm(acc, x).expect("lcm of totient parts fits"))
}

fn lambda_of(f: &Factorization) -> u64 {
    f.prime_powers()
        .map(|(p, k, q)| {
            if p == 2 && k >= 3 {
                q / 4
            } else {
                q / p * (p - 1)
            }
        })
        .fold(1, |acc, x| lcm(acc, x).expect("lcm of totient parts fits"))
}

pub fn omega_paper(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("omega needs m >= 2, got {m}")));
    }
    Ok(omega_of(&factorize(m)?))
}

/// The minimal universal exponent λ(m).
pub fn carmichael_lambda(m: u64) -> Result<u64> {
    Ok(lambda_of(&Modulus::new(m)?.factorize()))
}

pub fn omega_report(m: u64) -> Result<OmegaReport> {
    let omega = omega_paper(m)?;
    let f = factorize(m)?;
    let phi = phi_from(&f);
    Ok(OmegaReport {
        m,
        omega_paper: omega,
        lambda_standard: lambda_of(&f),
        phi,
        divides_phi: phi.is_multiple_of(omega),
    })
}

fn korselt_of(m: u64, f: &Factorization) -> bool {
    f.omega() >= 2 && f.is_squarefree() && f.primes().all(|p| (m - 1).is_multiple_of(p - 1))
}

/// Composite, squarefree, and `(p - 1) | (m - 1)` for every prime `p | m`.
pub fn korselt_check(m: u64) -> Result<bool> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("korselt needs m >= 2, got {m}")));
    }
    Ok(korselt_of(m, &factorize(m)?))
}

/// Tests `a^(m-1) ≡ 1 (mod m)` for coprime bases `a`.
///
/// Returns `(holds, exhaustive)`. Up to [`FERMAT_EXHAUSTIVE_BOUND`] every
/// coprime base in `[1, m)` is tried; above it, the fixed sample list.
pub fn fermat_property(m: u64) -> Result<(bool, bool)> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("fermat needs m >= 2, got {m}")));
    }
    let holds = |a: u64| gcd(a, m) != 1 || mod_pow(a, m - 1, m) == 1;
    if m <= FERMAT_EXHAUSTIVE_BOUND {
        Ok(((2..m).all(holds), true))
    } else {
        Ok((FERMAT_SAMPLE_BASES.iter().map(|&a| a % m).all(holds), false))
    }
}

/// Full record for an odd composite `m`.
///
/// For odd `m`, Ω equals λ, so an integral `(m - 1) / Ω` and the Fermat
/// property must agree; so must Korselt's criterion. Any disagreement is
/// returned as an error.
pub fn hypothesis_check(m: u64) -> Result<CarmichaelRecord> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("{m} is not an odd number >= 3")));
    }
    if is_prime(m) {
        return Err(Error::InvalidArgument(format!("{m} is prime")));
    }
    let factorization = factorize(m)?;
    let omega = omega_of(&factorization);
    let ratio = (m - 1).is_multiple_of(omega).then(|| (m - 1) / omega);
    let korselt = korselt_of(m, &factorization);
    let (fermat_verified, fermat_exhaustive) = fermat_property(m)?;

    if ratio.is_some() != fermat_verified || korselt != fermat_verified {
        return Err(Error::Inconsistent(format!(
            "m = {m}: ratio {ratio:?}, korselt {korselt}, fermat {fermat_verified}"
        )));
    }
    Ok(CarmichaelRecord {
        m,
        factorization,
        omega,
        ratio,
        korselt,
        fermat_verified,
        fermat_exhaustive,
    })
}

fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range [{lo}, {hi}]")));
    }
    if hi > SCAN_BOUND {
        return Err(Error::RangeTooLarge { lo, hi, bound: SCAN_BOUND });
    }
    Ok(())
}

/// Every Carmichael number in `[lo, hi]`, ascending.
pub fn scan_carmichael(lo: u64, hi: u64) -> Result<Vec<CarmichaelRecord>> {
    let mut out = Vec::new();
    scan_carmichael_chunked(lo, hi, |_, records| out.extend(records))?;
    Ok(out)
}

/// Scans `[lo, hi]` in consecutive chunks searched in parallel.
///
/// `on_chunk(last, records)` is called once per chunk, in ascending order,
/// with the last `m` covered and the Carmichael numbers found in it.
pub fn scan_carmichael_chunked<F>(lo: u64, hi: u64, mut on_chunk: F) -> Result<()>
where
    F: FnMut(u64, Vec<CarmichaelRecord>),
{
    check_range(lo, hi)?;
    let start = lo.max(3);
    if start > hi {
        return Ok(());
    }
    let mut chunk_lo = start;
    loop {
        let chunk_hi = chunk_lo.saturating_add(SCAN_CHUNK - 1).min(hi);
        let records = (chunk_lo..=chunk_hi)
            .into_par_iter()
            .filter(|m| m % 2 == 1)
            .filter_map(|m| match korselt_check(m) {
                Ok(true) => Some(hypothesis_check(m)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<Vec<_>>>()?;
        on_chunk(chunk_hi, records);
        if chunk_hi == hi {
            return Ok(());
        }
        chunk_lo = chunk_hi + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min_exponent(m: u64) -> u64 {
        (1..=m)
            .find(|&e| (1..m).filter(|&a| gcd(a, m) == 1).all(|a| mod_pow(a, e, m) == 1 % m))
            .unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_paper(561).unwrap(), 80);
        assert_eq!(omega_paper(105).unwrap(), 12);
        for a in (1..105u64).filter(|&a| gcd(a, 105) == 1) {
            assert_eq!(mod_pow(a, 12, 105), 1);
        }
        assert_eq!(omega_paper(8).unwrap(), 4);
        assert!(omega_paper(1).is_err());
        assert!(omega_paper(0).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(carmichael_lambda(8).unwrap(), 2);
        assert_eq!(brute_min_exponent(8), 2);
        assert_eq!(carmichael_lambda(561).unwrap(), 80);
        assert_eq!(carmichael_lambda(1).unwrap(), 1);
        assert!(carmichael_lambda(0).is_err());
        for m in 2..=400 {
            assert_eq!(carmichael_lambda(m).unwrap(), brute_min_exponent(m), "lambda({m})");
        }
    }

    #[test]
    fn omega_report_for_powers_of_two() {
        let r = omega_report(16).unwrap();
        assert_eq!((r.omega_paper, r.lambda_standard, r.phi), (8, 4, 8));
        assert!(r.divides_phi);
        let r = omega_report(561).unwrap();
        assert_eq!((r.omega_paper, r.lambda_standard, r.phi), (80, 80, 320));
    }

    #[test]
    fn korselt_examples() {
        assert!(korselt_check(561).unwrap());
        assert!(!korselt_check(100).unwrap());
        assert!(korselt_check(1105).unwrap());
        assert!(!korselt_check(7).unwrap());
        assert!(!korselt_check(2).unwrap());
        assert!(korselt_check(1).is_err());
    }

    #[test]
    fn hypothesis_examples() {
        let r = hypothesis_check(561).unwrap();
        assert_eq!((r.omega, r.ratio, r.korselt, r.fermat_verified), (80, Some(7), true, true));
        assert!(r.fermat_exhaustive);

        let r = hypothesis_check(15).unwrap();
        assert_eq!((r.omega, r.ratio, r.korselt, r.fermat_verified), (4, None, false, false));

        let r = hypothesis_check(1729).unwrap();
        assert_eq!((r.omega, r.ratio, r.korselt), (36, Some(48), true));

        let r = hypothesis_check(9).unwrap();
        assert_eq!((r.omega, r.ratio, r.korselt), (6, None, false));

        assert!(hypothesis_check(560).is_err());
        assert!(hypothesis_check(13).is_err());
        assert!(hypothesis_check(1).is_err());
    }

    #[test]
    fn sampled_fermat_above_bound() {
        // 101101 = 7 * 11 * 13 * 101 is a Carmichael number above the exhaustive bound
        let r = hypothesis_check(101_101).unwrap();
        assert!(r.korselt && r.fermat_verified && !r.fermat_exhaustive);
        let r = hypothesis_check(100_003 * 3).unwrap();
        assert!(!r.fermat_verified);
    }

    #[test]
    fn scan_examples() {
        let ms = |lo, hi| -> Vec<u64> {
            scan_carmichael(lo, hi).unwrap().iter().map(|r| r.m).collect()
        };
        assert_eq!(ms(2, 2000), vec![561, 1105, 1729]);
        assert!(ms(2, 500).is_empty());
        assert_eq!(ms(561, 561), vec![561]);
        assert!(scan_carmichael(10, 2).is_err());
        assert!(matches!(
            scan_carmichael(2, SCAN_BOUND + 1),
            Err(Error::RangeTooLarge { .. })
        ));
    }
}
