//! Invariants (idempotents) and anti-invariants modulo `m`.
//!
//! An invariant is a residue `I` with `I² ≡ I`; an anti-invariant is a residue
//! `A` with `A² ≡ -A`. The two sets are exchanged by `x ↦ m - x`, and every
//! anti-invariant is immediately followed by an invariant, giving the
//! `(A, A + 1)` tuples. Residues are canonical in `[0, m)`; the `paper_*`
//! accessors render the `1..=m` convention where `0` is written `m`.

use crate::arith::{crt_combine, gcd, Modulus, Residue};
use crate::error::{Error, Result};

/// Largest modulus the exhaustive scans accept unless told otherwise.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

/// Full idempotent census of a modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub modulus: Modulus,
    /// Ascending.
    pub invariants: Vec<Residue>,
    /// Ascending.
    pub anti_invariants: Vec<Residue>,
    /// `(A, A + 1)` pairs, ordered by the invariant.
    pub tuples: Vec<(Residue, Residue)>,
    pub trivial: Vec<Residue>,
    pub nontrivial: Vec<Residue>,
}

impl InvariantReport {
    fn assemble(
        modulus: Modulus,
        mut invariants: Vec<Residue>,
        mut anti_invariants: Vec<Residue>,
    ) -> Self {
        invariants.sort_unstable();
        anti_invariants.sort_unstable();
        let mut tuples: Vec<_> = anti_invariants
            .iter()
            .map(|&a| (a, a.add(modulus.one())))
            .collect();
        tuples.sort_unstable_by_key(|&(_, i)| i);
        let (trivial, nontrivial) = invariants
            .iter()
            .partition(|i| i.is_zero() || i.value() == 1);
        InvariantReport { modulus, invariants, anti_invariants, tuples, trivial, nontrivial }
    }

    pub fn invariant_values(&self) -> Vec<u64> {
        self.invariants.iter().map(|r| r.value()).collect()
    }

    pub fn anti_invariant_values(&self) -> Vec<u64> {
        self.anti_invariants.iter().map(|r| r.value()).collect()
    }

    /// Invariants in the `1..=m` convention, ascending.
    pub fn paper_invariants(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.invariants.iter().map(|r| r.paper_value()).collect();
        v.sort_unstable();
        v
    }

    /// Anti-invariants listed against [`paper_invariants`](Self::paper_invariants),
    /// i.e. `m - I` for each `I` in that order (so `m` pairs with `0`).
    pub fn paper_anti_invariants(&self) -> Vec<u64> {
        let m = self.modulus.get();
        self.paper_invariants().iter().map(|&i| m - i).collect()
    }

    /// Tuples `(A, I)` with `I` in the `1..=m` convention, ordered by `I`.
    pub fn paper_tuples(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> = self
            .tuples
            .iter()
            .map(|&(a, i)| (a.value(), i.paper_value()))
            .collect();
        v.sort_unstable_by_key(|&(_, i)| i);
        v
    }
}

/// A non-trivial invariant and the coprime split of `m` it exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositeCertificate {
    pub modulus: Modulus,
    pub witness: Residue,
    /// `gcd(witness, m)`; the witness is `0` modulo this factor.
    pub factor_a: u64,
    /// `gcd(witness - 1, m)`; the witness is `1` modulo this factor.
    pub factor_b: u64,
}

impl CompositeCertificate {
    /// Re-checks every algebraic condition of the certificate.
    pub fn verify(&self) -> bool {
        let m = self.modulus.get();
        let (a, b) = (self.factor_a, self.factor_b);
        let w = self.witness.value();
        a.checked_mul(b) == Some(m)
            && 1 < a
            && a < m
            && 1 < b
            && b < m
            && gcd(a, b) == 1
            && w.is_multiple_of(a)
            && w % b == 1 % b
            && is_invariant(self.witness)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimalityVerdict {
    /// Only the trivial invariants exist: `m` is a prime or a prime power.
    PrimeOrPrimePower,
    CompositeWithCertificate(CompositeCertificate),
}

pub fn is_invariant(x: Residue) -> bool {
    x.square() == x
}

/// `x² ≡ m - x (mod m)`; `0` qualifies.
pub fn is_anti_invariant(x: Residue) -> bool {
    x.square() == x.neg()
}

/// The anti-invariant `(m - i) mod m` paired with the invariant `i`.
pub fn anti_of(i: Residue) -> Result<Residue> {
    require_invariant(i)?;
    Ok(i.neg())
}

fn require_invariant(i: Residue) -> Result<()> {
    if is_invariant(i) {
        Ok(())
    } else {
        Err(Error::NotInvariant { value: i.value(), modulus: i.modulus().get() })
    }
}

fn check_bound(m: Modulus, bound: u64) -> Result<()> {
    if m.get() > bound {
        return Err(Error::AboveOracleBound { m: m.get(), bound });
    }
    Ok(())
}

/// Exhaustive scan of `[0, m)` against the defining congruences.
pub fn enumerate_invariants_bruteforce(m: Modulus) -> Result<InvariantReport> {
    enumerate_invariants_bruteforce_with_bound(m, DEFAULT_ORACLE_BOUND)
}

pub fn enumerate_invariants_bruteforce_with_bound(
    m: Modulus,
    bound: u64,
) -> Result<InvariantReport> {
    check_bound(m, bound)?;
    let mut invariants = Vec::new();
    let mut anti = Vec::new();
    for x in m.residues() {
        if is_invariant(x) {
            invariants.push(x);
        }
        if is_anti_invariant(x) {
            anti.push(x);
        }
    }
    Ok(InvariantReport::assemble(m, invariants, anti))
}

/// Every invariant of `m`, built by CRT from the prime-power components.
///
/// Each subset `S` of the components gives the residue that is `0` modulo the
/// components in `S` and `1` modulo the others. Ascending order.
pub fn invariants_of(m: Modulus) -> Vec<Residue> {
    let components: Vec<u64> = m.factorize().prime_powers().map(|(_, _, q)| q).collect();
    let mut out: Vec<Residue> = (0u32..1 << components.len())
        .map(|mask| {
            let system: Vec<(u64, u64)> = components
                .iter()
                .enumerate()
                .map(|(j, &q)| (if mask >> j & 1 == 1 { 0 } else { 1 % q }, q))
                .collect();
            let r = crt_combine(&system).expect("prime-power components are coprime");
            Residue::reduce(r.value(), m)
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn invariants_from_factorization(m: Modulus) -> InvariantReport {
    let invariants = invariants_of(m);
    let anti = invariants.iter().map(|i| i.neg()).collect();
    InvariantReport::assemble(m, invariants, anti)
}

/// `(A, A + 1)` for every anti-invariant `A`, ordered by the invariant.
pub fn tuples_of(m: Modulus) -> Vec<(Residue, Residue)> {
    invariants_of(m)
        .into_iter()
        .map(|i| (i.sub(m.one()), i))
        .collect()
}

/// Checks `i^s ≡ i` for every `s` in `1..=s_max`.
pub fn power_stability_check(i: Residue, s_max: u64) -> Result<bool> {
    require_invariant(i)?;
    if s_max == 0 {
        return Err(Error::InvalidArgument("s_max must be at least 1".into()));
    }
    let mut acc = i;
    for _ in 1..s_max {
        acc = acc.mul(i);
        if acc != i {
            return Ok(false);
        }
    }
    Ok(acc == i)
}

/// Splits `m` using a non-trivial invariant.
///
/// `factor_a = gcd(w, m)` and its cofactor `m / factor_a` is cross-checked
/// against `gcd(w - 1, m)`.
pub fn certify_composite_from_invariant(witness: Residue) -> Result<CompositeCertificate> {
    require_invariant(witness)?;
    let modulus = witness.modulus();
    let m = modulus.get();
    if witness.is_zero() || witness.is_one() {
        return Err(Error::TrivialWitness { value: witness.value(), modulus: m });
    }
    let factor_a = gcd(witness.value(), m);
    let factor_b = m / factor_a;
    let via_shift = gcd(witness.sub(modulus.one()).value(), m);
    if via_shift != factor_b {
        return Err(Error::Inconsistent(format!(
            "gcd({} - 1, {m}) = {via_shift} but {m} / {factor_a} = {factor_b}",
            witness.value()
        )));
    }
    let cert = CompositeCertificate { modulus, witness, factor_a, factor_b };
    if !cert.verify() {
        return Err(Error::Inconsistent(format!("certificate {cert:?} fails verification")));
    }
    Ok(cert)
}

/// Searches `[2, m - 1)` in ascending order for a non-trivial invariant.
///
/// This cannot tell a prime from a prime power: both have only the two
/// trivial invariants.
pub fn primality_by_invariants(m: Modulus) -> Result<PrimalityVerdict> {
    primality_by_invariants_with_bound(m, DEFAULT_ORACLE_BOUND)
}

pub fn primality_by_invariants_with_bound(m: Modulus, bound: u64) -> Result<PrimalityVerdict> {
    if m.get() < 2 {
        return Err(Error::InvalidArgument("primality needs m >= 2".into()));
    }
    check_bound(m, bound)?;
    let witness = (2..m.get().saturating_sub(1))
        .map(|x| m.reduce(x))
        .find(|&x| is_invariant(x));
    match witness {
        Some(w) => Ok(PrimalityVerdict::CompositeWithCertificate(
            certify_composite_from_invariant(w)?,
        )),
        None => Ok(PrimalityVerdict::PrimeOrPrimePower),
    }
}
