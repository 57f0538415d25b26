//! Euler's totient and its generalization to residues sharing factors with `m`.
//!
//! For any `a`, `a^φ(m)` is the invariant that is `0` modulo every prime-power
//! component of `m` whose prime divides `a`, and `1` modulo the rest. The
//! coprime case is the classical theorem.

use std::collections::BTreeMap;

use crate::arith::{crt_combine, gcd, Factorization, Modulus, Residue};
use crate::error::{Error, Result};
use crate::invariants::{is_invariant, DEFAULT_ORACLE_BOUND};

/// Largest group order `subgroup_table` will tabulate.
pub const TABLE_BOUND: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerClass {
    /// Unitary divisor of `m`: the product of the components the class vanishes on.
    pub support: u64,
    pub idempotent: Residue,
}

/// One row per unitary divisor of `m`, ascending by support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerClassification {
    pub modulus: Modulus,
    pub phi: u64,
    pub classes: Vec<EulerClass>,
}

pub fn euler_phi(m: Modulus) -> u64 {
    phi_from(&m.factorize())
}

pub(crate) fn phi_from(f: &Factorization) -> u64 {
    f.prime_powers().map(|(p, _, q)| q / p * (p - 1)).product()
}

fn require_nondegenerate(m: Modulus) -> Result<()> {
    if m.get() < 2 {
        return Err(Error::InvalidArgument("modulus must be at least 2".into()));
    }
    Ok(())
}

/// `a^φ(m)`, checked to be an invariant of `m`.
pub fn generalized_euler_residue(a: Residue) -> Result<Residue> {
    let m = a.modulus();
    require_nondegenerate(m)?;
    let r = a.pow(euler_phi(m));
    if !is_invariant(r) {
        return Err(Error::Inconsistent(format!(
            "{}^phi mod {m} = {} is not an invariant",
            a.value(),
            r.value()
        )));
    }
    Ok(r)
}

/// Product of the prime-power components of `m` whose prime divides `a`.
pub fn support_of(a: Residue) -> u64 {
    a.modulus()
        .factorize()
        .prime_powers()
        .filter(|&(p, _, _)| a.value().is_multiple_of(p))
        .map(|(_, _, q)| q)
        .product()
}

/// The invariant `a^φ(m)` should land on, computed by CRT without exponentiation.
pub fn expected_idempotent(a: Residue) -> Result<Residue> {
    let m = a.modulus();
    require_nondegenerate(m)?;
    let f = m.factorize();
    let phi = phi_from(&f);
    let mut system = Vec::with_capacity(f.omega());
    for (p, k, q) in f.prime_powers() {
        if a.value().is_multiple_of(p) {
            // p^k | a^phi needs phi >= k, which phi(p^k) >= k guarantees
            if phi < u64::from(k) {
                return Err(Error::Inconsistent(format!("phi({m}) = {phi} < {k}")));
            }
            system.push((0, q));
        } else {
            system.push((1 % q, q));
        }
    }
    let r = crt_combine(&system)?;
    Ok(Residue::reduce(r.value(), m))
}

pub fn euler_classification(m: Modulus) -> Result<EulerClassification> {
    require_nondegenerate(m)?;
    let f = m.factorize();
    let components: Vec<u64> = f.prime_powers().map(|(_, _, q)| q).collect();
    let mut classes: Vec<EulerClass> = (0u32..1 << components.len())
        .map(|mask| {
            let mut support = 1;
            let system: Vec<(u64, u64)> = components
                .iter()
                .enumerate()
                .map(|(j, &q)| {
                    if mask >> j & 1 == 1 {
                        support *= q;
                        (0, q)
                    } else {
                        (1, q)
                    }
                })
                .collect();
            let r = crt_combine(&system).expect("components are coprime");
            EulerClass { support, idempotent: Residue::reduce(r.value(), m) }
        })
        .collect();
    classes.sort_unstable_by_key(|c| c.support);
    Ok(EulerClassification { modulus: m, phi: phi_from(&f), classes })
}

/// Exhaustively compares `a^φ(m)` with the CRT prediction for every `a` in `[0, m)`.
pub fn verify_generalization(m: Modulus) -> Result<bool> {
    verify_generalization_with_bound(m, DEFAULT_ORACLE_BOUND)
}

pub fn verify_generalization_with_bound(m: Modulus, bound: u64) -> Result<bool> {
    if m.get() > bound {
        return Err(Error::AboveOracleBound { m: m.get(), bound });
    }
    require_nondegenerate(m)?;
    for a in m.residues() {
        match generalized_euler_residue(a) {
            Ok(r) if r == expected_idempotent(a)? => {}
            Ok(_) | Err(Error::Inconsistent(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

fn require_unitary_divisor(a: u64, m: u64) -> Result<u64> {
    if a == 0 || !m.is_multiple_of(a) {
        return Err(Error::InvalidArgument(format!("{a} does not divide {m}")));
    }
    let b = m / a;
    if gcd(a, b) != 1 {
        return Err(Error::InvalidArgument(format!(
            "{a} and {m}/{a} = {b} are not coprime"
        )));
    }
    Ok(b)
}

/// Checks `a^(s·φ(m) + 1) ≡ a` for a unitary divisor `a` of `m`.
pub fn multiplier_exponent_check(a: Residue, s: u64) -> Result<bool> {
    let m = a.modulus();
    require_unitary_divisor(a.value(), m.get())?;
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    let exp = s
        .checked_mul(euler_phi(m))
        .and_then(|e| e.checked_add(1))
        .ok_or(Error::Overflow("s * phi + 1"))?;
    Ok(a.pow(exp) == a)
}

/// Multiplication table of the multiples `a·k` with `k` coprime to `m / a`.
///
/// These form a group of order `φ(m / a)` whose identity is the invariant
/// divisible by `a` and whose "minus one" is the matching anti-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupTable {
    pub modulus: Modulus,
    pub generator_divisor: u64,
    pub elements: Vec<Residue>,
    pub table: Vec<Vec<Residue>>,
    pub identity: Residue,
    pub anti_identity: Residue,
    pub inverses: BTreeMap<u64, u64>,
}

impl SubgroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse_of(&self, x: u64) -> Option<u64> {
        self.inverses.get(&x).copied()
    }

    pub fn contains(&self, x: Residue) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `a, a², a³, …` up to (not including) the first repeat of `a`.
    pub fn generator_powers(&self) -> Vec<Residue> {
        let a = self.modulus.reduce(self.generator_divisor);
        let mut out = vec![a];
        let mut x = a.mul(a);
        while x != a {
            out.push(x);
            x = x.mul(a);
        }
        out
    }
}

pub fn subgroup_table(m: Modulus, a: u64) -> Result<SubgroupTable> {
    let mv = m.get();
    if a <= 1 || a >= mv {
        return Err(Error::InvalidArgument(format!("need 1 < a < m, got a = {a}, m = {mv}")));
    }
    let b = require_unitary_divisor(a, mv)?;
    let order = euler_phi(Modulus::new(b)?);
    if order > TABLE_BOUND as u64 {
        return Err(Error::TableTooLarge { order, bound: TABLE_BOUND as u64 });
    }
    let mut elements: Vec<Residue> = (1..b)
        .filter(|&k| gcd(k, b) == 1)
        .map(|k| m.reduce(a * k))
        .collect();
    elements.sort_unstable();

    let table: Vec<Vec<Residue>> = elements
        .iter()
        .map(|&x| elements.iter().map(|&y| x.mul(y)).collect())
        .collect();

    let identities: Vec<Residue> = elements
        .iter()
        .copied()
        .filter(|&e| elements.iter().all(|&x| e.mul(x) == x))
        .collect();
    let identity = match identities.as_slice() {
        [e] => *e,
        other => {
            return Err(Error::Inconsistent(format!("{} identities found", other.len())));
        }
    };
    let predicted = crt_combine(&[(0, a), (1 % b, b)])?;
    if predicted.value() != identity.value() {
        return Err(Error::Inconsistent(format!(
            "identity {} differs from the invariant {} divisible by {a}",
            identity.value(),
            predicted.value()
        )));
    }
    let anti_identity = identity.neg();

    let mut inverses = BTreeMap::new();
    for (i, &x) in elements.iter().enumerate() {
        let found: Vec<Residue> = elements
            .iter()
            .zip(&table[i])
            .filter(|(_, &p)| p == identity)
            .map(|(&y, _)| y)
            .collect();
        match found.as_slice() {
            [y] => {
                inverses.insert(x.value(), y.value());
            }
            other => {
                return Err(Error::Inconsistent(format!(
                    "{} has {} inverses",
                    x.value(),
                    other.len()
                )));
            }
        }
    }

    Ok(SubgroupTable {
        modulus: m,
        generator_divisor: a,
        elements,
        table,
        identity,
        anti_identity,
        inverses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mod_pow;

    fn modulus(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    fn r(v: u64, m: u64) -> Residue {
        modulus(m).residue(v).unwrap()
    }

    fn brute_phi(m: u64) -> u64 {
        (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(modulus(105)), 48);
        assert_eq!(euler_phi(modulus(561)), 320);
        assert_eq!(euler_phi(modulus(7)), 6);
        assert_eq!(euler_phi(modulus(1)), 1);
        for m in 1..=2000 {
            assert_eq!(euler_phi(modulus(m)), brute_phi(m), "phi({m})");
        }
    }

    #[test]
    fn generalized_residue_examples() {
        assert_eq!(generalized_euler_residue(r(3, 105)).unwrap().value(), 36);
        assert_eq!(generalized_euler_residue(r(35, 105)).unwrap().value(), 70);
        assert_eq!(generalized_euler_residue(r(2, 105)).unwrap().value(), 1);
        assert!(generalized_euler_residue(r(0, 1)).is_err());
    }

    #[test]
    fn expected_idempotent_examples() {
        assert_eq!(expected_idempotent(r(6, 105)).unwrap().value(), 36);
        assert_eq!(mod_pow(6, 48, 105), 36);
        assert_eq!(expected_idempotent(r(15, 105)).unwrap().value(), 15);
        assert_eq!(expected_idempotent(r(4, 105)).unwrap().value(), 1);
        assert_eq!(expected_idempotent(r(0, 105)).unwrap().value(), 0);
        assert_eq!(support_of(r(6, 105)), 3);
        assert_eq!(support_of(r(0, 105)), 105);
    }

    #[test]
    fn classification_of_105() {
        let c = euler_classification(modulus(105)).unwrap();
        assert_eq!(c.phi, 48);
        let rows: Vec<(u64, u64)> =
            c.classes.iter().map(|k| (k.support, k.idempotent.value())).collect();
        assert_eq!(
            rows,
            vec![(1, 1), (3, 36), (5, 85), (7, 91), (15, 15), (21, 21), (35, 70), (105, 0)]
        );
    }

    #[test]
    fn verify_small_moduli() {
        assert!(verify_generalization(modulus(105)).unwrap());
        assert!(verify_generalization(modulus(2)).unwrap());
        for m in 2..=300 {
            assert!(verify_generalization(modulus(m)).unwrap(), "m = {m}");
        }
        assert!(matches!(
            verify_generalization_with_bound(modulus(500), 100),
            Err(Error::AboveOracleBound { .. })
        ));
    }

    #[test]
    fn multiplier_exponent_examples() {
        assert_eq!(mod_pow(5, 25, 35), 5);
        assert!(multiplier_exponent_check(r(5, 35), 1).unwrap());
        assert!(multiplier_exponent_check(r(1, 35), 7).unwrap());
        assert!(multiplier_exponent_check(r(15, 105), 2).unwrap());
        assert!(multiplier_exponent_check(r(6, 35), 1).is_err());
        // 2 and 12/2 = 6 share the prime 2
        assert!(multiplier_exponent_check(r(2, 12), 1).is_err());
        assert!(multiplier_exponent_check(r(0, 12), 1).is_err());
    }

    #[test]
    fn table_35_5() {
        let t = subgroup_table(modulus(35), 5).unwrap();
        let elems: Vec<u64> = t.elements.iter().map(|x| x.value()).collect();
        assert_eq!(elems, vec![5, 10, 15, 20, 25, 30]);
        let first: Vec<u64> = t.table[0].iter().map(|x| x.value()).collect();
        assert_eq!(first, vec![25, 15, 5, 30, 20, 10]);
        assert_eq!(t.identity.value(), 15);
        assert_eq!(t.anti_identity.value(), 20);
        assert_eq!(t.inverse_of(5), Some(10));
        assert_eq!(t.generator_powers().len(), 6);
    }

    #[test]
    fn table_15_3() {
        let t = subgroup_table(modulus(15), 3).unwrap();
        let elems: Vec<u64> = t.elements.iter().map(|x| x.value()).collect();
        assert_eq!(elems, vec![3, 6, 9, 12]);
        assert_eq!(t.identity.value(), 6);
        assert_eq!(t.anti_identity.value(), 9);
    }

    #[test]
    fn table_rejects_bad_divisors() {
        for (m, a) in [(35, 1), (35, 35), (35, 6), (12, 2), (36, 0)] {
            assert!(subgroup_table(modulus(m), a).is_err(), "({m}, {a})");
        }
    }

    #[test]
    fn non_primitive_generator() {
        // 4 has order 2 modulo 5, so its powers only cover half of the group
        let t = subgroup_table(modulus(20), 4).unwrap();
        let elems: Vec<u64> = t.elements.iter().map(|x| x.value()).collect();
        assert_eq!(elems, vec![4, 8, 12, 16]);
        assert_eq!(t.identity.value(), 16);
        let powers: Vec<u64> = t.generator_powers().iter().map(|x| x.value()).collect();
        assert_eq!(powers, vec![4, 16]);
        assert!(t.generator_powers().iter().all(|&x| t.contains(x)));
    }
}
