use super::modular::mul_mod;

// The first twelve primes form a deterministic Miller-Rabin witness set for
// every n < 3.3e24, which covers the whole u64 range.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test over the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }

    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = super::mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn examples() {
        assert!(is_prime(2));
        assert!(!is_prime(561));
        assert!(!is_prime(15));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..200_000u64 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to the first few prime bases
        for n in [2047u64, 1_373_653, 25_326_001, 3_215_031_751, 3_825_123_056_546_413_051] {
            if n < 1 << 40 {
                assert!(!trial_division(n));
            }
            assert!(!is_prime(n), "{n}");
        }
        // 3825123056546413051 = 149491 * 747451 * 34233211
        assert_eq!(149_491u64 * 747_451 * 34_233_211, 3_825_123_056_546_413_051);
        assert!(is_prime(u64::MAX - 58));
        assert!(!is_prime(u64::MAX));
        assert!(is_prime(1_000_000_007));
    }
}
