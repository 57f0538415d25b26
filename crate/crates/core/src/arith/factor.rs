use super::modular::{add_mod, gcd, mul_mod};
use super::prime::is_prime;
use super::Factorization;
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 10_000;

/// Complete prime factorization of `n >= 1`.
///
/// Trial division removes every prime below 10^4; the remaining cofactor is
/// split with Brent's variant of Pollard's rho until all parts are prime.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut primes = Vec::new();
    let mut rest = n;

    while rest.is_multiple_of(2) {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3;
    while d < TRIAL_LIMIT && d * d <= rest {
        while rest.is_multiple_of(d) {
            primes.push(d);
            rest /= d;
        }
        d += 2;
    }

    if rest > 1 {
        if rest < TRIAL_LIMIT * TRIAL_LIMIT {
            // no factor below the trial limit and rest < limit^2
            primes.push(rest);
        } else {
            split_into(rest, &mut primes);
        }
    }

    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { factors })
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Returns a non-trivial divisor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    if let Some(r) = exact_square_root(n) {
        return r;
    }
    // Deterministic sequence of polynomial constants x^2 + c.
    for c in 1u64.. {
        if let Some(d) = brent_cycle(n, c) {
            return d;
        }
    }
    unreachable!("some polynomial constant always splits a composite")
}

fn brent_cycle(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| add_mod(mul_mod(x, x, n), c, n);

    let mut y = 2u64;
    let mut x = y;
    let mut ys = y;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;

    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }

    if g == n {
        // batch overshot: replay one step at a time
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn exact_square_root(n: u64) -> Option<u64> {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64) -> Vec<(u64, u32)> {
        factorize(n).unwrap().factors().to_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(pairs(561), vec![(3, 1), (11, 1), (17, 1)]);
        assert_eq!(pairs(105), vec![(3, 1), (5, 1), (7, 1)]);
        assert_eq!(pairs(49), vec![(7, 2)]);
        assert_eq!(pairs(1), vec![]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn large_semiprimes() {
        assert_eq!(
            pairs(1_470_626_929_934_143_021),
            vec![(1_206_429_347, 1), (1_218_991_343, 1)]
        );
        let p = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(pairs(p * p), vec![(p, 2)]);
        assert_eq!(pairs(u64::MAX), vec![(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6_700_417, 1)]);
        assert_eq!(pairs(1 << 63), vec![(2, 63)]);
    }

    #[test]
    fn carmichael_products() {
        // 3825123056546413051 = 149491 * 747451 * 34233211
        assert_eq!(
            pairs(3_825_123_056_546_413_051),
            vec![(149_491, 1), (747_451, 1), (34_233_211, 1)]
        );
    }

    #[test]
    fn recomposes_up_to_limit() {
        for n in 1..=200_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value().unwrap(), n);
            assert!(f.factors().iter().all(|&(p, _)| is_prime(p)));
        }
    }
}
