use super::{Modulus, Residue};
use crate::error::{Error, Result};

pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// Returns `(g, u, v)` with `u*x + v*y == g == gcd(x, y)`.
pub fn extended_gcd(x: u64, y: u64) -> Result<(u64, i128, i128)> {
    if x == 0 && y == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (x as i128, y as i128);
    let (mut u0, mut u1) = (1i128, 0i128);
    let (mut v0, mut v1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (u0, u1) = (u1, u0 - q * u1);
        (v0, v1) = (v1, v0 - q * v1);
    }
    Ok((r0 as u64, u0, v0))
}

pub fn lcm(x: u64, y: u64) -> Result<u64> {
    if x == 0 || y == 0 {
        return Ok(0);
    }
    (x / gcd(x, y))
        .checked_mul(y)
        .ok_or(Error::Overflow("lcm"))
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    let (a, b) = (a % m, b % m);
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// `base^exp mod m` by square-and-multiply. `m` must be non-zero.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m != 0);
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, u, _) = extended_gcd(a % m, m).ok()?;
    if g != 1 {
        return None;
    }
    Some(u.rem_euclid(m as i128) as u64)
}

/// Solves the system `x ≡ r_i (mod n_i)` for pairwise coprime `n_i`.
///
/// The empty system is the degenerate ring: `0 mod 1`.
pub fn crt_combine(congruences: &[(u64, u64)]) -> Result<Residue> {
    for &(r, n) in congruences {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if r >= n {
            return Err(Error::NonCanonical { value: r, modulus: n });
        }
    }
    for (i, &(_, a)) in congruences.iter().enumerate() {
        for &(_, b) in &congruences[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(Error::NonCoprimeModuli(a, b));
            }
        }
    }

    let mut x = 0u64;
    let mut product = 1u64;
    for &(r, n) in congruences {
        let next = product
            .checked_mul(n)
            .ok_or(Error::Overflow("crt_combine modulus product"))?;
        // x + product * t ≡ r (mod n)
        let inv = mod_inverse(product % n, n).expect("coprimality checked above");
        let t = mul_mod(sub_mod(r, x % n, n), inv, n);
        x = (x as u128 + product as u128 * t as u128) as u64;
        product = next;
    }
    Ok(Residue::reduce(x, Modulus::new(product)?))
}
