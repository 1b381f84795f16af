//! Small arithmetic helpers: gcd, primality by trial division, Mobius,
//! Euler phi, and the Legendre symbol.

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division primality check for odd-prime validation of moduli.
pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Mobius function; 0 for squareful n.
pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::LimitTooSmall { got: 0, min: 1 });
    }
    let mut n = n;
    let mut factors = 0u32;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return Ok(0);
            }
            factors += 1;
        }
        d += 1;
    }
    if n > 1 {
        factors += 1;
    }
    Ok(if factors.is_multiple_of(2) { 1 } else { -1 })
}

/// Euler's totient by trial factorization.
pub fn euler_phi(q: u64) -> u64 {
    let mut n = q;
    let mut phi = q;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            phi -= phi / d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a/p)` by Euler's criterion; `p` must be an odd prime.
pub fn legendre(a: i64, p: u64) -> Result<i64> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Ok(0);
    }
    let r = mod_pow(a, (p - 1) / 2, p);
    Ok(if r == 1 { 1 } else { -1 })
}
