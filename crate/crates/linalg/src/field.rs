//! Scalar arithmetic in GF(p) on residues stored as `u32`.

use crate::error::{LinalgError, Result};

/// Deterministic primality test by trial division (moduli are small).
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `Ok(p)` when `p` is prime.
pub fn check_prime(p: u32) -> Result<u32> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(LinalgError::NotPrime(p))
    }
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    add(p, a, neg(p, b))
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

/// Multiplicative inverse of a non-zero residue (Fermat).
pub fn inv(p: u32, a: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero in GF({p})");
    pow(p, a, p - 2)
}

pub fn pow(p: u32, mut a: u32, mut e: u32) -> u32 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(p, r, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    r
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce_i64(p: u32, v: i64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Smallest generator of the multiplicative group of GF(p).
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(p, g, order / q) != 1))
        .expect("every prime field has a primitive root")
}
