//! Rational-integer helpers: trial-division factoring, prime scans, p-adic
//! valuations and square roots modulo small primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Factor `|n|` (n ≠ 0) by trial division. Every prime factor must be at
/// most `bound`, otherwise the value is reported as unfactorable.
pub fn factor(n: &BigInt, bound: u64) -> Result<Vec<(BigInt, u32)>> {
    assert!(!n.is_zero(), "factor(0)");
    let mut m = n.abs();
    let mut out = Vec::new();
    if let Some(mut v) = m.to_u128() {
        let mut p: u128 = 2;
        while p * p <= v && p <= bound as u128 {
            if v % p == 0 {
                let mut e = 0;
                while v % p == 0 {
                    v /= p;
                    e += 1;
                }
                out.push((BigInt::from(p), e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if v > 1 {
            if v > bound as u128 {
                return Err(Error::FactorBound {
                    value: n.abs(),
                    bound,
                });
            }
            out.push((BigInt::from(v), 1));
        }
        return Ok(out);
    }
    let mut p = BigInt::from(2);
    let b = BigInt::from(bound);
    while &p * &p <= m && p <= b {
        if m.is_multiple_of(&p) {
            let mut e = 0;
            while m.is_multiple_of(&p) {
                m /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        if m > b {
            return Err(Error::FactorBound {
                value: n.abs(),
                bound,
            });
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// Exponent of the prime `p` in `n` (n ≠ 0).
pub fn padic(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero(), "valuation of 0");
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// Rational primes in increasing order, up to `bound` inclusive.
pub fn primes_up_to(bound: u64) -> impl Iterator<Item = u64> {
    (2..=bound).filter(|&n| is_prime_u64(n))
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mm = m as u128;
    let mut r = 1u128 % mm;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    r as u64
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    let a = a.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p");
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Smallest `r ≥ 0` with `r² ≡ a (mod p)`, if any.
pub fn sqrt_mod(a: &BigInt, p: u64) -> Option<u64> {
    let a = a.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p");
    (0..p).find(|&r| (r as u128 * r as u128 % p as u128) as u64 == a)
}
