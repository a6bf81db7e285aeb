//! Moduli, factorizations and modular arithmetic helpers for `Z/n`.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A prime power `p^k` appearing in a factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
}

impl PrimePower {
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

/// The ring `Z/n` together with the factorization of `n`.
///
/// Primes are strictly increasing, exponents are at least one and the
/// product of the prime powers is `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    n: u64,
    factors: Vec<PrimePower>,
}

impl RingSpec {
    pub fn new(n: u64) -> Result<Self> {
        check_modulus(n)?;
        Ok(RingSpec {
            n,
            factors: factorize(n),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Returns the single factor if `n` is a prime power.
    pub fn as_prime_power(&self) -> Option<PrimePower> {
        match self.factors.as_slice() {
            [pp] => Some(*pp),
            _ => None,
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|pp| pp.k).max().unwrap_or(1)
    }

    /// `"Z/n"`.
    pub fn label(&self) -> String {
        format!("Z/{}", self.n)
    }

    /// Factorization in the form `2^3*3`.
    pub fn factorization_text(&self) -> String {
        self.factors
            .iter()
            .map(|pp| pp.to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn check_modulus(n: u64) -> Result<()> {
    if (2..=MAX_MODULUS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(n))
    }
}

/// Trial-division factorization; `n >= 1`.
pub fn factorize(mut n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push(PrimePower { p, k });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(PrimePower { p: n, k: 1 });
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n).as_slice(), [PrimePower { k: 1, .. }])
}

/// Checks that `p` is prime and that `p^k` is an admissible modulus.
pub fn check_prime_power(p: u64, k: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidParameters(
            "exponent must be at least 1".into(),
        ));
    }
    let n = p
        .checked_pow(k)
        .filter(|&n| n <= MAX_MODULUS)
        .ok_or(Error::InvalidModulus(u64::MAX))?;
    Ok(n)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `n` when `gcd(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n as i128) as u64)
}

/// Exponent of `p` in `a` modulo `p^k`; zero maps to `k`.
pub fn valuation(mut a: u64, p: u64, k: u32) -> u32 {
    if a == 0 {
        return k;
    }
    let mut v = 0;
    while a.is_multiple_of(p) && v < k {
        a /= p;
        v += 1;
    }
    v
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Returns whether `order < n!` without materializing `n!` when it is far larger.
pub fn is_below_factorial(order: &BigUint, n: u64) -> bool {
    let mut f = BigUint::from(1u32);
    for i in 2..=n {
        f *= i;
        if &f > order {
            return true;
        }
    }
    &f > order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_reconstructs() {
        for n in 2..2000u64 {
            let fs = factorize(n);
            assert_eq!(fs.iter().map(|pp| pp.modulus()).product::<u64>(), n);
            assert!(fs.windows(2).all(|w| w[0].p < w[1].p));
            assert!(fs.iter().all(|pp| pp.k >= 1 && is_prime(pp.p)));
        }
        assert_eq!(
            RingSpec::new(360).unwrap().factorization_text(),
            "2^3*3^2*5"
        );
    }

    #[test]
    fn modulus_bounds() {
        assert!(RingSpec::new(1).is_err());
        assert!(RingSpec::new(MAX_MODULUS + 1).is_err());
        assert!(RingSpec::new(MAX_MODULUS).is_ok());
    }

    #[test]
    fn inverses_and_valuations() {
        assert_eq!(inv_mod(3, 8), Some(3));
        assert_eq!(inv_mod(2, 8), None);
        assert_eq!(valuation(18, 3, 4), 2);
        assert_eq!(valuation(0, 3, 4), 4);
        assert!(is_below_factorial(&BigUint::from(240u32), 10));
        assert!(!is_below_factorial(&BigUint::from(6u32), 3));
    }
}
