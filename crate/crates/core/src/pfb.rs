//! Upper bound for the polynomial function bound of `Z/n`.

use std::collections::HashMap;

use crate::error::Result;
use crate::ring::{mul_mod, RingSpec};

/// Largest `d >= 1` such that the power functions `x, x^2, ..., x^d` on `Z/n`
/// are pairwise distinct. Every polynomial function on `Z/n` then has a
/// representative of degree at most `d`.
///
/// The search stops at `n * (largest exponent) + 2`.
pub fn pfb_upper_bound(n: u64) -> Result<u64> {
    let ring = RingSpec::new(n)?;
    let cap = n * ring.max_exponent() as u64 + 2;
    let mut seen: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut power: Vec<u64> = (0..n).collect();
    let mut d = 1u64;
    loop {
        let key: Vec<u32> = power.iter().map(|&v| v as u32).collect();
        if seen.insert(key, d).is_some() {
            return Ok(d - 1);
        }
        if d == cap {
            return Ok(cap);
        }
        for (x, v) in power.iter_mut().enumerate() {
            *v = mul_mod(*v, x as u64, n);
        }
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reported_bounds() {
        assert_eq!(pfb_upper_bound(8).unwrap(), 4);
        assert_eq!(pfb_upper_bound(9).unwrap(), 7);
        assert_eq!(pfb_upper_bound(27).unwrap(), 20);
    }

    #[test]
    fn primes_give_p_minus_one() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(pfb_upper_bound(p).unwrap(), p - 1);
        }
    }
}
