use num_bigint::BigUint;

use super::enumerate::{enumerate_polynomial_functions, Gates};
use crate::error::{Error, Result};
use crate::perm::{Permutation, StabChain};

/// Every bijective polynomial function on `Z/p^k`, as permutations in sorted
/// table order. This set generates (and equals) `Pgr(Z/p^k)`.
pub fn pgr_generators(p: u64, k: u32, gates: &Gates) -> Result<Vec<Permutation>> {
    let census = enumerate_polynomial_functions(p, k, gates)?;
    census
        .bijective
        .iter()
        .map(|t| t.to_permutation())
        .collect()
}

/// Best-effort small generating set: keep each candidate that enlarges the
/// group built so far, then drop any kept element the others already cover.
pub fn small_generating_set(candidates: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = candidates.first() else {
        return Vec::new();
    };
    let degree = first.degree();
    let mut chain = StabChain::new(degree);
    let mut kept: Vec<Permutation> = candidates
        .iter()
        .filter(|c| chain.add_generator(c))
        .cloned()
        .collect();
    let target = chain.order();
    let mut i = 0;
    while i < kept.len() {
        let others = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g);
        if kept.len() > 1 && StabChain::from_generators(degree, others).order() == target {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    if kept.is_empty() {
        kept.push(Permutation::identity(degree));
    }
    kept
}

/// Order of the group generated by `gens` via a stabilizer chain only.
pub fn chain_order(gens: &[Permutation]) -> BigUint {
    match gens.first() {
        Some(g) => StabChain::from_generators(g.degree(), gens).order(),
        None => BigUint::from(1u32),
    }
}

/// Lifts a permutation of `Z/q` to `Z/n = Z/q x Z/(n/q)` (coprime parts),
/// acting trivially on the second coordinate.
pub fn crt_lift(f: &Permutation, n: u64) -> Result<Permutation> {
    let q = f.degree() as u64;
    if q == 0 || !n.is_multiple_of(q) || gcd(q, n / q) != 1 {
        return Err(Error::InvalidParameters(format!(
            "Z/{q} is not a coprime factor of Z/{n}"
        )));
    }
    let images = (0..n)
        .map(|x| {
            let target = f.apply((x % q) as u32) as u64;
            // y = target (mod q), y = x (mod n/q)
            let r = n / q;
            let mut y = x % r;
            while y % q != target {
                y += r;
            }
            y as u32
        })
        .collect();
    Permutation::from_images(images)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    #[test]
    fn generator_sets() {
        let g = Gates::default();
        let z4 = pgr_generators(2, 2, &g).unwrap();
        assert_eq!(z4.len(), 8);
        assert_eq!(chain_order(&z4), BigUint::from(8u32));
        let small = small_generating_set(&z4);
        assert!(small.len() <= 2);
        assert_eq!(chain_order(&small), BigUint::from(8u32));
        let z8 = pgr_generators(2, 3, &g).unwrap();
        assert_eq!(
            chain_order(&small_generating_set(&z8)),
            BigUint::from(128u32)
        );
    }

    #[test]
    fn crt_lift_is_a_homomorphism_into_the_product() {
        let c3 = Permutation::parse_cycles("(0,1,2)", 3).unwrap();
        let t2 = Permutation::parse_cycles("(0,1)", 2).unwrap();
        let a = crt_lift(&c3, 6).unwrap();
        let b = crt_lift(&t2, 6).unwrap();
        for x in 0..6u32 {
            assert_eq!(a.apply(x) % 3, c3.apply(x % 3));
            assert_eq!(a.apply(x) % 2, x % 2);
        }
        assert_eq!(a.then(&b), b.then(&a));
        let g = PermGroup::generate(&[a, b]).unwrap();
        assert_eq!(g.order_u64(), Some(6));
        assert!(crt_lift(&c3, 9).is_err());
    }
}
