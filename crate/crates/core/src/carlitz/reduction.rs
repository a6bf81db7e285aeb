use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::ResiduePoly;

/// The permutation of `Z/m` induced by `f` on `Z/N`, where `m` divides `N`.
///
/// Fails with [`Error::NotReducible`] when `f` does not map residue classes
/// modulo `m` to residue classes, or when the induced map is not bijective.
pub fn reduce_permutation(f: &Permutation, m: u64) -> Result<Permutation> {
    let n = f.degree() as u64;
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::InvalidParameters(format!("{m} does not divide {n}")));
    }
    let mut images: Vec<Option<u32>> = vec![None; m as usize];
    for x in 0..n {
        let y = (f.apply(x as u32) as u64 % m) as u32;
        let slot = &mut images[(x % m) as usize];
        match *slot {
            Some(prev) if prev != y => return Err(Error::NotReducible { modulus: m }),
            _ => *slot = Some(y),
        }
    }
    let images: Vec<u32> = images
        .into_iter()
        .map(|v| v.expect("every class visited"))
        .collect();
    Permutation::from_images(images).map_err(|_| Error::NotReducible { modulus: m })
}

/// Replaces a permutation polynomial `f` by `f(x + r)` where `f(r) = 0`,
/// which has zero constant term and differs from `f` by a translation.
pub fn normalize_generator(f: &ResiduePoly) -> Result<ResiduePoly> {
    let n = f.modulus();
    let table = f.to_table();
    if !table.is_bijective() {
        return Err(Error::NotPermutationPolynomial(n));
    }
    let r = table
        .images()
        .iter()
        .position(|&v| v == 0)
        .expect("bijection hits zero") as u64;
    Ok(f.shift(r))
}
