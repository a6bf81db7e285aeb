//! Evaluation tables of functions `Z/n -> Z/n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::check_modulus;

/// The function `x -> images[x]` on `Z/n`. Entry `x` lies in `[0, n)` and the
/// table has exactly `n` entries. Function equality is table equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctionTable {
    modulus: u64,
    images: Vec<u32>,
}

impl FunctionTable {
    pub fn new(modulus: u64, images: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        if images.len() as u64 != modulus {
            return Err(Error::SizeMismatch {
                left: images.len(),
                right: modulus as usize,
            });
        }
        if let Some(&v) = images.iter().find(|&&v| v as u64 >= modulus) {
            return Err(Error::OutOfRange {
                value: v as u64,
                modulus,
            });
        }
        Ok(FunctionTable { modulus, images })
    }

    pub fn from_fn(modulus: u64, mut f: impl FnMut(u64) -> u64) -> Result<Self> {
        check_modulus(modulus)?;
        let images = (0..modulus).map(|x| (f(x) % modulus) as u32).collect();
        Ok(FunctionTable { modulus, images })
    }

    pub(crate) fn from_raw(modulus: u64, images: Vec<u32>) -> Self {
        debug_assert_eq!(images.len() as u64, modulus);
        FunctionTable { modulus, images }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn get(&self, x: u64) -> u64 {
        self.images[(x % self.modulus) as usize] as u64
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_images(self.images.clone())
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }
}

impl From<&Permutation> for FunctionTable {
    fn from(p: &Permutation) -> Self {
        FunctionTable::from_raw(p.degree() as u64, p.images().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FunctionTable::new(4, vec![0, 1, 2]).is_err());
        assert!(FunctionTable::new(4, vec![0, 1, 2, 4]).is_err());
        let t = FunctionTable::new(4, vec![0, 1, 0, 1]).unwrap();
        assert!(!t.is_bijective());
        assert!(t.to_permutation().is_err());
        let s = FunctionTable::new(4, vec![1, 2, 3, 0]).unwrap();
        assert!(s.is_bijective());
        assert_eq!(FunctionTable::from(&s.to_permutation().unwrap()), s);
    }
}
