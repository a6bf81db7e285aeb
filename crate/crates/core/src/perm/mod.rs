//! Permutations of `{0, ..., N-1}` and the groups they generate.
//!
//! Composition is left to right throughout: `f.then(&g)` (also
//! [`compose`]) first applies `f`, then `g`, so `(f.then(g))(x) = g(f(x))`.
//! Group products, conjugations and the triple law of the `Z/p^2`
//! structure map all follow this one convention.

mod chain;
mod cycles;
mod group;
mod recognize;

pub use chain::StabChain;
pub use group::{coset_action, normal_closure_check, GroupOptions, NormalityReport, PermGroup};
pub use recognize::{element_order_multiset, recognize_small_group, Recognition, SmallGroup};

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `[0, N)` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let slot = seen.get_mut(v as usize).ok_or(Error::NotPermutation)?;
            if std::mem::replace(slot, true) {
                return Err(Error::NotPermutation);
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Number of points `N`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` first, then `g`.
    pub fn then(&self, g: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), g.degree());
        Permutation {
            images: self.images.iter().map(|&x| g.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g^-1 h g` in the left-to-right convention, i.e. `x -> g(h(g^-1(x)))`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// element, ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    ///
    /// Panics if the order does not fit in a `u64`.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let len = c.len() as u64;
            let g = gcd(acc, len);
            (acc / g)
                .checked_mul(len)
                .expect("permutation order overflows u64")
        })
    }

    /// Cycle notation; the identity prints as `e`.
    pub fn format_cycles(&self) -> String {
        cycles::format(self)
    }

    /// Parses disjoint cycle notation such as `(0,5)(1,13,7)` on `degree` points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        cycles::parse(text, degree)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `f` first, then `g`; fails on differing degrees.
pub fn compose(f: &Permutation, g: &Permutation) -> Result<Permutation> {
    if f.degree() != g.degree() {
        return Err(Error::SizeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    Ok(f.then(g))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.format_cycles())
    }
}
