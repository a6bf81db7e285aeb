use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{check_prime_power, mul_mod};
use crate::table::FunctionTable;

/// Expansion data for a polynomial function on `Z/p^k`.
///
/// Row `x` (for `x` in `[0, p)`) holds `c[x][0] = f(x)` in `Z/p^k` and, for
/// `i >= 1`, the coefficient `c[x][i]` of `(mp)^i` in
///
/// ```text
/// f(x + mp) = c[x][0] + (mp) c[x][1] + ... + (mp)^(k-1) c[x][k-1]   (mod p^k)
/// ```
///
/// stored modulo `p^(k-i)`, since higher digits are annihilated by `(mp)^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "JetRepr", into = "JetRepr")]
pub struct CarlitzJet {
    p: u64,
    k: u32,
    c: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct JetRepr {
    p: u64,
    k: u32,
    c: Vec<Vec<u64>>,
}

impl TryFrom<JetRepr> for CarlitzJet {
    type Error = Error;

    fn try_from(r: JetRepr) -> Result<Self> {
        CarlitzJet::new(r.p, r.k, r.c)
    }
}

impl From<CarlitzJet> for JetRepr {
    fn from(j: CarlitzJet) -> Self {
        JetRepr {
            p: j.p,
            k: j.k,
            c: j.c,
        }
    }
}

/// Modulus of level `i` in a jet over `Z/p^k`.
pub fn level_modulus(p: u64, k: u32, i: u32) -> u64 {
    if i == 0 {
        p.pow(k)
    } else {
        p.pow(k - i)
    }
}

impl CarlitzJet {
    pub fn new(p: u64, k: u32, c: Vec<Vec<u64>>) -> Result<Self> {
        check_prime_power(p, k)?;
        if c.len() as u64 != p {
            return Err(Error::SizeMismatch {
                left: c.len(),
                right: p as usize,
            });
        }
        for row in &c {
            if row.len() != k as usize {
                return Err(Error::SizeMismatch {
                    left: row.len(),
                    right: k as usize,
                });
            }
            for (i, &v) in row.iter().enumerate() {
                let modulus = level_modulus(p, k, i as u32);
                if v >= modulus {
                    return Err(Error::OutOfRange { value: v, modulus });
                }
            }
        }
        Ok(CarlitzJet { p, k, c })
    }

    pub(crate) fn from_rows_unchecked(p: u64, k: u32, c: Vec<Vec<u64>>) -> Self {
        CarlitzJet { p, k, c }
    }

    /// The jet of the identity function.
    pub fn identity(p: u64, k: u32) -> Result<Self> {
        check_prime_power(p, k)?;
        let c = (0..p)
            .map(|x| {
                let mut row = vec![0; k as usize];
                row[0] = x;
                if k > 1 {
                    row[1] = 1;
                }
                row
            })
            .collect();
        Ok(CarlitzJet { p, k, c })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.c
    }

    pub fn coeff(&self, x: u64, i: u32) -> u64 {
        self.c[x as usize][i as usize]
    }

    /// Evaluates the expansion on all of `Z/p^k`.
    pub fn extend(&self) -> FunctionTable {
        let n = self.modulus();
        let mut images = vec![0u32; n as usize];
        for m in 0..n / self.p {
            let step = m * self.p;
            for (x, row) in self.c.iter().enumerate() {
                // Horner in (mp)
                let v = row
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| (mul_mod(acc, step, n) + c) % n);
                images[x + step as usize] = v as u32;
            }
        }
        FunctionTable::from_raw(n, images)
    }

    /// Values pairwise distinct mod `p`, and (for `k >= 2`) every first-order
    /// coefficient a unit.
    pub fn is_permutation(&self) -> bool {
        let p = self.p;
        let mut seen = vec![false; p as usize];
        let distinct = self
            .c
            .iter()
            .all(|row| !std::mem::replace(&mut seen[(row[0] % p) as usize], true));
        distinct && (self.k == 1 || self.c.iter().all(|row| row[1] % p != 0))
    }
}
