use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::jet::{level_modulus, CarlitzJet};
use crate::error::{Error, Result};
use crate::ring::{check_prime_power, mul_mod};
use crate::table::FunctionTable;

/// Size limits for exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gates {
    /// Largest `p^k` for jet enumeration.
    pub max_ring: u64,
    /// Largest jet space for jet enumeration.
    pub max_jets: u64,
    /// Largest `p^k` for the `(p^k)!` fractal scan.
    pub max_scan_ring: u64,
}

impl Default for Gates {
    fn default() -> Self {
        Gates {
            max_ring: 32,
            max_jets: 1 << 26,
            max_scan_ring: 8,
        }
    }
}

impl Gates {
    pub fn with_max_jets(self, max_jets: u64) -> Self {
        Gates { max_jets, ..self }
    }

    /// Checks the enumeration gate for `Z/p^k`, returning the jet count.
    pub fn check_enumeration(&self, p: u64, k: u32) -> Result<u64> {
        let n = check_prime_power(p, k)?;
        let jets = jet_space_size(p, k);
        if n > self.max_ring {
            return Err(Error::GateExceeded(format!(
                "ring size {n} exceeds enumeration limit {}",
                self.max_ring
            )));
        }
        match jets.to_u64() {
            Some(j) if j <= self.max_jets => Ok(j),
            _ => Err(Error::GateExceeded(format!(
                "jet space {jets} exceeds limit {}",
                self.max_jets
            ))),
        }
    }
}

/// Number of jets over `Z/p^k`: `(p^k * p^(k-1) * ... * p)^p`.
pub fn jet_space_size(p: u64, k: u32) -> BigUint {
    let per_row_exp: u64 = (1..=k as u64).sum();
    BigUint::from(p).pow((per_row_exp * p) as u32)
}

/// Every polynomial function on `Z/p^k`, found by extending all jets.
#[derive(Clone, Debug)]
pub struct PolyFunctionCensus {
    pub p: u64,
    pub k: u32,
    pub jet_count: u64,
    /// Distinct tables, sorted.
    pub tables: Vec<FunctionTable>,
    /// The bijective subset of `tables`, sorted.
    pub bijective: Vec<FunctionTable>,
}

impl PolyFunctionCensus {
    /// Jets minus distinct tables.
    pub fn collisions(&self) -> u64 {
        self.jet_count - self.tables.len() as u64
    }
}

/// Enumerates all jets over `Z/p^k`, extends them and deduplicates the tables.
pub fn enumerate_polynomial_functions(p: u64, k: u32, gates: &Gates) -> Result<PolyFunctionCensus> {
    let jet_count = gates.check_enumeration(p, k)?;
    let n = p.pow(k);
    let fibers = (n / p) as usize;
    // radix of each digit: row x, level i
    let radices: Vec<u64> = (0..p)
        .flat_map(|_| (0..k).map(move |i| level_modulus(p, k, i)))
        .collect();
    // (mp)^i mod n, for every m and level
    let steps: Vec<Vec<u64>> = (0..fibers as u64)
        .map(|m| {
            let step = m * p;
            let mut acc = 1u64;
            (0..k)
                .map(|_| {
                    let v = acc;
                    acc = mul_mod(acc, step, n);
                    v
                })
                .collect()
        })
        .collect();

    let chunk = 1u64 << 14;
    let chunks = jet_count.div_ceil(chunk);
    let set: HashSet<Vec<u32>> = (0..chunks)
        .into_par_iter()
        .fold(HashSet::new, |mut set, ci| {
            let start = ci * chunk;
            let end = (start + chunk).min(jet_count);
            let mut digits = decode(start, &radices);
            let mut table = vec![0u32; n as usize];
            for _ in start..end {
                for x in 0..p as usize {
                    let row = &digits[x * k as usize..(x + 1) * k as usize];
                    for (m, pows) in steps.iter().enumerate() {
                        let v = row
                            .iter()
                            .zip(pows)
                            .fold(0u64, |acc, (&c, &s)| (acc + c * s) % n);
                        table[x + m * p as usize] = v as u32;
                    }
                }
                if !set.contains(table.as_slice()) {
                    set.insert(table.clone());
                }
                increment(&mut digits, &radices);
            }
            set
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });

    let mut tables: Vec<FunctionTable> = set
        .into_iter()
        .map(|images| FunctionTable::from_raw(n, images))
        .collect();
    tables.par_sort_unstable();
    let bijective = tables
        .iter()
        .filter(|t| t.is_bijective())
        .cloned()
        .collect();
    Ok(PolyFunctionCensus {
        p,
        k,
        jet_count,
        tables,
        bijective,
    })
}

/// Every jet over `Z/p^k`, in mixed-radix order (row 0, level 0 fastest).
pub fn jets(p: u64, k: u32, gates: &Gates) -> Result<impl Iterator<Item = CarlitzJet>> {
    let count = gates.check_enumeration(p, k)?;
    let radices: Vec<u64> = (0..p)
        .flat_map(|_| (0..k).map(move |i| level_modulus(p, k, i)))
        .collect();
    let mut digits = vec![0u64; radices.len()];
    Ok((0..count).map(move |_| {
        let rows = digits.chunks(k as usize).map(<[u64]>::to_vec).collect();
        increment(&mut digits, &radices);
        CarlitzJet::from_rows_unchecked(p, k, rows)
    }))
}

/// Mixed-radix digits of `index`, least significant first.
fn decode(mut index: u64, radices: &[u64]) -> Vec<u64> {
    radices
        .iter()
        .map(|&r| {
            let d = index % r;
            index /= r;
            d
        })
        .collect()
}

fn increment(digits: &mut [u64], radices: &[u64]) {
    for (d, &r) in digits.iter_mut().zip(radices) {
        *d += 1;
        if *d < r {
            return;
        }
        *d = 0;
    }
}
