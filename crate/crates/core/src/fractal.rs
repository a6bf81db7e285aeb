//! Fractal permutations of `Z/p^k`: permutations that induce permutations of
//! every `Z/p^l`, `l <= k`.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::carlitz::{pgr_order, reduce_permutation, Gates, OrderMethod};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{check_prime_power, factorial, RingSpec};

/// Whether `f` on `Z/p^k` (with `p^k = f.degree()`) reduces to a permutation
/// modulo every `p^l`.
pub fn is_fractal(f: &Permutation, p: u64) -> Result<bool> {
    let k = exponent_of(f.degree() as u64, p)?;
    for l in 1..=k {
        match reduce_permutation(f, p.pow(l)) {
            Ok(_) => {}
            Err(Error::NotReducible { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

fn exponent_of(n: u64, p: u64) -> Result<u32> {
    let ring = RingSpec::new(n)?;
    match ring.as_prime_power() {
        Some(pp) if pp.p == p => Ok(pp.k),
        _ => Err(Error::InvalidParameters(format!(
            "{n} is not a power of {p}"
        ))),
    }
}

/// `|Fpg(Z/p^k)| = prod_{l<k} (p!)^(p^l)`: a fractal permutation is a fractal
/// permutation of `Z/p^(k-1)` together with an arbitrary bijection between
/// each size-`p` fiber and the fiber above its image.
pub fn fpg_order_recursion(p: u64, k: u32) -> Result<BigUint> {
    check_prime_power(p, k)?;
    let pf = factorial(p);
    Ok((0..k).fold(BigUint::from(1u32), |acc, l| acc * pf.pow(p.pow(l) as u32)))
}

/// Result of scanning all permutations of `Z/p^k`.
#[derive(Clone, Debug)]
pub struct FpgScan {
    pub count: u64,
    /// Sorted fractal permutations.
    pub elements: Vec<Permutation>,
    /// Closed under composition and inverse.
    pub is_group: bool,
}

/// Exhaustive scan of all `(p^k)!` permutations.
pub fn fpg_enumerate(p: u64, k: u32, gates: &Gates) -> Result<FpgScan> {
    let n = check_prime_power(p, k)?;
    if n > gates.max_scan_ring {
        return Err(Error::GateExceeded(format!(
            "({n})! scan exceeds limit {}",
            gates.max_scan_ring
        )));
    }
    let total: u64 = (1..=n).product();
    let chunk = 5040u64;
    let mut elements: Vec<Permutation> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|ci| {
            let start = ci * chunk;
            let end = (start + chunk).min(total);
            let mut images = unrank(start, n as usize);
            let mut found = Vec::new();
            for _ in start..end {
                let f = Permutation::from_images_unchecked(images.clone());
                if is_fractal(&f, p).expect("degree is p^k") {
                    found.push(f);
                }
                next_permutation(&mut images);
            }
            found
        })
        .collect();
    elements.sort();
    let set: HashSet<&Permutation> = elements.iter().collect();
    let is_group = elements
        .iter()
        .all(|f| set.contains(&f.inverse()) && elements.iter().all(|g| set.contains(&f.then(g))));
    Ok(FpgScan {
        count: elements.len() as u64,
        elements,
        is_group,
    })
}

/// Lexicographic unranking on `n` points.
fn unrank(mut rank: u64, n: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f: u64 = (1..=i as u64).product();
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractalMethods {
    /// `"scan"` or `"recursion"`.
    pub fpg: &'static str,
    /// `"formula"` or `"enumeration"`.
    pub pgr: &'static str,
}

/// `Pgr(Z/p^k)` against `Fpg(Z/p^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractalReport {
    pub p: u64,
    pub k: u32,
    #[serde(serialize_with = "decimal")]
    pub fpg_order: BigUint,
    #[serde(serialize_with = "decimal")]
    pub pgr_order: BigUint,
    /// `fpg_order / pgr_order` when it divides exactly.
    pub index: Option<String>,
    pub proper: bool,
    pub method: FractalMethods,
    pub notes: Vec<String>,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn compare_pgr_fpg(p: u64, k: u32, gates: &Gates) -> Result<FractalReport> {
    let n = check_prime_power(p, k)?;
    let pgr = pgr_order(&RingSpec::new(n)?, gates)?;
    let recursion = fpg_order_recursion(p, k)?;
    let mut notes = vec![
        "fpg order closed form derived from the fiber recursion |Fpg(p^k)| = |Fpg(p^(k-1))| * (p!)^(p^(k-1))"
            .to_string(),
    ];
    let (fpg_order, fpg_method) = if n <= gates.max_scan_ring {
        let scan = fpg_enumerate(p, k, gates)?;
        let scanned = BigUint::from(scan.count);
        if scanned != recursion {
            return Err(Error::Internal(format!(
                "scan found {scanned} fractal permutations, recursion gives {recursion}"
            )));
        }
        notes.push("exhaustive scan agrees with the recursion".into());
        (scanned, "scan")
    } else {
        notes.push("recursion only; exhaustive scan infeasible".into());
        (recursion, "recursion")
    };
    let index = (&fpg_order % &pgr.order == BigUint::from(0u32))
        .then(|| (&fpg_order / &pgr.order).to_string());
    Ok(FractalReport {
        p,
        k,
        proper: pgr.order < fpg_order,
        index,
        pgr_order: pgr.order,
        fpg_order,
        method: FractalMethods {
            fpg: fpg_method,
            pgr: match pgr.method {
                OrderMethod::Enumeration => "enumeration",
                _ => "formula",
            },
        },
        notes,
    })
}
