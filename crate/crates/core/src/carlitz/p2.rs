//! Coordinates of `Pgr(Z/p^2)` as an iterated semidirect product.
//!
//! A polynomial permutation `f` of `Z/p^2` is determined by the permutation
//! `sigma` it induces on `Z/p`, residues `a_x` with `f(x) = sigma(x) + a_x p`
//! and units `u_x` with `f(x + mp) = f(x) + mp u_x`, for `x` in `[0, p)`.
//! With the left-to-right product (`f` then `g`), the triple of `f` then `g`
//! is `(b_{sigma(i)} + v_{sigma(i)} a_i, v_{sigma(i)} u_i, sigma then tau)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::counting::pgr_order_formula;
use super::enumerate::{enumerate_polynomial_functions, Gates};
use super::jet::CarlitzJet;
use super::membership::is_polynomial_function;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{factorial, is_prime};
use crate::table::FunctionTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TripleRepr", into = "TripleRepr")]
pub struct P2Triple {
    p: u64,
    a: Vec<u64>,
    u: Vec<u64>,
    sigma: Permutation,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    p: u64,
    a: Vec<u64>,
    u: Vec<u64>,
    sigma: String,
}

impl TryFrom<TripleRepr> for P2Triple {
    type Error = Error;

    fn try_from(r: TripleRepr) -> Result<Self> {
        let sigma = Permutation::parse_cycles(&r.sigma, r.p as usize)?;
        P2Triple::new(r.p, r.a, r.u, sigma)
    }
}

impl From<P2Triple> for TripleRepr {
    fn from(t: P2Triple) -> Self {
        TripleRepr {
            p: t.p,
            a: t.a,
            u: t.u,
            sigma: t.sigma.format_cycles(),
        }
    }
}

impl P2Triple {
    pub fn new(p: u64, a: Vec<u64>, u: Vec<u64>, sigma: Permutation) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let len = p as usize;
        for v in [a.len(), u.len(), sigma.degree()] {
            if v != len {
                return Err(Error::SizeMismatch {
                    left: v,
                    right: len,
                });
            }
        }
        if let Some(&value) = a.iter().find(|&&v| v >= p) {
            return Err(Error::OutOfRange { value, modulus: p });
        }
        if let Some(&value) = u.iter().find(|&&v| v == 0 || v >= p) {
            return Err(Error::OutOfRange { value, modulus: p });
        }
        Ok(P2Triple { p, a, u, sigma })
    }

    pub fn identity(p: u64) -> Result<Self> {
        P2Triple::new(
            p,
            vec![0; p as usize],
            vec![1; p as usize],
            Permutation::identity(p as usize),
        )
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn u(&self) -> &[u64] {
        &self.u
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn to_jet(&self) -> CarlitzJet {
        let p = self.p;
        let rows = (0..p as usize)
            .map(|x| vec![self.sigma.apply(x as u32) as u64 + self.a[x] * p, self.u[x]])
            .collect();
        CarlitzJet::from_rows_unchecked(p, 2, rows)
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_images_unchecked(self.to_jet().extend().into_images())
    }
}

/// Reads off the triple without checking polynomiality.
fn extract(f: &Permutation, p: u64) -> Result<P2Triple> {
    let n = p * p;
    let sigma: Vec<u32> = (0..p as u32)
        .map(|x| (f.apply(x) as u64 % p) as u32)
        .collect();
    let sigma = Permutation::from_images(sigma).map_err(|_| Error::NotPolynomial)?;
    let a = (0..p)
        .map(|x| (f.apply(x as u32) as u64 - sigma.apply(x as u32) as u64) / p)
        .collect();
    let mut u = Vec::with_capacity(p as usize);
    for x in 0..p {
        let diff = (f.apply((x + p) as u32) as u64 + n - f.apply(x as u32) as u64) % n;
        if !diff.is_multiple_of(p) {
            return Err(Error::NotPolynomial);
        }
        let ux = diff / p;
        if ux == 0 {
            return Err(Error::Internal(format!("coefficient at {x} is not a unit")));
        }
        u.push(ux);
    }
    Ok(P2Triple { p, a, u, sigma })
}

/// Coordinates of a polynomial permutation of `Z/p^2`.
pub fn p2_triple_of(f: &Permutation, p: u64) -> Result<P2Triple> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f.degree() as u64 != p * p {
        return Err(Error::SizeMismatch {
            left: f.degree(),
            right: (p * p) as usize,
        });
    }
    if !is_polynomial_function(&FunctionTable::from(f), p, 2)? {
        return Err(Error::NotPolynomial);
    }
    extract(f, p)
}

/// Product of `s` then `t` in the semidirect product.
pub fn semidirect_multiply(s: &P2Triple, t: &P2Triple) -> Result<P2Triple> {
    if s.p != t.p {
        return Err(Error::SizeMismatch {
            left: s.p as usize,
            right: t.p as usize,
        });
    }
    let p = s.p;
    let mut a = Vec::with_capacity(p as usize);
    let mut u = Vec::with_capacity(p as usize);
    for i in 0..p as usize {
        let si = s.sigma.apply(i as u32) as usize;
        a.push((t.a[si] + t.u[si] * s.a[i]) % p);
        u.push(t.u[si] * s.u[i] % p);
    }
    Ok(P2Triple {
        p,
        a,
        u,
        sigma: s.sigma.then(&t.sigma),
    })
}

/// `p^p (p-1)^p p!`, the size of the triple group.
pub fn triple_group_order(p: u64) -> BigUint {
    BigUint::from(p).pow(p as u32) * BigUint::from(p - 1).pow(p as u32) * factorial(p)
}

/// Every triple for `p`, in lexicographic order of (sigma, u, a).
pub fn all_triples(p: u64) -> Result<Vec<P2Triple>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let len = p as usize;
    let mut sigmas: Vec<Permutation> = Vec::new();
    permutations(&mut (0..p as u32).collect::<Vec<_>>(), 0, &mut sigmas);
    sigmas.sort();
    let count_a = p.pow(p as u32);
    let count_u = (p - 1).pow(p as u32);
    let mut out = Vec::new();
    for sigma in &sigmas {
        for ui in 0..count_u {
            let u: Vec<u64> = digits(ui, p - 1, len).into_iter().map(|d| d + 1).collect();
            for ai in 0..count_a {
                out.push(P2Triple {
                    p,
                    a: digits(ai, p, len),
                    u: u.clone(),
                    sigma: sigma.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn digits(mut v: u64, radix: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = v % radix;
            v /= radix;
            d
        })
        .collect()
}

fn permutations(items: &mut Vec<u32>, start: usize, out: &mut Vec<Permutation>) {
    if start == items.len() {
        out.push(Permutation::from_images_unchecked(items.clone()));
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}

pub fn random_triple(p: u64, rng: &mut impl Rng) -> P2Triple {
    let len = p as usize;
    let mut images: Vec<u32> = (0..p as u32).collect();
    for i in (1..len).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    P2Triple {
        p,
        a: (0..len).map(|_| rng.gen_range(0..p)).collect(),
        u: (0..len).map(|_| rng.gen_range(1..p)).collect(),
        sigma: Permutation::from_images_unchecked(images),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// All elements and all pairs (`p <= 3`).
    Exhaustive,
    /// Random pairs from a seeded generator (`p <= 13`).
    Randomized { pairs: u64, seed: u64 },
}

/// Result of [`verify_p2_isomorphism`]; failures are payload, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P2Report {
    pub p: u64,
    pub mode: &'static str,
    /// Size of the triple group, as a decimal string.
    pub triple_group_order: String,
    /// `|Pgr(Z/p^2)|` from the closed form, as a decimal string.
    pub pgr_order: String,
    pub orders_agree: bool,
    pub elements_checked: u64,
    pub pairs_checked: u64,
    pub injective: bool,
    pub surjective: bool,
    pub homomorphism: bool,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Checks that `f -> (a, u, sigma)` is a bijection from `Pgr(Z/p^2)` onto the
/// triple group and a homomorphism.
pub fn verify_p2_isomorphism(p: u64, mode: VerifyMode) -> Result<P2Report> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let triple_order = triple_group_order(p);
    let formula = pgr_order_formula(p, 2)?;
    let mut report = P2Report {
        p,
        mode: match mode {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Randomized { .. } => "randomized",
        },
        triple_group_order: triple_order.to_string(),
        pgr_order: formula.to_string(),
        orders_agree: triple_order == formula,
        elements_checked: 0,
        pairs_checked: 0,
        injective: true,
        surjective: true,
        homomorphism: true,
        pass: false,
        counterexample: None,
    };
    match mode {
        VerifyMode::Exhaustive => exhaustive(p, &mut report)?,
        VerifyMode::Randomized { pairs, seed } => {
            if p > 13 {
                return Err(Error::InvalidParameters(format!(
                    "randomized mode supports p <= 13, got {p}"
                )));
            }
            randomized(p, pairs, seed, &mut report)?
        }
    }
    report.pass =
        report.orders_agree && report.injective && report.surjective && report.homomorphism;
    Ok(report)
}

fn exhaustive(p: u64, report: &mut P2Report) -> Result<()> {
    if p > 3 {
        return Err(Error::GateExceeded(format!(
            "exhaustive mode supports p <= 3, got {p}"
        )));
    }
    let triples = all_triples(p)?;
    let perms: Vec<Permutation> = triples.iter().map(P2Triple::to_permutation).collect();
    report.elements_checked = triples.len() as u64;

    // injective: distinct triples give distinct permutations, and every
    // permutation reads back its own triple
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, f)| (f, i)).collect();
    if index.len() != triples.len() {
        report.injective = false;
        report.counterexample = Some("two triples induce the same permutation".into());
    }
    for (t, f) in triples.iter().zip(&perms) {
        if p2_triple_of(f, p).ok().as_ref() != Some(t) {
            report.injective = false;
            report.counterexample =
                Some(format!("triple does not round-trip: {}", f.format_cycles()));
            break;
        }
    }

    // surjective: the images are exactly the bijective polynomial functions
    let census = enumerate_polynomial_functions(p, 2, &Gates::default())?;
    let mut images: Vec<FunctionTable> = perms.iter().map(FunctionTable::from).collect();
    images.sort();
    if images != census.bijective {
        report.surjective = false;
        report
            .counterexample
            .get_or_insert_with(|| "triple images differ from Pgr(Z/p^2)".into());
    }

    let n = triples.len();
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        (0..n).find_map(|j| {
            let prod = perms[i].then(&perms[j]);
            let expected = semidirect_multiply(&triples[i], &triples[j]).ok()?;
            match index.get(&prod) {
                Some(&k) if triples[k] == expected => None,
                _ => Some((i, j)),
            }
        })
    });
    report.pairs_checked = (n * n) as u64;
    if let Some((i, j)) = failure {
        report.homomorphism = false;
        report.counterexample = Some(format!(
            "product of {} and {} disagrees",
            perms[i].format_cycles(),
            perms[j].format_cycles()
        ));
    }
    Ok(())
}

fn randomized(p: u64, pairs: u64, seed: u64, report: &mut P2Report) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(P2Triple, P2Triple)> = (0..pairs)
        .map(|_| (random_triple(p, &mut rng), random_triple(p, &mut rng)))
        .collect();
    let failure = samples.par_iter().find_map_first(|(s, t)| {
        let fs = s.to_permutation();
        let ft = t.to_permutation();
        if p2_triple_of(&fs, p).ok().as_ref() != Some(s) {
            return Some(("injective", fs));
        }
        let prod = fs.then(&ft);
        let expected = semidirect_multiply(s, t).ok();
        if p2_triple_of(&prod, p).ok() != expected {
            return Some(("homomorphism", prod));
        }
        None
    });
    report.elements_checked = 2 * pairs;
    report.pairs_checked = pairs;
    if let Some((kind, f)) = failure {
        match kind {
            "injective" => report.injective = false,
            _ => report.homomorphism = false,
        }
        report.counterexample = Some(format!("{kind} check failed at {}", f.format_cycles()));
    }
    // every triple induces a polynomial permutation and the two finite sets
    // have equal size, so injectivity gives surjectivity
    report.surjective = report.injective && report.orders_agree;
    Ok(())
}
