//! Named verification suites run by `polyperm verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::carlitz::{
    enumerate_polynomial_functions, is_polynomial_function, normalize_generator, pgr_formula_value,
    pgr_order, pgr_order_enumerated, pgr_order_formula, reduce_permutation, rivest_is_permutation,
    verify_p2_isomorphism, Gates, VerifyMode,
};
use crate::error::{Error, Result};
use crate::fractal::{compare_pgr_fpg, fpg_enumerate, fpg_order_recursion};
use crate::perm::{
    coset_action, normal_closure_check, recognize_small_group, PermGroup, Permutation,
};
use crate::pfb::pfb_upper_bound;
use crate::poly::{ParseMode, ResiduePoly};
use crate::ring::RingSpec;

/// The Z/27 fractal permutation that no polynomial induces.
pub const Z27_FRACTAL: &str =
    "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counting,
    Rivest,
    P2Structure,
    Fractal,
    Reductions,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "counting",
        "rivest",
        "p2-structure",
        "fractal",
        "reductions",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Rivest => "rivest",
            Suite::P2Structure => "p2-structure",
            Suite::Fractal => "fractal",
            Suite::Reductions => "reductions",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "counting" => Suite::Counting,
            "rivest" => Suite::Rivest,
            "p2-structure" => Suite::P2Structure,
            "fractal" => Suite::Fractal,
            "reductions" => Suite::Reductions,
            "all" => Suite::All,
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "unknown suite '{s}' (expected one of {})",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

type Check = fn(&Gates) -> Result<(bool, String)>;

fn checks_for(suite: Suite) -> Vec<(&'static str, Check)> {
    match suite {
        Suite::Counting => vec![
            (
                "formula-matches-enumeration",
                check_formula_vs_enumeration as Check,
            ),
            ("formula-fails-below-k", check_formula_failure),
            ("z4-structure", check_z4_structure),
            ("z8-structure", check_z8_structure),
            ("pfb-bounds", check_pfb),
            ("squarefree-products", check_squarefree),
            ("motivating-example", check_motivating),
        ],
        Suite::Rivest => vec![
            ("rivest-z8-exhaustive", check_rivest_z8 as Check),
            ("rivest-z16-random", check_rivest_z16),
        ],
        Suite::P2Structure => vec![
            ("p2-exhaustive-2", check_p2_two as Check),
            ("p2-exhaustive-3", check_p2_three),
            ("p2-randomized-5", check_p2_five),
        ],
        Suite::Fractal => vec![
            ("z27-counterexample", check_z27 as Check),
            ("fpg-counts", check_fpg_counts),
        ],
        Suite::Reductions => vec![
            ("z16-reduction-image", check_z16_reductions as Check),
            ("normalization", check_normalization),
        ],
        Suite::All => [
            Suite::Counting,
            Suite::Rivest,
            Suite::P2Structure,
            Suite::Fractal,
            Suite::Reductions,
        ]
        .into_iter()
        .flat_map(checks_for)
        .collect(),
    }
}

pub fn run_suite(suite: Suite, gates: &Gates) -> SuiteReport {
    let checks: Vec<CheckResult> = checks_for(suite)
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let (pass, detail) = match check(gates) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name: name.to_string(),
                pass,
                detail,
                millis: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    SuiteReport {
        suite: suite.name().to_string(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

fn perm(text: &str, n: usize) -> Result<Permutation> {
    Permutation::parse_cycles(text, n)
}

fn poly_perm(text: &str, n: u64) -> Result<Permutation> {
    ResiduePoly::parse(text, n, ParseMode::Strict)?
        .to_table()
        .to_permutation()
}

fn check_formula_vs_enumeration(gates: &Gates) -> Result<(bool, String)> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (p, k) in [(2u64, 2u32), (3, 2)] {
        let census = enumerate_polynomial_functions(p, k, gates)?;
        let enumerated = census.bijective.len() as u64;
        let formula = pgr_order_formula(p, k)?;
        let collisions = census.collisions();
        pass &= formula == BigUint::from(enumerated) && collisions == 0;
        parts.push(format!(
            "Z/{}: enumerated {enumerated}, formula {formula}, collisions {collisions}",
            p.pow(k)
        ));
    }
    Ok((pass, parts.join("; ")))
}

fn check_formula_failure(gates: &Gates) -> Result<(bool, String)> {
    let value = pgr_formula_value(2, 3)?;
    let flagged = matches!(
        pgr_order_formula(2, 3),
        Err(Error::HypothesisViolated { .. })
    );
    let enumerated = pgr_order_enumerated(2, 3, gates)?;
    let pass = value == BigUint::from(512u32) && flagged && enumerated == BigUint::from(128u32);
    Ok((
        pass,
        format!(
            "formula value {value} (flagged inapplicable: {flagged}), enumeration {enumerated}"
        ),
    ))
}

fn check_z4_structure(_: &Gates) -> Result<(bool, String)> {
    let g = PermGroup::generate(&[perm("(0,1,2,3)", 4)?, perm("(1,3)", 4)?])?;
    let name = recognize_small_group(&g)?.name.to_string();
    let has = g.contains(&perm("(0,2)", 4)?);
    let pass = g.order_u64() == Some(8) && name == "D4" && has;
    Ok((
        pass,
        format!(
            "order {}, recognized {name}, contains (0,2): {has}",
            g.order()
        ),
    ))
}

fn check_z8_structure(_: &Gates) -> Result<(bool, String)> {
    let sources = [
        ("x+1", "(0,1,2,3,4,5,6,7)"),
        ("x^4+x^2+x", "(1,3,5,7)(2,6)"),
        ("x^4+x^2+3x", "(1,5)"),
    ];
    let mut gens = Vec::new();
    let mut pass = true;
    for (poly, cycles) in sources {
        let g = poly_perm(poly, 8)?;
        pass &= g.format_cycles() == cycles;
        gens.push(g);
    }
    let g = PermGroup::generate(&gens)?;
    let n_gens = ["(3,7)", "(2,6)", "(1,5)", "(0,4)"]
        .iter()
        .map(|c| perm(c, 8))
        .collect::<Result<Vec<_>>>()?;
    let normality = normal_closure_check(&g, &n_gens)?;
    let h = PermGroup::generate(&n_gens)?;
    let quotient = coset_action(&g, &h)?;
    let q_name = recognize_small_group(&quotient)?.name.to_string();
    pass &= g.order_u64() == Some(128)
        && normality.is_normal
        && normality.subgroup_order == BigUint::from(16u32)
        && normality.quotient_order == BigUint::from(8u32)
        && q_name == "D4";
    Ok((
        pass,
        format!(
            "order {}, normal subgroup order {} (normal: {}), quotient {} recognized {q_name}",
            g.order(),
            normality.subgroup_order,
            normality.is_normal,
            normality.quotient_order
        ),
    ))
}

fn check_pfb(_: &Gates) -> Result<(bool, String)> {
    let got: Vec<(u64, u64)> = [8, 9, 27]
        .iter()
        .map(|&n| pfb_upper_bound(n).map(|d| (n, d)))
        .collect::<Result<_>>()?;
    let pass = got == [(8, 4), (9, 7), (27, 20)];
    Ok((pass, format!("{got:?}")))
}

fn check_squarefree(gates: &Gates) -> Result<(bool, String)> {
    let o6 = pgr_order(&RingSpec::new(6)?, gates)?;
    let o10 = pgr_order(&RingSpec::new(10)?, gates)?;
    let pass = o6.order == BigUint::from(12u32) && o10.order == BigUint::from(240u32) && o10.proper;
    Ok((
        pass,
        format!(
            "Z/6: {}, Z/10: {} (proper: {})",
            o6.order, o10.order, o10.proper
        ),
    ))
}

fn check_motivating(_: &Gates) -> Result<(bool, String)> {
    let f = ResiduePoly::parse("x^3+6x^2+x", 9, ParseMode::Strict)?;
    let pass = f.is_permutation_polynomial();
    Ok((pass, format!("{f} over Z/9 bijective: {pass}")))
}

fn rivest_sweep(polys: impl Iterator<Item = ResiduePoly>) -> Result<(u64, u64)> {
    let mut total = 0u64;
    let mut mismatches = 0u64;
    for f in polys {
        total += 1;
        if rivest_is_permutation(&f)? != f.is_permutation_polynomial() {
            mismatches += 1;
        }
    }
    Ok((total, mismatches))
}

fn check_rivest_z8(_: &Gates) -> Result<(bool, String)> {
    let polys = (0..8u64.pow(5)).map(|mut idx| {
        let coeffs: Vec<u64> = (0..5)
            .map(|_| {
                let c = idx % 8;
                idx /= 8;
                c
            })
            .collect();
        ResiduePoly::new(8, coeffs).expect("valid modulus")
    });
    let (total, bad) = rivest_sweep(polys)?;
    Ok((
        bad == 0 && total == 32768,
        format!("{total} polynomials, {bad} disagreements"),
    ))
}

fn check_rivest_z16(_: &Gates) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0016);
    let polys = (0..100_000).map(move |_| {
        let coeffs: Vec<u64> = (0..7).map(|_| rng.gen_range(0..16)).collect();
        ResiduePoly::new(16, coeffs).expect("valid modulus")
    });
    let (total, bad) = rivest_sweep(polys)?;
    Ok((
        bad == 0,
        format!("{total} random polynomials, {bad} disagreements"),
    ))
}

fn p2_check(p: u64, mode: VerifyMode) -> Result<(bool, String)> {
    let r = verify_p2_isomorphism(p, mode)?;
    Ok((
        r.pass,
        format!(
            "p={p} {}: {} elements, {} pairs, order {} (formula {})",
            r.mode, r.elements_checked, r.pairs_checked, r.triple_group_order, r.pgr_order
        ),
    ))
}

fn check_p2_two(_: &Gates) -> Result<(bool, String)> {
    p2_check(2, VerifyMode::Exhaustive)
}

fn check_p2_three(_: &Gates) -> Result<(bool, String)> {
    p2_check(3, VerifyMode::Exhaustive)
}

fn check_p2_five(_: &Gates) -> Result<(bool, String)> {
    let (pass, detail) = p2_check(
        5,
        VerifyMode::Randomized {
            pairs: 10_000,
            seed: 5,
        },
    )?;
    let formula = pgr_order_formula(5, 2)?;
    let ok = formula == BigUint::from(384_000_000u64);
    Ok((pass && ok, format!("{detail}; 5!*(4*5)^5 = {formula}")))
}

fn check_z27(_: &Gates) -> Result<(bool, String)> {
    let f = perm(Z27_FRACTAL, 27)?;
    let mod9 = reduce_permutation(&f, 9).is_ok();
    let mod3 = reduce_permutation(&f, 3).is_ok();
    let poly = is_polynomial_function(&(&f).into(), 3, 3)?;
    Ok((
        mod9 && mod3 && !poly,
        format!("reduces mod 9: {mod9}, mod 3: {mod3}, polynomial: {poly}"),
    ))
}

fn check_fpg_counts(gates: &Gates) -> Result<(bool, String)> {
    let s22 = fpg_enumerate(2, 2, gates)?;
    let s23 = fpg_enumerate(2, 3, gates)?;
    let r22 = fpg_order_recursion(2, 2)?;
    let r23 = fpg_order_recursion(2, 3)?;
    let cmp = compare_pgr_fpg(3, 3, gates)?;
    let pass = s22.count == 8
        && s23.count == 128
        && BigUint::from(s22.count) == r22
        && BigUint::from(s23.count) == r23
        && cmp.pgr_order == BigUint::from(25_509_168u64)
        && cmp.fpg_order == BigUint::from(6u32).pow(13)
        && cmp.proper;
    Ok((
        pass,
        format!(
            "scan (2,2) {} (2,3) {}; (3,3) pgr {} fpg {} proper {}",
            s22.count, s23.count, cmp.pgr_order, cmp.fpg_order, cmp.proper
        ),
    ))
}

fn check_z16_reductions(gates: &Gates) -> Result<(bool, String)> {
    let census = enumerate_polynomial_functions(2, 4, gates)?;
    let targets8 = expect_set(2, 3, gates)?;
    let targets4 = expect_set(2, 2, gates)?;
    let mut image8 = BTreeSet::new();
    let mut image4 = BTreeSet::new();
    let mut ok = true;
    for t in &census.bijective {
        let f = t.to_permutation()?;
        let r8 = reduce_permutation(&f, 8)?;
        let r4 = reduce_permutation(&f, 4)?;
        ok &= targets8.contains(r8.images()) && targets4.contains(r4.images());
        image8.insert(r8);
        image4.insert(r4);
    }
    let gens: Vec<Permutation> = image8.iter().cloned().collect();
    let generated = PermGroup::generate(&gens)?;
    let pass = ok && image8.len() == 128 && image4.len() == 8 && generated.order_u64() == Some(128);
    Ok((
        pass,
        format!(
            "{} jets, |Pgr(Z/16)| = {}, image in S8 {} (generated order {}), image in S4 {}",
            census.jet_count,
            census.bijective.len(),
            image8.len(),
            generated.order(),
            image4.len()
        ),
    ))
}

fn expect_set(p: u64, k: u32, gates: &Gates) -> Result<BTreeSet<Vec<u32>>> {
    Ok(enumerate_polynomial_functions(p, k, gates)?
        .bijective
        .iter()
        .map(|t| t.images().to_vec())
        .collect())
}

fn check_normalization(_: &Gates) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11);
    let mut pass = true;
    for n in [8u64, 9, 27] {
        let mut checked = 0;
        while checked < 200 {
            let coeffs: Vec<u64> = (0..6).map(|_| rng.gen_range(0..n)).collect();
            let f = ResiduePoly::new(n, coeffs)?;
            if !f.is_permutation_polynomial() {
                continue;
            }
            let g = normalize_generator(&f)?;
            checked += 1;
            pass &= g.eval(0) == 0 && g.is_permutation_polynomial();
        }
    }
    Ok((
        pass,
        "normalized generators fix 0 and stay bijective".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("unknown-name".parse::<Suite>().is_err());
    }

    #[test]
    fn counting_suite_passes() {
        let r = run_suite(Suite::Counting, &Gates::default());
        assert!(r.pass, "{r:?}");
    }
}
