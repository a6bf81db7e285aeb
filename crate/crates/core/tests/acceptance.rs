//! Acceptance criteria, one PASS/FAIL line each, with wall-clock bounds.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use polyperm_core::carlitz::{
    enumerate_polynomial_functions, is_polynomial_function, pgr_formula_value, pgr_order,
    pgr_order_enumerated, pgr_order_formula, reduce_permutation, rivest_is_permutation,
    verify_p2_isomorphism, Gates, VerifyMode,
};
use polyperm_core::fractal::{compare_pgr_fpg, fpg_enumerate, fpg_order_recursion};
use polyperm_core::perm::{coset_action, normal_closure_check, recognize_small_group};
use polyperm_core::{
    pfb_upper_bound, Error, FunctionTable, ParseMode, PermGroup, Permutation, ResiduePoly, RingSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cyc(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn counting_p_ge_k() -> Outcome {
    let gates = Gates::default();
    let mut detail = Vec::new();
    for (p, k, expected) in [(2u64, 2u32, 8u64), (3, 2, 1296)] {
        let census = enumerate_polynomial_functions(p, k, &gates).map_err(|e| e.to_string())?;
        let formula = pgr_order_formula(p, k).map_err(|e| e.to_string())?;
        let count = census.bijective.len() as u64;
        ensure(
            count == expected,
            format!("Z/{}: enumerated {count}", p.pow(k)),
        )?;
        ensure(
            formula == big(count),
            format!("formula {formula} vs {count}"),
        )?;
        ensure(
            census.collisions() == 0,
            format!("{} collisions", census.collisions()),
        )?;
        detail.push(format!("|Pgr(Z/{})| = {count}", p.pow(k)));
    }
    Ok(detail.join(", ") + ", no jet collisions")
}

fn formula_failure() -> Outcome {
    let value = pgr_formula_value(2, 3).map_err(|e| e.to_string())?;
    ensure(value == big(512), format!("formula value {value}"))?;
    match pgr_order_formula(2, 3) {
        Err(Error::HypothesisViolated { formula_value, .. }) if formula_value == big(512) => {}
        other => return Err(format!("formula not flagged: {other:?}")),
    }
    let enumerated = pgr_order_enumerated(2, 3, &Gates::default()).map_err(|e| e.to_string())?;
    ensure(enumerated == big(128), format!("enumerated {enumerated}"))?;
    Ok("formula 512 flagged inapplicable, enumeration 128".into())
}

fn z4_structure() -> Outcome {
    let g =
        PermGroup::generate(&[cyc("(0,1,2,3)", 4), cyc("(1,3)", 4)]).map_err(|e| e.to_string())?;
    ensure(g.order_u64() == Some(8), format!("order {}", g.order()))?;
    let name = recognize_small_group(&g)
        .map_err(|e| e.to_string())?
        .name
        .to_string();
    ensure(name == "D4", format!("recognized {name}"))?;
    ensure(g.contains(&cyc("(0,2)", 4)), "(0,2) not a member")?;
    Ok("order 8, D4, contains (0,2)".into())
}

fn z8_structure() -> Outcome {
    let mut gens = Vec::new();
    for (text, cycles) in [
        ("x+1", "(0,1,2,3,4,5,6,7)"),
        ("x^4+x^2+x", "(1,3,5,7)(2,6)"),
        ("x^4+x^2+3x", "(1,5)"),
    ] {
        let f = ResiduePoly::parse(text, 8, ParseMode::Strict).map_err(|e| e.to_string())?;
        let g = f.to_table().to_permutation().map_err(|e| e.to_string())?;
        ensure(g.format_cycles() == cycles, format!("{text} gives {g}"))?;
        gens.push(g);
    }
    let g = PermGroup::generate(&gens).map_err(|e| e.to_string())?;
    ensure(g.order_u64() == Some(128), format!("order {}", g.order()))?;
    let h_gens: Vec<Permutation> = ["(3,7)", "(2,6)", "(1,5)", "(0,4)"]
        .iter()
        .map(|c| cyc(c, 8))
        .collect();
    let report = normal_closure_check(&g, &h_gens).map_err(|e| e.to_string())?;
    ensure(report.is_normal, "subgroup not normal")?;
    ensure(
        report.subgroup_order == big(16),
        format!("subgroup order {}", report.subgroup_order),
    )?;
    ensure(
        report.quotient_order == big(8),
        format!("quotient order {}", report.quotient_order),
    )?;
    let h = PermGroup::generate(&h_gens).map_err(|e| e.to_string())?;
    let q = coset_action(&g, &h).map_err(|e| e.to_string())?;
    let name = recognize_small_group(&q)
        .map_err(|e| e.to_string())?
        .name
        .to_string();
    ensure(name == "D4", format!("quotient recognized {name}"))?;
    Ok("cycle forms match, order 128, normal subgroup 16, quotient D4".into())
}

fn pfb_bounds() -> Outcome {
    for (n, d) in [(8u64, 4u64), (9, 7), (27, 20)] {
        let got = pfb_upper_bound(n).map_err(|e| e.to_string())?;
        ensure(got == d, format!("pfb({n}) bound {got}"))?;
    }
    Ok("8 -> 4, 9 -> 7, 27 -> 20".into())
}

fn rivest_equivalence() -> Outcome {
    let mut checked = 0u64;
    for mut idx in 0..8u64.pow(5) {
        let coeffs: Vec<u64> = (0..5)
            .map(|_| {
                let c = idx % 8;
                idx /= 8;
                c
            })
            .collect();
        let f = ResiduePoly::new(8, coeffs).unwrap();
        let r = rivest_is_permutation(&f).map_err(|e| e.to_string())?;
        ensure(
            r == f.is_permutation_polynomial(),
            format!("mismatch at {f}"),
        )?;
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100_000 {
        let coeffs: Vec<u64> = (0..7).map(|_| rng.gen_range(0..16)).collect();
        let f = ResiduePoly::new(16, coeffs).unwrap();
        let r = rivest_is_permutation(&f).map_err(|e| e.to_string())?;
        ensure(
            r == f.is_permutation_polynomial(),
            format!("mismatch at {f}"),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} polynomials, zero exceptions"))
}

fn reduction_surjectivity() -> Outcome {
    let gates = Gates::default();
    let census = enumerate_polynomial_functions(2, 4, &gates).map_err(|e| e.to_string())?;
    let pgr8: BTreeSet<Vec<u32>> = enumerate_polynomial_functions(2, 3, &gates)
        .map_err(|e| e.to_string())?
        .bijective
        .into_iter()
        .map(FunctionTable::into_images)
        .collect();
    let pgr4: BTreeSet<Vec<u32>> = enumerate_polynomial_functions(2, 2, &gates)
        .map_err(|e| e.to_string())?
        .bijective
        .into_iter()
        .map(FunctionTable::into_images)
        .collect();
    let mut image = BTreeSet::new();
    for t in &census.bijective {
        let f = t.to_permutation().map_err(|e| e.to_string())?;
        let r8 = reduce_permutation(&f, 8).map_err(|e| e.to_string())?;
        let r4 = reduce_permutation(&f, 4).map_err(|e| e.to_string())?;
        ensure(
            pgr8.contains(r8.images()),
            format!("{f} reduces outside Pgr(Z/8)"),
        )?;
        ensure(
            pgr4.contains(r4.images()),
            format!("{f} reduces outside Pgr(Z/4)"),
        )?;
        image.insert(r8);
    }
    let gens: Vec<Permutation> = image.iter().cloned().collect();
    let order = PermGroup::generate(&gens)
        .map_err(|e| e.to_string())?
        .order()
        .clone();
    ensure(
        image.len() == 128 && order == big(128),
        format!("image {} order {order}", image.len()),
    )?;
    Ok(format!(
        "{} jets, {} tables, |Pgr(Z/16)| = {}, image in S8 of order 128",
        census.jet_count,
        census.tables.len(),
        census.bijective.len()
    ))
}

fn p2_structure() -> Outcome {
    let mut parts = Vec::new();
    for p in [2u64, 3] {
        let r = verify_p2_isomorphism(p, VerifyMode::Exhaustive).map_err(|e| e.to_string())?;
        ensure(r.pass, format!("p={p}: {r:?}"))?;
        parts.push(format!(
            "p={p}: {} elements, {} pairs",
            r.elements_checked, r.pairs_checked
        ));
    }
    let r = verify_p2_isomorphism(
        5,
        VerifyMode::Randomized {
            pairs: 10_000,
            seed: 55,
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(r.pass && r.pairs_checked == 10_000, format!("p=5: {r:?}"))?;
    parts.push(format!("p=5: {} random pairs", r.pairs_checked));
    let formula = pgr_order_formula(5, 2).map_err(|e| e.to_string())?;
    let by_hand = big((1..=5).product::<u64>() * 20u64.pow(5));
    ensure(
        formula == by_hand && formula == big(384_000_000),
        format!("formula {formula}"),
    )?;
    Ok(parts.join(", ") + ", 5!*(4*5)^5 = 384000000")
}

fn fractal_counterexample() -> Outcome {
    let f = Permutation::parse_cycles(
        "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)",
        27,
    )
    .map_err(|e| e.to_string())?;
    let t = FunctionTable::from(&f);
    ensure(t.is_bijective(), "not bijective")?;
    reduce_permutation(&f, 9).map_err(|e| format!("mod 9: {e}"))?;
    reduce_permutation(&f, 3).map_err(|e| format!("mod 3: {e}"))?;
    let poly = is_polynomial_function(&t, 3, 3).map_err(|e| e.to_string())?;
    ensure(!poly, "accepted as polynomial")?;
    Ok("bijective, reduces mod 9 and mod 3, not polynomial".into())
}

fn fpg_counts() -> Outcome {
    let gates = Gates::default();
    for (k, expected) in [(2u32, 8u64), (3, 128)] {
        let scan = fpg_enumerate(2, k, &gates).map_err(|e| e.to_string())?;
        let rec = fpg_order_recursion(2, k).map_err(|e| e.to_string())?;
        ensure(
            scan.count == expected && big(scan.count) == rec,
            format!("(2,{k}): scan {} recursion {rec}", scan.count),
        )?;
    }
    let cmp = compare_pgr_fpg(3, 3, &gates).map_err(|e| e.to_string())?;
    ensure(
        cmp.pgr_order == big(25_509_168),
        format!("pgr {}", cmp.pgr_order),
    )?;
    ensure(
        cmp.fpg_order == BigUint::from(6u32).pow(13),
        format!("fpg {}", cmp.fpg_order),
    )?;
    ensure(cmp.proper, "not flagged proper")?;
    Ok("scans 8 and 128, (3,3): 25509168 < 6^13, proper".into())
}

fn squarefree() -> Outcome {
    let gates = Gates::default();
    let o6 = pgr_order(&RingSpec::new(6).unwrap(), &gates).map_err(|e| e.to_string())?;
    let o10 = pgr_order(&RingSpec::new(10).unwrap(), &gates).map_err(|e| e.to_string())?;
    ensure(o6.order == big(12), format!("Z/6: {}", o6.order))?;
    ensure(o10.order == big(240), format!("Z/10: {}", o10.order))?;
    ensure(o10.proper && o10.order < big(3_628_800), "Z/10 not proper")?;
    Ok("|Pgr(Z/6)| = 12, |Pgr(Z/10)| = 240 < 10!".into())
}

fn motivating() -> Outcome {
    let f = ResiduePoly::parse("x^3+6x^2+x", 9, ParseMode::Strict).map_err(|e| e.to_string())?;
    ensure(f.is_permutation_polynomial(), "not bijective")?;
    Ok("x^3+6x^2+x permutes Z/9".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("counting theorem for p >= k", 1, counting_p_ge_k),
        ("formula failure at p < k", 1, formula_failure),
        ("Z/4 structure", 1, z4_structure),
        ("Z/8 structure", 1, z8_structure),
        ("pfb bounds", 1, pfb_bounds),
        ("Rivest equivalence", 30, rivest_equivalence),
        ("reduction surjectivity", 60, reduction_surjectivity),
        ("Z/p^2 structure", 120, p2_structure),
        ("fractal counterexample", 1, fractal_counterexample),
        ("Fpg counts", 5, fpg_counts),
        ("squarefree products", 1, squarefree),
        ("motivating example", 1, motivating),
    ];
    let mut failures = 0;
    for (i, (name, secs, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*secs);
        let (pass, detail) = match outcome {
            Ok(d) if elapsed < limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {secs} s")),
            Err(e) => (false, e),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {:>2} {name} [{:.3} s < {secs} s]: {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
