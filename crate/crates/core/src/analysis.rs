//! Whole-ring analyses of `Pgr(Z/n)` and the atlas sweep.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::carlitz::{
    crt_lift, factor_order, pgr_formula_value, pgr_generators, pgr_order_enumerated,
    small_generating_set, FactorOrder, Gates, OrderMethod,
};
use crate::error::{Error, Result};
use crate::interpolate::interpolate;
use crate::perm::{recognize_small_group, GroupOptions, PermGroup, Permutation};
use crate::poly::ResiduePoly;
use crate::ring::{is_below_factorial, PrimePower, RingSpec};
use crate::table::FunctionTable;

/// Groups up to this order are named.
pub const RECOGNITION_LIMIT: u64 = 512;
/// Largest `n` for which generator polynomials are interpolated.
pub const INTERPOLATION_LIMIT: u64 = 2048;
/// Largest `n` for which generators are lifted to `Z/n` and regenerated.
pub const GENERATION_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub gates: Gates,
    pub with_generators: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            gates: Gates::default(),
            with_generators: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub method: &'static str,
    pub order: String,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub p: u64,
    pub k: u32,
    pub order: Option<String>,
    pub method: Option<&'static str>,
    pub cross_checks: Vec<CrossCheck>,
    /// Size of the full set of bijective polynomial functions used as the
    /// generator pool, when it was enumerated.
    pub generator_pool_size: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    /// Prime-power factor the generator comes from.
    pub factor: String,
    pub cycles: String,
    pub polynomial: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionEntry {
    pub name: String,
    pub abelian: bool,
    pub element_orders: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NotComputed {
    pub item: String,
    pub reason: String,
}

/// Everything known about `Pgr(Z/n)`. Orders are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub ring: String,
    pub n: u64,
    pub factorization: String,
    pub order: Option<String>,
    pub order_method: Option<&'static str>,
    /// `order < n!`.
    pub proper_subgroup: Option<bool>,
    pub factors: Vec<FactorReport>,
    pub generators: Vec<GeneratorEntry>,
    pub generated_order: Option<String>,
    pub recognition: Option<RecognitionEntry>,
    pub notes: Vec<String>,
    pub not_computed: Vec<NotComputed>,
}

fn factor_cache() -> &'static Mutex<HashMap<PrimePower, FactorOrder>> {
    static CACHE: OnceLock<Mutex<HashMap<PrimePower, FactorOrder>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_factor_order(pp: PrimePower, gates: &Gates) -> Result<FactorOrder> {
    if let Some(f) = factor_cache().lock().unwrap().get(&pp) {
        return Ok(f.clone());
    }
    let f = factor_order(pp, gates)?;
    factor_cache().lock().unwrap().insert(pp, f.clone());
    Ok(f)
}

/// `order < n!`, using a logarithmic estimate before exact arithmetic.
fn is_proper(order: &BigUint, ring: &RingSpec) -> bool {
    if ring.as_prime_power().is_some_and(|pp| pp.k == 1) {
        return false;
    }
    let n = ring.modulus();
    let log_fact: f64 = (2..=n).map(|i| (i as f64).log2()).sum();
    if log_fact > order.bits() as f64 + 1e-6 * (n as f64 + 1.0) {
        return true;
    }
    is_below_factorial(order, n)
}

pub fn analyze(n: u64, opts: &AnalyzeOptions) -> Result<GroupReport> {
    let ring = RingSpec::new(n)?;
    let gates = &opts.gates;
    let mut report = GroupReport {
        ring: ring.label(),
        n,
        factorization: ring.factorization_text(),
        order: None,
        order_method: None,
        proper_subgroup: None,
        factors: Vec::new(),
        generators: Vec::new(),
        generated_order: None,
        recognition: None,
        notes: Vec::new(),
        not_computed: Vec::new(),
    };

    let mut total = Some(BigUint::from(1u32));
    let mut lifted: Option<Vec<Permutation>> = Some(Vec::new());
    for &pp in ring.factors() {
        let mut fr = FactorReport {
            p: pp.p,
            k: pp.k,
            order: None,
            method: None,
            cross_checks: Vec::new(),
            generator_pool_size: None,
        };
        match cached_factor_order(pp, gates) {
            Ok(fo) => {
                fr.order = Some(fo.order.to_string());
                fr.method = Some(fo.method.as_str());
                if fo.method == OrderMethod::Formula && pp.k >= 2 {
                    if let Ok(enumerated) = pgr_order_enumerated(pp.p, pp.k, gates) {
                        fr.cross_checks.push(CrossCheck {
                            method: "enumeration",
                            agrees: enumerated == fo.order,
                            order: enumerated.to_string(),
                        });
                    }
                }
                total = total.map(|t| t * &fo.order);
            }
            Err(e) => {
                report.not_computed.push(NotComputed {
                    item: format!("order of Pgr(Z/{})", pp.modulus()),
                    reason: e.to_string(),
                });
                total = None;
            }
        }
        if pp.k >= 2 && pp.p < pp.k as u64 {
            let value = pgr_formula_value(pp.p, pp.k)?;
            report.notes.push(format!(
                "formula inapplicable for Z/{}: p < k (formula would give {value})",
                pp.modulus()
            ));
        }

        if opts.with_generators {
            match factor_generators(pp, gates) {
                Ok((gens, pool)) => {
                    fr.generator_pool_size = pool;
                    if let Some(list) = lifted.as_mut() {
                        for g in gens {
                            list.push(lift(&g, n)?);
                        }
                    }
                }
                Err(e) => {
                    report.not_computed.push(NotComputed {
                        item: format!("generators of Pgr(Z/{})", pp.modulus()),
                        reason: e.to_string(),
                    });
                    lifted = None;
                }
            }
        }
        report.factors.push(fr);
    }
    if !opts.with_generators {
        report.not_computed.push(NotComputed {
            item: "generators".into(),
            reason: "not requested".into(),
        });
        lifted = None;
    }

    if let Some(order) = &total {
        report.order = Some(order.to_string());
        report.order_method = Some(match report.factors.as_slice() {
            [single] => single.method.unwrap_or("formula"),
            _ => "product",
        });
        report.proper_subgroup = Some(is_proper(order, &ring));
    }

    if let Some(gens) = lifted {
        if n > GENERATION_LIMIT {
            report.not_computed.push(NotComputed {
                item: "generated group".into(),
                reason: format!("n exceeds {GENERATION_LIMIT}"),
            });
        } else {
            fill_generated(&mut report, &gens, total.as_ref())?;
        }
    }
    Ok(report)
}

/// Small generating set for one factor and the pool size it was drawn from.
fn factor_generators(pp: PrimePower, gates: &Gates) -> Result<(Vec<Permutation>, Option<u64>)> {
    let q = pp.modulus();
    let translation = ResiduePoly::translation(q, 1)?
        .to_table()
        .to_permutation()?;
    if pp.k == 1 {
        let mut candidates = vec![translation];
        if q > 2 {
            candidates.push(Permutation::parse_cycles("(0,1)", q as usize)?);
        }
        return Ok((candidates, None));
    }
    let pool = pgr_generators(pp.p, pp.k, gates)?;
    let size = pool.len() as u64;
    let mut candidates = vec![translation];
    candidates.extend(pool);
    Ok((small_generating_set(&candidates), Some(size)))
}

fn lift(g: &Permutation, n: u64) -> Result<Permutation> {
    if g.degree() as u64 == n {
        Ok(g.clone())
    } else {
        crt_lift(g, n)
    }
}

fn fill_generated(
    report: &mut GroupReport,
    gens: &[Permutation],
    order: Option<&BigUint>,
) -> Result<()> {
    let n = report.n;
    let factor_labels: Vec<String> = report
        .factors
        .iter()
        .map(|f| PrimePower { p: f.p, k: f.k }.to_string())
        .collect();
    let mut per_factor = Vec::new();
    // generators are listed factor by factor; recover the labels from the CRT
    for g in gens {
        let label = report
            .factors
            .iter()
            .zip(&factor_labels)
            .find(|(f, _)| {
                let q = (f.p as u32).pow(f.k);
                (0..n as u32).any(|x| g.apply(x) % q != x % q)
            })
            .map(|(_, l)| l.clone())
            .unwrap_or_else(|| factor_labels[0].clone());
        per_factor.push(label);
    }
    for (g, factor) in gens.iter().zip(per_factor) {
        let polynomial = (n <= INTERPOLATION_LIMIT)
            .then(|| interpolate(&FunctionTable::from(g)))
            .flatten()
            .map(|f| f.to_string());
        report.generators.push(GeneratorEntry {
            factor,
            cycles: g.format_cycles(),
            polynomial,
        });
    }
    let group = PermGroup::generate_with(
        gens,
        GroupOptions {
            explicit_limit: RECOGNITION_LIMIT,
        },
    )?;
    report.generated_order = Some(group.order().to_string());
    if let Some(order) = order {
        if group.order() != order {
            return Err(Error::Internal(format!(
                "generated order {} differs from computed order {order}",
                group.order()
            )));
        }
    }
    if group.has_element_store() {
        let rec = recognize_small_group(&group)?;
        report.recognition = Some(RecognitionEntry {
            name: rec.name.to_string(),
            abelian: rec.abelian,
            element_orders: rec.element_orders,
        });
    } else {
        report.not_computed.push(NotComputed {
            item: "recognition".into(),
            reason: format!("order exceeds {RECOGNITION_LIMIT}"),
        });
    }
    Ok(())
}

/// One atlas line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub n: u64,
    /// Decimal order, or `"gated"`.
    pub order: String,
    /// `formula`, `enumeration`, `product`, or `gated`.
    pub method: String,
    pub factorization: String,
}

impl From<&GroupReport> for AtlasRecord {
    fn from(r: &GroupReport) -> Self {
        AtlasRecord {
            n: r.n,
            order: r.order.clone().unwrap_or_else(|| "gated".into()),
            method: r.order_method.unwrap_or("gated").to_string(),
            factorization: r.factorization.clone(),
        }
    }
}

/// Order-only reports for `2..=max_n`, sorted by `n`.
pub fn atlas(max_n: u64, gates: &Gates) -> Result<Vec<GroupReport>> {
    if !(2..=10_000).contains(&max_n) {
        return Err(Error::InvalidParameters(format!(
            "atlas bound must be in [2, 10000], got {max_n}"
        )));
    }
    let opts = AnalyzeOptions {
        gates: *gates,
        with_generators: false,
    };
    (2..=max_n)
        .into_par_iter()
        .map(|n| analyze(n, &opts))
        .collect()
}

pub fn atlas_csv(reports: &[GroupReport]) -> String {
    let mut out = String::from("n,order,method,factorization\n");
    for r in reports {
        let rec = AtlasRecord::from(r);
        out.push_str(&format!(
            "{},{},{},{}\n",
            rec.n, rec.order, rec.method, rec.factorization
        ));
    }
    out
}
