use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;

use super::enumerate::{enumerate_polynomial_functions, Gates};
use crate::error::{Error, Result};
use crate::ring::{check_prime_power, factorial, is_below_factorial, PrimePower, RingSpec};

/// The closed form `p! [(p-1) p^((k^2+k-4)/2)]^p`, without checking `p >= k`.
pub fn pgr_formula_value(p: u64, k: u32) -> Result<BigUint> {
    check_prime_power(p, k)?;
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "counting formula needs k >= 2, got {k}"
        )));
    }
    let k = k as u64;
    let exp = (k * k + k - 4) / 2;
    let inner = BigUint::from(p - 1) * BigUint::from(p).pow(exp as u32);
    Ok(factorial(p) * inner.pow(p as u32))
}

/// `|Pgr(Z/p^k)|` by the closed form, valid for `k >= 2` and `p >= k`.
/// When `p < k` the error carries the (overcounting) formula value.
pub fn pgr_order_formula(p: u64, k: u32) -> Result<BigUint> {
    let value = pgr_formula_value(p, k)?;
    if p < k as u64 {
        return Err(Error::HypothesisViolated {
            p,
            k,
            formula_value: value,
        });
    }
    Ok(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderMethod {
    /// Closed form (`p!` for prime fields).
    Formula,
    /// Exhaustive jet enumeration.
    Enumeration,
    /// Product over prime-power factors.
    Product,
}

impl OrderMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderMethod::Formula => "formula",
            OrderMethod::Enumeration => "enumeration",
            OrderMethod::Product => "product",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOrder {
    pub factor: PrimePower,
    pub order: BigUint,
    pub method: OrderMethod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgrOrder {
    pub n: u64,
    pub order: BigUint,
    pub method: OrderMethod,
    pub factors: Vec<FactorOrder>,
    /// `order < n!`.
    pub proper: bool,
}

fn bijective_count_cache() -> &'static Mutex<HashMap<(u64, u32), BigUint>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), BigUint>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of bijective polynomial functions on `Z/p^k` by exhaustive jet
/// enumeration. Results are memoized per process.
pub fn pgr_order_enumerated(p: u64, k: u32, gates: &Gates) -> Result<BigUint> {
    if let Some(v) = bijective_count_cache().lock().unwrap().get(&(p, k)) {
        return Ok(v.clone());
    }
    let census = enumerate_polynomial_functions(p, k, gates)?;
    let count = BigUint::from(census.bijective.len());
    bijective_count_cache()
        .lock()
        .unwrap()
        .insert((p, k), count.clone());
    Ok(count)
}

/// Order for one prime-power factor: `p!` when `k = 1`, closed form when
/// `p >= k`, exhaustive enumeration otherwise.
pub fn factor_order(pp: PrimePower, gates: &Gates) -> Result<FactorOrder> {
    let PrimePower { p, k } = pp;
    let (order, method) = if k == 1 {
        check_prime_power(p, k)?;
        (factorial(p), OrderMethod::Formula)
    } else if p >= k as u64 {
        (pgr_order_formula(p, k)?, OrderMethod::Formula)
    } else {
        (pgr_order_enumerated(p, k, gates)?, OrderMethod::Enumeration)
    };
    Ok(FactorOrder {
        factor: pp,
        order,
        method,
    })
}

/// `|Pgr(Z/n)|` as the product of the prime-power factor orders.
pub fn pgr_order(ring: &RingSpec, gates: &Gates) -> Result<PgrOrder> {
    let factors = ring
        .factors()
        .iter()
        .map(|&pp| factor_order(pp, gates))
        .collect::<Result<Vec<_>>>()?;
    let order = factors
        .iter()
        .fold(BigUint::from(1u32), |acc, f| acc * &f.order);
    let method = match factors.as_slice() {
        [single] => single.method,
        _ => OrderMethod::Product,
    };
    let proper = is_below_factorial(&order, ring.modulus());
    Ok(PgrOrder {
        n: ring.modulus(),
        order,
        method,
        factors,
        proper,
    })
}
