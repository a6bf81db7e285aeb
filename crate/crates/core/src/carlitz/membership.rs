//! Deciding whether a table is a polynomial function on `Z/p^k`.
//!
//! A table `t` is polynomial exactly when, for each base point `x < p`, the
//! differences `t(x + mp) - t(x)` lie in the span of the columns
//! `m -> (mp)^i`, `i = 1..k-1`, over `Z/p^k`. That span is decided by
//! diagonalizing the system over the chain ring `Z/p^k` with minimal
//! valuation pivots, which is exact for every `p` and `k`.

use super::jet::{level_modulus, CarlitzJet};
use crate::error::{Error, Result};
use crate::ring::{check_prime_power, inv_mod, mul_mod, pow_mod, valuation};
use crate::table::FunctionTable;

/// Solves `a * c = b` over `Z/p^k`. `a` is row-major with `cols` columns.
pub(crate) fn solve_prime_power(
    p: u64,
    k: u32,
    mut a: Vec<Vec<u64>>,
    mut b: Vec<u64>,
    cols: usize,
) -> Option<Vec<u64>> {
    let n = p.pow(k);
    let rows = a.len();
    // column transform: c = v * y
    let mut v: Vec<Vec<u64>> = (0..cols)
        .map(|i| (0..cols).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut rank = 0;
    for t in 0..cols.min(rows) {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for (r, row) in a.iter().enumerate().skip(t) {
            for (c, &e) in row.iter().enumerate().skip(t) {
                if e == 0 {
                    continue;
                }
                let val = valuation(e, p, k);
                if best.is_none_or(|(bv, _, _)| val < bv) {
                    best = Some((val, r, c));
                    if val == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((val, r, c)) = best else { break };
        a.swap(t, r);
        b.swap(t, r);
        for row in a.iter_mut() {
            row.swap(t, c);
        }
        for row in v.iter_mut() {
            row.swap(t, c);
        }
        let scale = p.pow(val);
        let unit_inv = inv_mod(a[t][t] / scale, n).expect("pivot unit part is invertible");
        let pivot_row = a[t].clone();
        for r in t + 1..rows {
            if a[r][t] == 0 {
                continue;
            }
            let f = mul_mod(a[r][t] / scale, unit_inv, n);
            for (e, &pe) in a[r].iter_mut().zip(&pivot_row).skip(t) {
                *e = (*e + n - mul_mod(f, pe, n)) % n;
            }
            b[r] = (b[r] + n - mul_mod(f, b[t], n)) % n;
        }
        for c in t + 1..cols {
            if a[t][c] == 0 {
                continue;
            }
            let f = mul_mod(a[t][c] / scale, unit_inv, n);
            a[t][c] = 0;
            for row in v.iter_mut() {
                row[c] = (row[c] + n - mul_mod(f, row[t], n)) % n;
            }
        }
        rank += 1;
    }
    if b[rank..].iter().any(|&e| e != 0) {
        return None;
    }
    let mut y = vec![0u64; cols];
    for t in 0..rank {
        let val = valuation(a[t][t], p, k);
        let scale = p.pow(val);
        if !b[t].is_multiple_of(scale) {
            return None;
        }
        let unit_inv = inv_mod(a[t][t] / scale, n).expect("unit");
        y[t] = mul_mod(b[t] / scale, unit_inv, n);
    }
    Some(
        v.iter()
            .map(|row| {
                row.iter()
                    .zip(&y)
                    .fold(0, |acc, (&vij, &yj)| (acc + mul_mod(vij, yj, n)) % n)
            })
            .collect(),
    )
}

/// Recovers a jet whose extension is `t`, or `None` when `t` is not a
/// polynomial function. For `p >= k` the jet is unique.
pub fn jet_of_table(t: &FunctionTable, p: u64, k: u32) -> Result<Option<CarlitzJet>> {
    let n = check_prime_power(p, k)?;
    if t.modulus() != n {
        return Err(Error::SizeMismatch {
            left: t.modulus() as usize,
            right: n as usize,
        });
    }
    let fibers = n / p;
    let cols = k as usize - 1;
    let mut rows_out = Vec::with_capacity(p as usize);
    for x in 0..p {
        let base = t.get(x);
        let mut row = vec![base];
        if cols > 0 {
            let a: Vec<Vec<u64>> = (0..fibers)
                .map(|m| (1..=cols as u64).map(|i| pow_mod(m * p, i, n)).collect())
                .collect();
            let b: Vec<u64> = (0..fibers)
                .map(|m| (t.get(x + m * p) + n - base) % n)
                .collect();
            let Some(sol) = solve_prime_power(p, k, a, b, cols) else {
                return Ok(None);
            };
            row.extend(
                sol.iter()
                    .enumerate()
                    .map(|(i, &c)| c % level_modulus(p, k, i as u32 + 1)),
            );
        }
        rows_out.push(row);
    }
    let jet = CarlitzJet::from_rows_unchecked(p, k, rows_out);
    if &jet.extend() != t {
        return Err(Error::Internal(
            "recovered jet does not reproduce the table".into(),
        ));
    }
    Ok(Some(jet))
}

pub fn is_polynomial_function(t: &FunctionTable, p: u64, k: u32) -> Result<bool> {
    Ok(jet_of_table(t, p, k)?.is_some())
}
