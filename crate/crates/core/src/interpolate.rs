//! Newton interpolation on `Z/n`.
//!
//! Every function `Z/n -> Z/n` has a unique forward-difference expansion
//! `f(x) = sum_i d_i C(x, i)` with `d_i = (Delta^i f)(0)`. It is polynomial
//! exactly when each `d_i` is divisible by `gcd(n, i!)`, and then
//! `sum_i (d_i / i!) x(x-1)...(x-i+1)` is a representative.

use crate::poly::ResiduePoly;
use crate::ring::{inv_mod, mul_mod};
use crate::table::FunctionTable;

/// A polynomial inducing `t`, or `None` when `t` is not a polynomial function.
pub fn interpolate(t: &FunctionTable) -> Option<ResiduePoly> {
    let n = t.modulus();
    let mut diffs: Vec<u64> = t.images().iter().map(|&v| v as u64).collect();
    let mut coeffs: Vec<u64> = vec![0];
    // falling factorial x(x-1)...(x-i+1) as coefficients
    let mut falling: Vec<u64> = vec![1];
    let mut fact = 1 % n;
    for i in 0..n as usize {
        if i > 0 {
            for j in 0..diffs.len() - 1 {
                diffs[j] = (diffs[j + 1] + n - diffs[j]) % n;
            }
            diffs.pop();
            // falling *= (x - (i-1))
            let shift = (n - (i as u64 - 1) % n) % n;
            falling.push(0);
            for j in (0..falling.len()).rev() {
                let lower = if j > 0 { falling[j - 1] } else { 0 };
                falling[j] = (mul_mod(falling[j], shift, n) + lower) % n;
            }
            fact = mul_mod(fact, i as u64 % n, n);
        }
        let d = diffs[0];
        if d == 0 {
            continue;
        }
        let g = gcd(fact, n);
        if !d.is_multiple_of(g) {
            return None;
        }
        let m = n / g;
        let c = mul_mod(d / g, inv_mod((fact / g) % m, m).unwrap_or(0), m);
        if coeffs.len() < falling.len() {
            coeffs.resize(falling.len(), 0);
        }
        for (dst, &f) in coeffs.iter_mut().zip(&falling) {
            *dst = (*dst + mul_mod(c, f, n)) % n;
        }
    }
    let poly = ResiduePoly::new(n, coeffs).ok()?.canonical();
    debug_assert_eq!(&poly.to_table(), t);
    Some(poly)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
