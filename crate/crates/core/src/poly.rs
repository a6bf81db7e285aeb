//! Polynomials over `Z/n` as coefficient sequences.
//!
//! A [`ResiduePoly`] is the syntactic object. Two polynomials that induce the
//! same function on `Z/n` are generally *different* polynomials; compare
//! induced functions through [`FunctionTable`] instead.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::ring::{check_modulus, mul_mod};
use crate::table::FunctionTable;

/// A polynomial `a_0 + a_1 x + ... + a_d x^d` with coefficients in `[0, n)`.
///
/// Trailing zero coefficients are permitted; [`ResiduePoly::canonical`]
/// strips them. Derived equality is coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

/// How the parser treats coefficients outside `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Negative coefficients or coefficients `>= n` are an error.
    #[default]
    Strict,
    /// Every coefficient is reduced modulo `n` first.
    Reduce,
}

impl ResiduePoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_modulus(modulus)?;
        if let Some(&value) = coeffs.iter().find(|&&c| c >= modulus) {
            return Err(Error::OutOfRange { value, modulus });
        }
        Ok(ResiduePoly { modulus, coeffs })
    }

    /// Builds a polynomial from arbitrary integers, reducing each modulo `n`.
    pub fn from_signed(modulus: u64, coeffs: &[i64]) -> Result<Self> {
        check_modulus(modulus)?;
        let coeffs = coeffs
            .iter()
            .map(|&c| (c as i128).rem_euclid(modulus as i128) as u64)
            .collect();
        Ok(ResiduePoly { modulus, coeffs })
    }

    pub fn zero(modulus: u64) -> Result<Self> {
        Self::new(modulus, Vec::new())
    }

    pub fn constant(modulus: u64, c: u64) -> Result<Self> {
        Self::from_signed(modulus, &[c as i64])
    }

    /// The polynomial `x`.
    pub fn identity(modulus: u64) -> Result<Self> {
        Self::new(modulus, vec![0, 1])
    }

    /// `x + r`.
    pub fn translation(modulus: u64, r: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Self::new(modulus, vec![r % modulus, 1 % modulus])
    }

    pub fn monomial(modulus: u64, degree: usize, c: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c % modulus;
        Self::new(modulus, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Coefficients, `a_0` first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree of the canonical form; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// The same polynomial with trailing zero coefficients removed.
    pub fn canonical(&self) -> Self {
        let len = self.degree().map_or(0, |d| d + 1);
        ResiduePoly {
            modulus: self.modulus,
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// Horner evaluation at `x` (reduced modulo `n` first).
    pub fn eval(&self, x: u64) -> u64 {
        let n = self.modulus;
        let x = x % n;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, n) + c) % n)
    }

    pub fn to_table(&self) -> FunctionTable {
        FunctionTable::from_fn(self.modulus, |x| self.eval(x))
            .expect("modulus validated on construction")
    }

    pub fn is_permutation_polynomial(&self) -> bool {
        self.to_table().is_bijective()
    }

    /// Termwise derivative `sum i * a_i x^(i-1)`.
    pub fn formal_derivative(&self) -> Self {
        let n = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(i as u64 % n, c, n))
            .collect();
        ResiduePoly { modulus: n, coeffs }
    }

    /// Expansion of `f(x + r)`.
    pub fn shift(&self, r: u64) -> Self {
        let n = self.modulus;
        let r = r % n;
        let mut out: Vec<u64> = Vec::with_capacity(self.coeffs.len());
        // Horner on polynomials: out = out * (x + r) + a_i
        for &c in self.coeffs.iter().rev() {
            out.push(0);
            for j in (0..out.len()).rev() {
                let lower = if j > 0 { out[j - 1] } else { 0 };
                out[j] = (mul_mod(out[j], r, n) + lower) % n;
            }
            out[0] = (out[0] + c) % n;
        }
        ResiduePoly {
            modulus: n,
            coeffs: out,
        }
    }

    /// Parses either `x^3+6x^2+x` or the coefficient list `[0,1,6,1]`.
    pub fn parse(text: &str, modulus: u64, mode: ParseMode) -> Result<Self> {
        check_modulus(modulus)?;
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolyParse("empty input".into()));
        }
        let raw = if let Some(inner) = compact.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::PolyParse("unterminated coefficient list".into()))?;
            parse_list(inner)?
        } else {
            parse_terms(&compact)?
        };
        let m = modulus as i128;
        let coeffs = match mode {
            ParseMode::Strict => raw
                .iter()
                .map(|&c| {
                    if (0..m).contains(&c) {
                        Ok(c as u64)
                    } else {
                        Err(Error::PolyParse(format!(
                            "coefficient {c} outside [0, {modulus})"
                        )))
                    }
                })
                .collect::<Result<Vec<_>>>()?,
            ParseMode::Reduce => raw.iter().map(|&c| c.rem_euclid(m) as u64).collect(),
        };
        Ok(ResiduePoly { modulus, coeffs })
    }

    /// Coefficient-list form, `a_0` first, canonical (trailing zeros dropped).
    pub fn to_coeff_list(&self) -> String {
        let c = self.canonical();
        let items: Vec<String> = c.coeffs.iter().map(u64::to_string).collect();
        format!("[{}]", items.join(","))
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "polynomials over different rings"
        );
    }
}

fn parse_int(s: &str) -> Result<i128> {
    s.parse::<i128>()
        .map_err(|_| Error::PolyParse(format!("invalid integer {s:?}")))
}

fn parse_list(inner: &str) -> Result<Vec<i128>> {
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_int).collect()
}

/// Sums of signed terms; repeated degrees accumulate.
fn parse_terms(s: &str) -> Result<Vec<i128>> {
    let mut coeffs: Vec<i128> = Vec::new();
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push((negative, &s[start..i]));
            negative = ch == '-';
            start = i + 1;
        } else if (ch == '+' || ch == '-') && i == 0 {
            negative = ch == '-';
            start = 1;
        }
    }
    terms.push((negative, &s[start..]));

    for (negative, term) in terms {
        if term.is_empty() {
            return Err(Error::PolyParse("empty term".into()));
        }
        let (coeff, degree) = match term.find('x') {
            None => (parse_int(term)?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coeff = if head.is_empty() { 1 } else { parse_int(head)? };
                let tail = &term[pos + 1..];
                let degree = if tail.is_empty() {
                    1
                } else {
                    let e = tail
                        .strip_prefix('^')
                        .ok_or_else(|| Error::PolyParse(format!("malformed term {term:?}")))?;
                    e.parse::<usize>()
                        .map_err(|_| Error::PolyParse(format!("invalid exponent {e:?}")))?
                };
                (coeff, degree)
            }
        };
        if degree > 1 << 20 {
            return Err(Error::PolyParse(format!("degree {degree} too large")));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] += if negative { -coeff } else { coeff };
    }
    Ok(coeffs)
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &ResiduePoly {
    type Output = ResiduePoly;

    fn add(self, rhs: Self) -> ResiduePoly {
        self.check_same_ring(rhs);
        let n = self.modulus;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + rhs.coeff(i)) % n)
            .collect();
        ResiduePoly { modulus: n, coeffs }
    }
}

impl Sub for &ResiduePoly {
    type Output = ResiduePoly;

    fn sub(self, rhs: Self) -> ResiduePoly {
        self.check_same_ring(rhs);
        let n = self.modulus;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + n - rhs.coeff(i)) % n)
            .collect();
        ResiduePoly { modulus: n, coeffs }
    }
}

impl Mul for &ResiduePoly {
    type Output = ResiduePoly;

    fn mul(self, rhs: Self) -> ResiduePoly {
        self.check_same_ring(rhs);
        let n = self.modulus;
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return ResiduePoly {
                modulus: n,
                coeffs: Vec::new(),
            };
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, n)) % n;
            }
        }
        ResiduePoly { modulus: n, coeffs }
    }
}
