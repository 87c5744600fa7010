//! Exact arithmetic: big integers, rationals and sparse bivariate polynomials.
//!
//! Polynomials live in `Z[p, q]`. Most quantities in this crate are
//! univariate in `q`; those are the slice with p-degree zero, and
//! [`BivarPoly::in_p`] moves such a polynomial to the variable `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ExactError;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Sparse polynomial in `p` and `q` with integer coefficients.
///
/// Keys are `(p_degree, q_degree)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c * p^i * q^j`
    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn p() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `p^i q^j`
    pub fn pq_pow(i: u32, j: u32) -> Self {
        Self::monomial(i, j, 1)
    }

    /// Univariate polynomial in `q` from its coefficient list (index = degree).
    pub fn from_q_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| ((0, j as u32), c.into()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { terms }
    }

    /// Builds a polynomial from `(p_degree, q_degree, coeff)` triples, merging duplicates.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `((p_degree, q_degree), coeff)` in ascending degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (i, j);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn p_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// True when no term involves `p`.
    pub fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|k| k.0 == 0)
    }

    /// Coefficients of a `q`-only polynomial, index = degree.
    ///
    /// Terms involving `p` are ignored.
    pub fn q_coeffs(&self) -> Vec<BigInt> {
        let deg = match self.q_degree() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![BigInt::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                out[j as usize] = c.clone();
            }
        }
        out
    }

    /// Exchanges the roles of `p` and `q`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Rewrites a `q`-only polynomial in the variable `p`.
    pub fn in_p(&self) -> Self {
        debug_assert!(self.is_univariate_q());
        self.swap_vars()
    }

    /// Multiplies by `p^i q^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `p = q = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact value at a rational point.
    pub fn eval(&self, p: &Rational, q: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let dp = self.p_degree().unwrap_or(0) as usize;
        let dq = self.q_degree().unwrap_or(0) as usize;
        // Homogenize: p = a/b, q = c/d, so the value is
        // sum c_ij a^i b^(dp-i) c^j d^(dq-j) / (b^dp d^dq).
        let pa = powers(p.numer(), dp);
        let pb = powers(p.denom(), dp);
        let qc = powers(q.numer(), dq);
        let qd = powers(q.denom(), dq);
        let mut num = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            let (i, j) = (i as usize, j as usize);
            num += c * &pa[i] * &pb[dp - i] * &qc[j] * &qd[dq - j];
        }
        Rational::new(num, &pb[dp] * &qd[dq])
    }

    /// Value of a `q`-only polynomial at `q`.
    pub fn eval_q(&self, q: &Rational) -> Rational {
        self.eval(&Rational::one(), q)
    }

    /// Exact division of `q`-only polynomials; fails when the remainder is nonzero.
    pub fn div_exact_q(&self, divisor: &BivarPoly) -> Result<BivarPoly, ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if !self.is_univariate_q() || !divisor.is_univariate_q() {
            return Err(ExactError::NotUnivariate);
        }
        let mut rem = self.q_coeffs();
        let den = divisor.q_coeffs();
        let dd = den.len() - 1;
        let lead = &den[dd];
        if rem.len() < den.len() {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(ExactError::InexactDivision)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(ExactError::InexactDivision);
            }
            for (t, d) in den.iter().enumerate() {
                rem[k + t] -= &qk * d;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactError::InexactDivision);
        }
        Ok(Self::from_q_coeffs(quot))
    }

    /// JSON rendering: list of `[p_degree, q_degree, "coeff"]` triples.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serialization is infallible")
    }
}

fn powers(base: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    let mut cur = BigInt::one();
    for _ in 0..max {
        let next = &cur * base;
        out.push(cur);
        cur = next;
    }
    out.push(cur);
    out
}

impl Serialize for BivarPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, String)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.to_string()))
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples = Vec::<(u32, u32, String)>::deserialize(d)?;
        let mut out = BivarPoly::zero();
        for (i, j, c) in triples {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(i, j, c);
        }
        Ok(out)
    }
}

/// Canonical text form, e.g. `1 + 2*q + 2*q^2 + q^3` or `1 + p*q`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == Sign::Minus;
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("p", i), ("q", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                *acc.entry((i1 + i2, j1 + j2)).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BivarPoly { terms: acc }
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> BivarPoly {
        iter.fold(BivarPoly::zero(), |acc, x| acc + x)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`
pub fn qint(n: usize) -> BivarPoly {
    BivarPoly::from_q_coeffs(std::iter::repeat_n(1, n))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`
pub fn qfactorial(n: usize) -> BivarPoly {
    (1..=n).fold(BivarPoly::one(), |acc, k| &acc * &qint(k))
}

/// Gaussian binomial `[n choose k]_q`, computed by exact long division.
pub fn qbinomial(n: usize, k: usize) -> Result<BivarPoly, ExactError> {
    if k > n {
        return Err(ExactError::BinomialRange { n: n as i64, k: k as i64 });
    }
    let den = &qfactorial(k) * &qfactorial(n - k);
    qfactorial(n).div_exact_q(&den)
}

/// Signed-argument wrapper for formulas whose index ranges may fall outside `0..=n`.
pub fn qbinomial_checked(n: i64, k: i64) -> Result<BivarPoly, ExactError> {
    if n < 0 || k < 0 || k > n {
        return Err(ExactError::BinomialRange { n, k });
    }
    qbinomial(n as usize, k as usize)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `[n]_q` at a rational point.
pub fn qint_value(n: usize, q: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for _ in 0..n {
        acc += &pw;
        pw *= q;
    }
    acc
}

/// `[n]_q!` at a rational point.
pub fn qfactorial_value(n: usize, q: &Rational) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * qint_value(k, q))
}

/// `[n choose k]_q` at a rational point; zero outside `0 <= k <= n`.
pub fn qbinomial_value(n: i64, k: i64, q: &Rational) -> Rational {
    if n < 0 || k < 0 || k > n {
        return Rational::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    let mut acc = Rational::one();
    for i in 1..=k {
        acc = acc * qint_value(n - k + i, q) / qint_value(i, q);
    }
    acc
}

/// Parses `a/b` or an integer `a`. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::ParseRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Rounds `r` to `sig` significant decimal digits (half away from zero).
///
/// Plain notation is used for moderate magnitudes, `d.ddde-N` otherwise.
pub fn to_decimal(r: &Rational, sig: usize) -> String {
    let sig = sig.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(BigInt::from(10).pow(k as u32))
        } else {
            Rational::new(BigInt::one(), BigInt::from(10).pow((-k) as u32))
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(sig as i64 - 1 - e);
    let mut digits = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if digits >= BigInt::from(10).pow(sig as u32) {
        digits /= 10;
        e += 1;
    }
    let ds = digits.to_string();
    let body = if (-7..16).contains(&e) {
        if e >= 0 {
            let int_len = (e + 1) as usize;
            if ds.len() <= int_len {
                format!("{}{}", ds, "0".repeat(int_len - ds.len()))
            } else {
                let frac = ds[int_len..].trim_end_matches('0');
                if frac.is_empty() {
                    ds[..int_len].to_string()
                } else {
                    format!("{}.{}", &ds[..int_len], frac)
                }
            }
        } else {
            let lead = "0".repeat((-e - 1) as usize);
            format!("0.{}{}", lead, ds.trim_end_matches('0'))
        }
    } else {
        let frac = ds[1..].trim_end_matches('0');
        if frac.is_empty() {
            format!("{}e{}", &ds[..1], e)
        } else {
            format!("{}.{}e{}", &ds[..1], frac, e)
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Rigorous bounds `(lo, hi)` on `-log(1 - x)` for `0 < x < 1`.
///
/// The series `sum x^k / k` is summed in fixed point with `bits` fractional
/// bits, rounding every step down for `lo` and up for `hi`; the remainder after
/// the last term is bounded by `x^(k+1) / ((k+1)(1-x))` and added to `hi`.
pub fn neg_log1m_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(x.is_positive() && x < &Rational::one(), "x must lie in (0, 1)");
    let scale = BigInt::one() << bits;
    let (u, v) = (x.numer().clone(), x.denom().clone());
    let gap = &v - &u;
    let mut pw_lo = (&scale * &u).div_floor(&v);
    let mut pw_hi = (&scale * &u).div_ceil(&v);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k = BigInt::one();
    loop {
        lo += pw_lo.div_floor(&k);
        hi += pw_hi.div_ceil(&k);
        pw_lo = (&pw_lo * &u).div_floor(&v);
        pw_hi = (&pw_hi * &u).div_ceil(&v);
        k += 1;
        // remainder bound in units of 2^-bits: pw_hi * v / (k * (v - u))
        let rem = (&pw_hi * &v).div_ceil(&(&k * &gap));
        if rem <= BigInt::one() || pw_hi.is_zero() {
            hi += rem + 1;
            break;
        }
    }
    (Rational::new(lo, scale.clone()), Rational::new(hi, scale))
}

/// Default number of significant digits in reports.
pub const DEFAULT_DIGITS: usize = 12;
