//! Finite-n values and closed-form limits of the containment ratios, together
//! with the auxiliary quantities behind their convergence: `t`/`A` ratios,
//! the partial sums `xi_n`, the infinite products they approach, a certified
//! logarithmic inequality, and involution-count ratios.
//!
//! Everything is exact rational arithmetic; decimals appear only in rendering.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::contain::{inner_pair_sum, inner_sum, perms_with_p, perms_with_q, FCache};
use crate::error::LimitError;
use crate::exact::{
    binomial, factorial, neg_log1m_bounds, qbinomial_value, qfactorial_value, qint_value, to_decimal, Rational,
};
use crate::jset::{j2_set, j_set};
use crate::perm::Permutation;
use crate::qstat::{a_value, t_count, t_counts, t_value};
use crate::rsk::all_syt;
use crate::tableau::{enumerate_syt, Partition, SkewShape, Tableau};

/// A positive real parameter and its contraction `bar = min(r, 1/r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealParam {
    value: Rational,
    bar: Rational,
}

impl RealParam {
    pub fn new(value: Rational) -> Result<Self, LimitError> {
        if !value.is_positive() {
            return Err(LimitError::NonPositive(value.to_string()));
        }
        let bar = if value > Rational::one() { value.recip() } else { value.clone() };
        Ok(RealParam { value, bar })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn bar(&self) -> &Rational {
        &self.bar
    }

    /// `1 - bar`.
    pub fn contraction(&self) -> Rational {
        Rational::one() - &self.bar
    }
}

fn param(r: &Rational) -> Result<RealParam, LimitError> {
    RealParam::new(r.clone())
}

fn unit_interval(r: &Rational, name: &str) -> Result<(), LimitError> {
    if r.is_positive() && r < &Rational::one() {
        Ok(())
    } else {
        Err(LimitError::NotInUnitInterval(format!("{name} = {r}")))
    }
}

fn int(x: BigInt) -> Rational {
    Rational::from_integer(x)
}

fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// `(t_{n+1}(q)/[n+1]_q!) / (t_n(q)/[n]_q!)`, which tends to `1 - bar q`.
pub fn t_ratio(q: &Rational, n: usize) -> Result<Rational, LimitError> {
    param(q)?;
    if q.is_one() {
        return Ok(Rational::new(t_count(n + 1), t_count(n) * (n + 1)));
    }
    Ok(t_value(n + 1, q) / (t_value(n, q) * qint_value(n + 1, q)))
}

/// `(A_{n+1}/([n+1]_p! [n+1]_q!)) / (A_n/([n]_p! [n]_q!))`, which tends to `(1 - bar p)(1 - bar q)`.
pub fn a_ratio(p: &Rational, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    param(p)?;
    param(q)?;
    Ok(a_value(n + 1, p, q) / (a_value(n, p, q) * qint_value(n + 1, p) * qint_value(n + 1, q)))
}

pub fn t_ratio_limit(q: &Rational) -> Result<Rational, LimitError> {
    Ok(param(q)?.contraction())
}

pub fn a_ratio_limit(p: &Rational, q: &Rational) -> Result<Rational, LimitError> {
    Ok(param(p)?.contraction() * param(q)?.contraction())
}

/// Memoized `t_k(q)` for one evaluation.
struct TVals<'a> {
    q: &'a Rational,
    cache: HashMap<usize, Rational>,
}

impl<'a> TVals<'a> {
    fn new(q: &'a Rational) -> Self {
        TVals { q, cache: HashMap::new() }
    }

    fn get(&mut self, k: usize) -> Rational {
        let q = self.q;
        self.cache.entry(k).or_insert_with(|| t_value(k, q)).clone()
    }
}

/// Memoized `A_k(p,q)` for one evaluation.
struct AVals<'a> {
    p: &'a Rational,
    q: &'a Rational,
    cache: HashMap<usize, Rational>,
}

impl<'a> AVals<'a> {
    fn new(p: &'a Rational, q: &'a Rational) -> Self {
        AVals { p, q, cache: HashMap::new() }
    }

    fn get(&mut self, k: usize) -> Rational {
        let (p, q) = (self.p, self.q);
        self.cache.entry(k).or_insert_with(|| a_value(k, p, q)).clone()
    }
}

fn qb(n: usize, k: usize, q: &Rational) -> Rational {
    qbinomial_value(n as i64, k as i64, q)
}

/// `sum over pi in I_N(sigma) of q^maj(pi^{>m})` for `N = rest + m`, from the closed form.
fn inv_numerator(sigma: &Permutation, rest: usize, q: &Rational, t: &mut TVals) -> Rational {
    let m = sigma.len();
    let mut acc = Rational::zero();
    for j in j_set(sigma).iter() {
        if let Some(k) = (rest + j).checked_sub(m) {
            acc += pow(q, sigma.suffix(j).unwrap().maj()) * qb(rest, k, q) * t.get(k);
        }
    }
    acc
}

/// `sum over pi in I_N of q^maj(pi^{>m})` for `N = rest + m`, from the closed form.
fn inv_denominator(m: usize, rest: usize, q: &Rational, t: &mut TVals) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=m {
        if let Some(k) = (rest + j).checked_sub(m) {
            acc += int(t_count(j) * binomial(m, j)) * qfactorial_value(m - j, q) * qb(rest, k, q) * t.get(k);
        }
    }
    acc
}

fn check_size(n: usize, min: usize) -> Result<usize, LimitError> {
    n.checked_sub(min).ok_or(LimitError::TooSmall { n, min })
}

/// Ratio of `q^maj(pi^{>m})`-weighted involutions of size `n` containing
/// `sigma` to all involutions of size `n`.
pub fn qlim1_lhs(sigma: &Permutation, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    param(q)?;
    let m = sigma.len();
    let rest = check_size(n, m)?;
    let mut t = TVals::new(q);
    Ok(inv_numerator(sigma, rest, q, &mut t) / inv_denominator(m, rest, q, &mut t))
}

/// Same ratio by listing involutions.
pub fn qlim1_lhs_brute(sigma: &Permutation, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    let m = sigma.len();
    check_size(n, m)?;
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for pi in Permutation::involutions(n) {
        let w = pow(q, pi.suffix(m).unwrap().maj());
        if pi.restrict_low(m).unwrap() == *sigma {
            num += &w;
        }
        den += w;
    }
    Ok(num / den)
}

fn inv_limit_denominator(m: usize, q: &Rational, c: &Rational) -> Rational {
    (0..=m)
        .map(|j| qfactorial_value(m, q) * int(t_count(j) * binomial(m, j)) * pow(c, j))
        .sum()
}

/// Closed-form limit of [`qlim1_lhs`] as `n -> infinity`.
pub fn qlim1_rhs(sigma: &Permutation, q: &Rational) -> Result<Rational, LimitError> {
    let c = param(q)?.contraction();
    let m = sigma.len();
    let num: Rational = j_set(sigma)
        .iter()
        .map(|j| pow(q, sigma.suffix(j).unwrap().maj()) * qb(m, j, q) * qfactorial_value(j, q) * pow(&c, j))
        .sum();
    Ok(num / inv_limit_denominator(m, q, &c))
}

/// `sum over pi in S_l(sigma, tau) of p^imaj(pi_{>a}) q^maj(pi^{>b})`, from the closed form.
fn perm_numerator(sigma: &Permutation, tau: &Permutation, l: usize, p: &Rational, q: &Rational, av: &mut AVals) -> Rational {
    let (a, b) = (sigma.len(), tau.len());
    let (m, n) = (l - a, l - b);
    let mut acc = Rational::zero();
    for j in j2_set(sigma, tau).iter() {
        if let Some(k) = (n + j).checked_sub(a) {
            let w = pow(p, tau.restrict_high(j).unwrap().imaj()) * pow(q, sigma.suffix(j).unwrap().maj());
            acc += w * qb(m, k, p) * qb(n, k, q) * av.get(k);
        }
    }
    acc
}

fn perm_denominator(a: usize, b: usize, l: usize, p: &Rational, q: &Rational, av: &mut AVals) -> Rational {
    let (m, n) = (l - a, l - b);
    let mut acc = Rational::zero();
    for j in 0..=a.min(b) {
        if let Some(k) = (n + j).checked_sub(a) {
            let c = int(factorial(j) * binomial(a, j) * binomial(b, j));
            acc += c
                * qfactorial_value(b - j, p)
                * qfactorial_value(a - j, q)
                * qb(m, k, p)
                * qb(n, k, q)
                * av.get(k);
        }
    }
    acc
}

/// Ratio of `p^imaj(pi_{>a}) q^maj(pi^{>b})`-weighted permutations of size
/// `l` in `S_l(sigma, tau)` to all of `S_l`.
pub fn m2_1_lhs(sigma: &Permutation, tau: &Permutation, p: &Rational, q: &Rational, l: usize) -> Result<Rational, LimitError> {
    param(p)?;
    param(q)?;
    check_size(l, sigma.len().max(tau.len()))?;
    let mut av = AVals::new(p, q);
    Ok(perm_numerator(sigma, tau, l, p, q, &mut av) / perm_denominator(sigma.len(), tau.len(), l, p, q, &mut av))
}

fn perm_weight(pi: &Permutation, a: usize, b: usize, p: &Rational, q: &Rational) -> Rational {
    pow(p, pi.restrict_high(a).unwrap().imaj()) * pow(q, pi.suffix(b).unwrap().maj())
}

/// Same ratio by listing `S_l`.
pub fn m2_1_lhs_brute(sigma: &Permutation, tau: &Permutation, p: &Rational, q: &Rational, l: usize) -> Result<Rational, LimitError> {
    let (a, b) = (sigma.len(), tau.len());
    check_size(l, a.max(b))?;
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for pi in Permutation::all(l) {
        let w = perm_weight(&pi, a, b, p, q);
        if pi.restrict_low(a).unwrap() == *sigma && pi.prefix(b).unwrap() == *tau {
            num += &w;
        }
        den += w;
    }
    Ok(num / den)
}

fn perm_limit_denominator(a: usize, b: usize, p: &Rational, q: &Rational, cp: &Rational, cq: &Rational) -> Rational {
    (0..=a)
        .map(|j| {
            qfactorial_value(b, p)
                * qfactorial_value(a, q)
                * int(factorial(j) * binomial(a, j) * binomial(b, j))
                * pow(cp, j)
                * pow(cq, j)
        })
        .sum()
}

/// Closed-form limit of [`m2_1_lhs`].
pub fn m2_1_rhs(sigma: &Permutation, tau: &Permutation, p: &Rational, q: &Rational) -> Result<Rational, LimitError> {
    let cp = param(p)?.contraction();
    let cq = param(q)?.contraction();
    let (a, b) = (sigma.len(), tau.len());
    let num: Rational = j2_set(sigma, tau)
        .iter()
        .map(|j| {
            pow(p, tau.restrict_high(j).unwrap().imaj())
                * pow(q, sigma.suffix(j).unwrap().maj())
                * qb(b, j, p)
                * qb(a, j, q)
                * qfactorial_value(j, p)
                * qfactorial_value(j, q)
                * pow(&cp, j)
                * pow(&cq, j)
        })
        .sum();
    Ok(num / perm_limit_denominator(a, b, p, q, &cp, &cq))
}

fn straight(a: &Tableau) -> Result<&Partition, LimitError> {
    if a.shape().is_straight() {
        Ok(a.shape().outer())
    } else {
        Err(LimitError::Pattern("pattern tableau must have a straight shape".into()))
    }
}

/// Ratio of `q^maj(T_{>m})`-weighted tableaux of size `n` containing `A` to
/// all tableaux of size `n`, assembled from the involution formulas over
/// every `sigma` with `P(sigma) = A`.
pub fn m3_lhs(a: &Tableau, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    param(q)?;
    straight(a)?;
    let m = a.size();
    let rest = check_size(n, m)?;
    let mut t = TVals::new(q);
    let num: Rational = perms_with_p(a).iter().map(|s| inv_numerator(s, rest, q, &mut t)).sum();
    Ok(num / inv_denominator(m, rest, q, &mut t))
}

/// Same ratio by listing standard tableaux of size `n`.
pub fn m3_lhs_brute(a: &Tableau, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    let m = a.size();
    check_size(n, m)?;
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for t in all_syt(n) {
        let w = pow(q, t.restrict_high(m).unwrap().maj());
        if t.restrict_low(m).unwrap() == *a {
            num += &w;
        }
        den += w;
    }
    Ok(num / den)
}

/// Closed-form limit of [`m3_lhs`].
pub fn m3_rhs(a: &Tableau, q: &Rational) -> Result<Rational, LimitError> {
    let c = param(q)?.contraction();
    let alpha = straight(a)?;
    let m = a.size();
    let mut cache = FCache::default();
    let num: Rational = (0..=m)
        .map(|j| qb(m, j, q) * qfactorial_value(j, q) * pow(&c, j) * inner_sum(alpha, j, &mut cache).eval_q(q))
        .sum();
    Ok(num / inv_limit_denominator(m, q, &c))
}

/// Pair analog of [`m3_lhs`]: `p^maj(P_{>a}) q^maj(Q_{>b})` over same-shape
/// pairs of size `l` containing `(A, B)`, relative to all same-shape pairs.
pub fn m3_1_lhs(a: &Tableau, b: &Tableau, p: &Rational, q: &Rational, l: usize) -> Result<Rational, LimitError> {
    param(p)?;
    param(q)?;
    straight(a)?;
    straight(b)?;
    check_size(l, a.size().max(b.size()))?;
    let mut av = AVals::new(p, q);
    let taus = perms_with_q(b);
    let mut num = Rational::zero();
    for s in perms_with_p(a) {
        for t in &taus {
            num += perm_numerator(&s, t, l, p, q, &mut av);
        }
    }
    Ok(num / perm_denominator(a.size(), b.size(), l, p, q, &mut av))
}

/// Same ratio by listing tableau pairs of size `l`.
pub fn m3_1_lhs_brute(a: &Tableau, b: &Tableau, p: &Rational, q: &Rational, l: usize) -> Result<Rational, LimitError> {
    let (sa, sb) = (a.size(), b.size());
    check_size(l, sa.max(sb))?;
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for la in Partition::all(l) {
        let tabs = enumerate_syt(&SkewShape::straight(la));
        for pt in &tabs {
            let wp = pow(p, pt.restrict_high(sa).unwrap().maj());
            let pin = pt.restrict_low(sa).unwrap() == *a;
            for qt in &tabs {
                let w = &wp * pow(q, qt.restrict_high(sb).unwrap().maj());
                if pin && qt.restrict_low(sb).unwrap() == *b {
                    num += &w;
                }
                den += w;
            }
        }
    }
    Ok(num / den)
}

/// Closed-form limit of [`m3_1_lhs`].
pub fn m3_1_rhs(a: &Tableau, b: &Tableau, p: &Rational, q: &Rational) -> Result<Rational, LimitError> {
    let cp = param(p)?.contraction();
    let cq = param(q)?.contraction();
    let (alpha, beta) = (straight(a)?, straight(b)?);
    let (sa, sb) = (a.size(), b.size());
    let mut cache = FCache::default();
    let num: Rational = (0..=sa)
        .map(|j| {
            qb(sb, j, p)
                * qb(sa, j, q)
                * qfactorial_value(j, p)
                * qfactorial_value(j, q)
                * pow(&cp, j)
                * pow(&cq, j)
                * inner_pair_sum(alpha, beta, j, &mut cache).eval(p, q)
        })
        .sum();
    Ok(num / perm_limit_denominator(sa, sb, p, q, &cp, &cq))
}

/// One row of a convergence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub value: Rational,
    pub gap: Rational,
}

/// Finite-n values of a sequence against its limit, with exact gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub name: String,
    pub limit: Rational,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Evaluates `f` at every `n` (in parallel) and records `|f(n) - limit|`.
    pub fn build<F>(name: &str, limit: Rational, ns: &[usize], f: F) -> Result<Self, LimitError>
    where
        F: Fn(usize) -> Result<Rational, LimitError> + Sync,
    {
        let values: Vec<Result<Rational, LimitError>> = ns.par_iter().map(|&n| f(n)).collect();
        let mut rows = Vec::with_capacity(ns.len());
        for (&n, v) in ns.iter().zip(values) {
            let value = v?;
            let gap = (&value - &limit).abs();
            rows.push(ConvergenceRow { n, value, gap });
        }
        Ok(ConvergenceReport { name: name.to_string(), limit, rows })
    }

    pub fn last_gap(&self) -> Option<&Rational> {
        self.rows.last().map(|r| &r.gap)
    }

    /// Gaps strictly decrease over the final `tail` rows.
    pub fn gaps_eventually_decreasing(&self, tail: usize) -> bool {
        let start = self.rows.len().saturating_sub(tail);
        self.rows[start..].windows(2).all(|w| w[1].gap < w[0].gap)
    }

    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("n,value,limit,gap\n");
        let lim = to_decimal(&self.limit, digits);
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.n, to_decimal(&r.value, digits), lim, to_decimal(&r.gap, digits)));
        }
        out
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n,
                    "value": to_decimal(&r.value, digits),
                    "gap": to_decimal(&r.gap, digits),
                    "exact": r.value.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "limit": to_decimal(&self.limit, digits),
            "limit_exact": self.limit.to_string(),
            "rows": rows,
        })
    }
}

/// Outcome of the certified check of
/// `sum i log(1/(1-q^i)) < (1 + q/(1-q)^2)(1 + log(1/(1-q)))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "ser_rational")]
    pub q: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub lhs_upper: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs_lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub margin: Rational,
    pub terms: usize,
    pub holds: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_decimal(r, crate::exact::DEFAULT_DIGITS))
}

const LOG_BITS: u32 = 160;

/// Upper bound on the left side (finite sum of upper log bounds plus a
/// geometric tail) against a lower bound on the right side.
pub fn check_bound(q: &Rational) -> Result<BoundReport, LimitError> {
    unit_interval(q, "q")?;
    let one = Rational::one();
    let oneq = &one - q;
    let eps = Rational::new(BigInt::one(), BigInt::one() << 120);
    // tail for i > I: log(1/(1-q^i)) <= q^i/(1-q^{I+1}), and
    // sum_{i>I} i q^i = q^{I+1}((I+1) - I q)/(1-q)^2
    let tail = |i_max: usize, qnext: &Rational| -> Rational {
        let ii = Rational::from_integer(BigInt::from(i_max));
        qnext * (&ii + &one - &ii * q) / (&oneq * &oneq) / (&one - qnext)
    };
    let mut lhs = Rational::zero();
    let mut qi = q.clone();
    let mut i = 1;
    loop {
        let (_, hi) = neg_log1m_bounds(&qi, LOG_BITS);
        lhs += hi * Rational::from_integer(BigInt::from(i));
        qi *= q;
        let t = tail(i, &qi);
        if t < eps {
            lhs += t;
            break;
        }
        i += 1;
    }
    let (lo, _) = neg_log1m_bounds(q, LOG_BITS);
    let rhs = (&one + q / (&oneq * &oneq)) * (&one + lo);
    let margin = &rhs - &lhs;
    Ok(BoundReport { q: q.clone(), holds: margin.is_positive(), lhs_upper: lhs, rhs_lower: rhs, margin, terms: i })
}

/// `xi_n(q) = t_n(q) / ((1-q)^n [n]_q!)`, the sum of principal specializations over partitions of `n`.
pub fn xi_partial(q: &Rational, n: usize) -> Result<Rational, LimitError> {
    unit_interval(q, "q")?;
    Ok(t_value(n, q) / (pow(&(Rational::one() - q), n) * qfactorial_value(n, q)))
}

/// Two-variable analog `A_n(p,q) / ((1-p)^n (1-q)^n [n]_p! [n]_q!)`.
pub fn xi2_partial(p: &Rational, q: &Rational, n: usize) -> Result<Rational, LimitError> {
    unit_interval(p, "p")?;
    unit_interval(q, "q")?;
    let one = Rational::one();
    let den = pow(&(&one - p), n) * pow(&(&one - q), n) * qfactorial_value(n, p) * qfactorial_value(n, q);
    Ok(a_value(n, p, q) / den)
}

/// A finite product with a certified bound on its distance to the infinite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedProduct {
    pub value: Rational,
    /// Largest total degree `s` included.
    pub terms: usize,
    /// The infinite product lies in `[value, value + tail_bound]`; the bound
    /// covers both the omitted factors and the rounding of `value`.
    pub tail_bound: Rational,
}

/// Running product rounded down to a fixed binary precision. Each rounding
/// loses at most `2^-bits`, later magnified by at most the final product, so
/// after `steps` roundings the exact partial product is below
/// `value / (1 - steps 2^-bits)`.
struct LowerProduct {
    value: Rational,
    bits: u64,
    steps: u64,
}

impl LowerProduct {
    fn new(target: &Rational) -> Self {
        let bits = (target.denom().bits() + 64).saturating_sub(target.numer().bits()).max(64);
        LowerProduct { value: Rational::one(), bits, steps: 0 }
    }

    fn divide(&mut self, factor: &Rational) {
        let scale = BigInt::one() << self.bits;
        self.value = Rational::new((&self.value / factor * &scale).floor().to_integer(), scale);
        self.steps += 1;
    }

    /// Width of an interval `[value, value + w]` holding the infinite product,
    /// given a bound `T < 1` on the log of the omitted factors (`e^T <= 1/(1-T)`).
    fn enclosure(&self, log_tail: &Rational) -> Option<Rational> {
        let one = Rational::one();
        let eps = Rational::new(BigInt::from(self.steps), BigInt::one() << self.bits);
        (log_tail < &one && eps < one).then(|| &self.value / ((&one - eps) * (&one - log_tail)) - &self.value)
    }
}

/// `sum_{s > S} s r^s` and `sum_{s > S} r^s` in closed form.
fn geometric_tails(r: &Rational, s_max: usize) -> (Rational, Rational) {
    let one = Rational::one();
    let or = &one - r;
    let rn = pow(r, s_max + 1);
    let s = Rational::from_integer(BigInt::from(s_max));
    ((&rn * (&s + &one - &s * r)) / (&or * &or), &rn / &or)
}

/// `prod_{i>=1} (1-q^i)^{-1} prod_{0<=i<j} (1-q^{i+j})^{-1}`, grouped by
/// `s = i + j` as `prod_s (1-q^s)^{-(1 + ceil(s/2))}`, truncated so the
/// enclosure width is below `tol / 10`.
pub fn xi_limit_product(q: &Rational, tol: &Rational) -> Result<TruncatedProduct, LimitError> {
    unit_interval(q, "q")?;
    let one = Rational::one();
    let target = tol / Rational::from_integer(10.into());
    let half = Rational::new(1.into(), 2.into());
    let three_halves = Rational::new(3.into(), 2.into());
    let mut prod = LowerProduct::new(&target);
    let mut s = 0;
    loop {
        s += 1;
        let factor = &one - pow(q, s);
        for _ in 0..1 + s.div_ceil(2) {
            prod.divide(&factor);
        }
        // exponent 1 + ceil(s/2) <= (s + 3)/2, and -log(1 - x) <= x / (1 - q^{S+1})
        let (lin, geo) = geometric_tails(q, s);
        let log_tail = (&half * lin + &three_halves * geo) / (&one - pow(q, s + 1));
        if let Some(bound) = prod.enclosure(&log_tail) {
            if bound < target {
                return Ok(TruncatedProduct { value: prod.value, terms: s, tail_bound: bound });
            }
        }
    }
}

/// `prod_{i,j>=0, i+j>0} (1 - p^i q^j)^{-1}` truncated at total degree `S`
/// so the enclosure width is below `tol / 10`.
pub fn xi2_limit_product(p: &Rational, q: &Rational, tol: &Rational) -> Result<TruncatedProduct, LimitError> {
    unit_interval(p, "p")?;
    unit_interval(q, "q")?;
    let one = Rational::one();
    let r = if p > q { p.clone() } else { q.clone() };
    let target = tol / Rational::from_integer(10.into());
    let mut prod = LowerProduct::new(&target);
    let mut s = 0;
    loop {
        s += 1;
        for i in 0..=s {
            prod.divide(&(&one - pow(p, i) * pow(q, s - i)));
        }
        // s + 1 factors of total degree s, each at most r^s
        let (lin, geo) = geometric_tails(&r, s);
        let log_tail = (lin + geo) / (&one - pow(&r, s + 1));
        if let Some(bound) = prod.enclosure(&log_tail) {
            if bound < target {
                return Ok(TruncatedProduct { value: prod.value, terms: s, tail_bound: bound });
            }
        }
    }
}

/// `n^a t_{n-a} / t_{n+a}` and `n^a t_n / t_{n+2a}`, both tending to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eq8 {
    pub shifted: Rational,
    pub doubled: Rational,
}

pub fn eq8_check(a: usize, n: usize) -> Result<Eq8, LimitError> {
    check_size(n, a)?;
    let t = t_counts(n + 2 * a);
    let na = num_traits::pow(BigInt::from(n), a);
    Ok(Eq8 {
        shifted: Rational::new(&na * &t[n - a], t[n + a].clone()),
        doubled: Rational::new(&na * &t[n], t[n + 2 * a].clone()),
    })
}
