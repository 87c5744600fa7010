//! `t_n(q)` and `A_n(p,q)`, each computed two ways: by enumerating
//! permutations, and as a sum over partitions of q-hook polynomials
//! (Robinson–Schensted transports maj and imaj onto the recording and
//! insertion tableaux).

use std::collections::HashMap;
use std::fmt;
use std::num::Wrapping;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{factorial, BivarPoly, Rational};
use crate::perm::Permutation;
use crate::tableau::{hook_quotient, KernelRing, Partition};

/// Which computation produced a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    HookFormula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::HookFormula => "hook-formula",
        })
    }
}

/// Involution numbers by `t_n = t_{n-1} + (n-1) t_{n-2}`.
pub fn t_count(n: usize) -> BigInt {
    t_counts(n).pop().unwrap()
}

/// `t_0, ..., t_n`.
pub fn t_counts(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one(), BigInt::one()];
    for k in 2..=n {
        let next = &out[k - 1] + &out[k - 2] * (k - 1);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `sum over involutions pi of size n of q^maj(pi)`.
pub fn t_poly_enum(n: usize) -> BivarPoly {
    let mut counts: Vec<u64> = vec![0; n * n.saturating_sub(1) / 2 + 1];
    for pi in Permutation::involutions(n) {
        counts[pi.maj()] += 1;
    }
    BivarPoly::from_q_coeffs(counts)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn t_cache() -> &'static Mutex<HashMap<usize, BivarPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BivarPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn accumulate_t<T: KernelRing>(n: usize) -> Vec<T> {
    let deg = binom2(n);
    Partition::all(n)
        .into_par_iter()
        .fold(
            || vec![T::kzero(); deg + 1],
            |mut acc, la| {
                let shift = la.weighted_size();
                for (i, c) in hook_quotient::<T>(&la).iter().enumerate() {
                    acc[shift + i].add_from(c);
                }
                acc
            },
        )
        .reduce(
            || vec![T::kzero(); deg + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    x.add_from(y);
                }
                a
            },
        )
}

/// `t_n(q) = sum over partitions lambda of n of f^lambda(q)` via the q-hook formula.
///
/// Results are memoized; the limit computations ask for the same `n` repeatedly.
pub fn t_poly(n: usize) -> BivarPoly {
    if let Some(p) = t_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // every coefficient is at most t_n, so the u128 kernel is exact when t_n fits
    let coeffs: Vec<BigInt> = if t_count(n).to_u128().is_some() {
        accumulate_t::<Wrapping<u128>>(n).iter().map(|c| c.to_bigint()).collect()
    } else {
        accumulate_t::<BigInt>(n)
    };
    let poly = BivarPoly::from_q_coeffs(coeffs);
    t_cache().lock().unwrap().insert(n, poly.clone());
    poly
}

/// `sum over pi in S_n of p^imaj(pi) q^maj(pi)`.
pub fn a_poly_enum(n: usize) -> BivarPoly {
    let d = binom2(n) + 1;
    let mut counts = vec![0u64; d * d];
    for pi in Permutation::all(n) {
        counts[pi.imaj() * d + pi.maj()] += 1;
    }
    BivarPoly::from_terms(
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(idx, &c)| ((idx / d) as u32, (idx % d) as u32, c)),
    )
}

fn accumulate_a<T: KernelRing>(n: usize) -> Vec<T> {
    let d = binom2(n) + 1;
    Partition::all(n)
        .into_par_iter()
        .fold(
            || vec![T::kzero(); d * d],
            |mut acc, la| {
                let shift = la.weighted_size();
                let g = hook_quotient::<T>(&la);
                let nz: Vec<(usize, &T)> = g.iter().enumerate().filter(|(_, c)| !c.kis_zero()).collect();
                for &(i, ci) in &nz {
                    for &(j, cj) in &nz {
                        let idx = (shift + i) * d + shift + j;
                        acc[idx].add_from(&ci.kmul(cj));
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![T::kzero(); d * d],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    x.add_from(y);
                }
                a
            },
        )
}

/// `A_n(p,q) = sum over lambda of f^lambda(p) f^lambda(q)`.
pub fn a_poly(n: usize) -> BivarPoly {
    let d = binom2(n) + 1;
    let to_poly = |cells: Vec<BigInt>| {
        BivarPoly::from_terms(
            cells
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| ((idx / d) as u32, (idx % d) as u32, c)),
        )
    };
    if factorial(n).to_u128().is_some() {
        to_poly(accumulate_a::<Wrapping<u128>>(n).iter().map(|c| c.to_bigint()).collect())
    } else {
        to_poly(accumulate_a::<BigInt>(n))
    }
}

/// Integer numerators `v^D f^lambda(u/v)` with `D = C(n,2)`, for each partition of `n`.
fn scaled_f_values(n: usize, x: &Rational) -> Vec<BigInt> {
    let deg = binom2(n);
    let (u, v) = (x.numer(), x.denom());
    // table[e] = u^e v^(deg - e)
    let mut upow = vec![BigInt::one()];
    let mut vpow = vec![BigInt::one()];
    for _ in 0..deg {
        upow.push(upow.last().unwrap() * u);
        vpow.push(vpow.last().unwrap() * v);
    }
    let table: Vec<BigInt> = (0..=deg).map(|e| &upow[e] * &vpow[deg - e]).collect();
    let exact_u128 = t_count(n).to_u128().is_some();
    Partition::all(n)
        .into_par_iter()
        .map(|la| {
            let shift = la.weighted_size();
            let coeffs: Vec<BigInt> = if exact_u128 {
                hook_quotient::<Wrapping<u128>>(&la).iter().map(|c| c.to_bigint()).collect()
            } else {
                hook_quotient::<BigInt>(&la)
            };
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| c * &table[shift + i])
                .sum()
        })
        .collect()
}

/// `t_n(q)` at a rational point.
pub fn t_value(n: usize, q: &Rational) -> Rational {
    if q.is_one() {
        return Rational::from_integer(t_count(n));
    }
    t_poly(n).eval_q(q)
}

/// `A_n(p,q)` at a rational point, without materializing the bivariate polynomial.
pub fn a_value(n: usize, p: &Rational, q: &Rational) -> Rational {
    if p.is_one() && q.is_one() {
        return Rational::from_integer(factorial(n));
    }
    let deg = binom2(n) as u32;
    let fp = scaled_f_values(n, p);
    let fq = if p == q { fp.clone() } else { scaled_f_values(n, q) };
    let num: BigInt = fp.iter().zip(&fq).map(|(a, b)| a * b).sum();
    let den = p.denom().pow(deg) * q.denom().pow(deg);
    Rational::new(num, den)
}
