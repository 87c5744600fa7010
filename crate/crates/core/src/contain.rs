//! Containment for permutations and tableaux, the sets of objects containing
//! a fixed pattern, and exact checks of the generating-function identities
//! relating those sets to `t_n(q)`, `A_n(p,q)` and skew `f`-polynomials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{binomial, factorial, qbinomial, qfactorial, BivarPoly, Rational};
use crate::jset::{j2_set, j_set};
use crate::perm::Permutation;
use crate::qstat::{a_poly, t_count, t_poly};
use crate::rsk::{all_syt, p_tableau, rs, rs_inverse};
use crate::tableau::{enumerate_syt, f_poly, syt_count, Partition, SkewShape, Tableau};

/// `pi_{<=k} = sigma` with `k = |sigma|`.
pub fn contains(pi: &Permutation, sigma: &Permutation) -> bool {
    sigma.len() <= pi.len() && pi.restrict_low(sigma.len()).is_ok_and(|r| &r == sigma)
}

/// `T_{<=k} = A` with `k = |A|`.
pub fn tab_contains(t: &Tableau, a: &Tableau) -> bool {
    a.size() <= t.size() && t.restrict_low(a.size()).is_ok_and(|r| &r == a)
}

pub fn pair_contains(p: &Tableau, q: &Tableau, a: &Tableau, b: &Tableau) -> bool {
    tab_contains(p, a) && tab_contains(q, b)
}

/// Involutions of size `n` containing `sigma`.
pub fn enum_inv_containing(sigma: &Permutation, n: usize) -> Vec<Permutation> {
    Permutation::involutions(n).into_iter().filter(|pi| contains(pi, sigma)).collect()
}

/// `{pi in S_n : pi_{<=a} = sigma, pi^{<=b} = tau}`.
pub fn enum_perm_containing(sigma: &Permutation, tau: &Permutation, n: usize) -> Vec<Permutation> {
    if sigma.len() > n || tau.len() > n {
        return Vec::new();
    }
    Permutation::all(n)
        .filter(|pi| contains(pi, sigma) && pi.prefix(tau.len()).is_ok_and(|t| &t == tau))
        .collect()
}

/// Standard tableaux of size `n` containing `a`.
pub fn enum_tab_containing(a: &Tableau, n: usize) -> Vec<Tableau> {
    all_syt(n).into_iter().filter(|t| tab_contains(t, a)).collect()
}

/// Same-shape pairs `(P, Q)` of size `n` with `P ⊇ a` and `Q ⊇ b`.
pub fn enum_pair_containing(a: &Tableau, b: &Tableau, n: usize) -> Vec<(Tableau, Tableau)> {
    let mut out = Vec::new();
    for la in Partition::all(n) {
        let all = enumerate_syt(&SkewShape::straight(la));
        let ps: Vec<&Tableau> = all.iter().filter(|t| tab_contains(t, a)).collect();
        let qs: Vec<&Tableau> = all.iter().filter(|t| tab_contains(t, b)).collect();
        for p in &ps {
            for q in &qs {
                out.push(((*p).clone(), (*q).clone()));
            }
        }
    }
    out
}

/// Every permutation with insertion tableau `a`.
pub fn perms_with_p(a: &Tableau) -> Vec<Permutation> {
    enumerate_syt(a.shape())
        .iter()
        .map(|q| rs_inverse(a, q).expect("same straight shape"))
        .collect()
}

/// Every permutation with recording tableau `b`.
pub fn perms_with_q(b: &Tableau) -> Vec<Permutation> {
    enumerate_syt(b.shape())
        .iter()
        .map(|p| rs_inverse(p, b).expect("same straight shape"))
        .collect()
}

/// Robinson–Schensted maps the involutions containing some `sigma` with
/// `P(sigma) = a` onto the tableaux containing `a`.
pub fn check_tab_bijection(a: &Tableau, n: usize) -> bool {
    let mut image: Vec<Tableau> = perms_with_p(a)
        .iter()
        .flat_map(|sigma| enum_inv_containing(sigma, n))
        .map(|pi| p_tableau(&pi))
        .collect();
    let count = image.len();
    image.sort();
    image.dedup();
    let mut target = enum_tab_containing(a, n);
    target.sort();
    count == image.len() && image == target
}

/// Pair version: permutations with `pi_{<=a} = sigma`, `pi^{<=b} = tau`,
/// `P(sigma) = a`, `Q(tau) = b` go bijectively onto pairs containing `(a, b)`.
pub fn check_pair_bijection(a: &Tableau, b: &Tableau, n: usize) -> bool {
    let sigmas = perms_with_p(a);
    let taus = perms_with_q(b);
    let mut image: Vec<(Tableau, Tableau)> = Vec::new();
    for s in &sigmas {
        for t in &taus {
            image.extend(enum_perm_containing(s, t, n).iter().map(rs));
        }
    }
    let count = image.len();
    image.sort();
    image.dedup();
    let mut target = enum_pair_containing(a, b, n);
    target.sort();
    count == image.len() && image == target
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one family of identities over a range of instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub range: BTreeMap<String, usize>,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(theorem: &str, range: &[(&str, usize)]) -> Self {
        Report {
            theorem: theorem.to_string(),
            range: range.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check<T: PartialEq + std::fmt::Display>(&mut self, instance: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure { instance: instance(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn qbin(n: usize, k: usize) -> BivarPoly {
    qbinomial(n, k).expect("k <= n")
}

fn zero_if_absent(map: &HashMap<Permutation, BivarPoly>, key: &Permutation) -> BivarPoly {
    map.get(key).cloned().unwrap_or_else(BivarPoly::zero)
}

/// Both identities for involutions of size `n + a` containing `sigma in S_a`,
/// weighted by `q^maj(pi^{>a})`, and the counting identity at `q = 1`.
pub fn verify_permcont1(a: usize, n: usize) -> Report {
    let mut rep = Report::new("permcont1", &[("a", a), ("n", n)]);
    let total = n + a;
    let mut all = BivarPoly::zero();
    let mut by_sigma: HashMap<Permutation, BivarPoly> = HashMap::new();
    for pi in Permutation::involutions(total) {
        let w = BivarPoly::pq_pow(0, pi.suffix(a).unwrap().maj() as u32);
        all += &w;
        *by_sigma.entry(pi.restrict_low(a).unwrap()).or_insert_with(BivarPoly::zero) += &w;
    }
    let ks = |j: usize| (n + j).checked_sub(a);

    let mut rhs = BivarPoly::zero();
    for j in 0..=a {
        if let Some(k) = ks(j) {
            let c = t_count(j) * binomial(a, j);
            rhs += &(&(&qfactorial(a - j) * &qbin(n, k)) * &t_poly(k)).scale(&c);
        }
    }
    rep.check(|| format!("all, a={a}, n={n}"), &all, &rhs);

    for sigma in Permutation::all(a) {
        let lhs = zero_if_absent(&by_sigma, &sigma);
        let js = j_set(&sigma);
        let mut rhs = BivarPoly::zero();
        let mut count = BigInt::zero();
        for j in js.iter() {
            if let Some(k) = ks(j) {
                let m = sigma.suffix(j).unwrap().maj() as u32;
                rhs += &(&qbin(n, k) * &t_poly(k)).shift(0, m);
                count += binomial(n, k) * t_count(k);
            }
        }
        rep.check(|| format!("sigma={sigma}, n={n}"), &lhs, &rhs);
        rep.check(|| format!("count sigma={sigma}, n={n}"), &lhs.coeff_sum(), &count);
    }
    rep
}

/// `verify_permcont1` over `a <= min(3, max_size)` and `n + a <= max_size`.
pub fn verify_permcont1_range(max_size: usize) -> Report {
    let cases: Vec<(usize, usize)> =
        (0..=max_size.min(3)).flat_map(|a| (0..=max_size - a).map(move |n| (a, n))).collect();
    let mut rep = Report::new("permcont1", &[("max_size", max_size)]);
    for r in cases.par_iter().map(|&(a, n)| verify_permcont1(a, n)).collect::<Vec<_>>() {
        rep.absorb(r);
    }
    rep
}

/// Both identities for `pi in S_l` split by `(pi_{<=a}, pi^{<=b})`, weighted by
/// `p^imaj(pi_{>a}) q^maj(pi^{>b})`, and the counting identity at `p = q = 1`.
pub fn verify_permcont2(a: usize, b: usize, l: usize) -> Report {
    let mut rep = Report::new("permcont2", &[("a", a), ("b", b), ("l", l)]);
    if a > l || b > l {
        return rep;
    }
    let (m, n) = (l - a, l - b);
    let mut all: HashMap<(u32, u32), u64> = HashMap::new();
    let mut buckets: HashMap<(Permutation, Permutation), HashMap<(u32, u32), u64>> = HashMap::new();
    for pi in Permutation::all(l) {
        let key = (pi.restrict_high(a).unwrap().imaj() as u32, pi.suffix(b).unwrap().maj() as u32);
        *all.entry(key).or_default() += 1;
        let st = (pi.restrict_low(a).unwrap(), pi.prefix(b).unwrap());
        *buckets.entry(st).or_default().entry(key).or_default() += 1;
    }
    let to_poly = |h: &HashMap<(u32, u32), u64>| BivarPoly::from_terms(h.iter().map(|(&(i, j), &c)| (i, j, c)));
    let ks = |j: usize| (n + j).checked_sub(a);
    let a_polys: Vec<BivarPoly> = (0..=l).map(a_poly).collect();
    let kernel = |k: usize| &(&qbin(m, k).in_p() * &qbin(n, k)) * &a_polys[k];

    let mut rhs = BivarPoly::zero();
    for j in 0..=a.min(b) {
        if let Some(k) = ks(j) {
            let c = factorial(j) * binomial(a, j) * binomial(b, j);
            let facs = &qfactorial(b - j).in_p() * &qfactorial(a - j);
            rhs += &(&facs * &kernel(k)).scale(&c);
        }
    }
    rep.check(|| format!("all, a={a}, b={b}, l={l}"), &to_poly(&all), &rhs);

    let sigmas: Vec<Permutation> = Permutation::all(a).collect();
    let taus: Vec<Permutation> = Permutation::all(b).collect();
    for sigma in &sigmas {
        for tau in &taus {
            let lhs = buckets.get(&(sigma.clone(), tau.clone())).map(to_poly).unwrap_or_else(BivarPoly::zero);
            let mut rhs = BivarPoly::zero();
            let mut count = BigInt::zero();
            for j in j2_set(sigma, tau).iter() {
                if let Some(k) = ks(j) {
                    let pe = tau.restrict_high(j).unwrap().imaj() as u32;
                    let qe = sigma.suffix(j).unwrap().maj() as u32;
                    rhs += &kernel(k).shift(pe, qe);
                    count += binomial(m, k) * binomial(n, k) * factorial(k);
                }
            }
            rep.check(|| format!("sigma={sigma}, tau={tau}, l={l}"), &lhs, &rhs);
            rep.check(|| format!("count sigma={sigma}, tau={tau}, l={l}"), &lhs.coeff_sum(), &count);
        }
    }
    rep
}

/// `verify_permcont2` over `a, b <= min(3, max_size)` and `max(a, b) <= l <= max_size`.
pub fn verify_permcont2_range(max_size: usize) -> Report {
    let top = max_size.min(3);
    let cases: Vec<(usize, usize, usize)> = (0..=top)
        .flat_map(|a| (0..=top).map(move |b| (a, b)))
        .flat_map(|(a, b)| (a.max(b)..=max_size).map(move |l| (a, b, l)))
        .collect();
    let mut rep = Report::new("permcont2", &[("max_size", max_size)]);
    for r in cases.par_iter().map(|&(a, b, l)| verify_permcont2(a, b, l)).collect::<Vec<_>>() {
        rep.absorb(r);
    }
    rep
}

/// Skew `f`-polynomials, memoized for one verification run.
#[derive(Default)]
pub struct FCache(HashMap<SkewShape, BivarPoly>);

impl FCache {
    pub fn get(&mut self, outer: &Partition, inner: &Partition) -> BivarPoly {
        let shape = SkewShape::new(outer.clone(), inner.clone()).expect("inner ⊆ outer");
        self.0.entry(shape).or_insert_with_key(f_poly).clone()
    }
}

/// `sum over mu ⊢ j, mu ⊆ alpha of f^{alpha/mu}(q)`.
pub fn inner_sum(alpha: &Partition, j: usize, cache: &mut FCache) -> BivarPoly {
    alpha.subpartitions(j).iter().map(|mu| cache.get(alpha, mu)).sum()
}

/// `sum over mu ⊢ j, mu ⊆ alpha ∩ beta of f^{beta/mu}(p) f^{alpha/mu}(q)`.
pub fn inner_pair_sum(alpha: &Partition, beta: &Partition, j: usize, cache: &mut FCache) -> BivarPoly {
    alpha
        .subpartitions(j)
        .iter()
        .filter(|mu| beta.contains(mu))
        .map(|mu| &cache.get(beta, mu).in_p() * &cache.get(alpha, mu))
        .sum()
}

/// `sum over sigma with P(sigma) = a and j in J(sigma) of q^maj(sigma^{>j})`
/// against `sum over mu ⊢ j of f^{alpha/mu}(q)`, plus the count at `q = 1`.
pub fn verify_permtotab(a: &Tableau, j: usize) -> Report {
    let mut rep = Report::new("permtotab", &[("size", a.size()), ("j", j)]);
    let alpha = a.shape().outer().clone();
    let mut lhs = BivarPoly::zero();
    for sigma in perms_with_p(a) {
        if j_set(&sigma).contains(j) {
            lhs += &BivarPoly::pq_pow(0, sigma.suffix(j).unwrap().maj() as u32);
        }
    }
    let rhs = inner_sum(&alpha, j, &mut FCache::default());
    let count: BigInt = alpha
        .subpartitions(j)
        .into_iter()
        .map(|mu| syt_count(&SkewShape::new(alpha.clone(), mu).unwrap()))
        .sum();
    rep.check(|| format!("A={a}, j={j}"), &lhs, &rhs);
    rep.check(|| format!("count A={a}, j={j}"), &lhs.coeff_sum(), &count);
    rep
}

/// Pair version: `p^imaj(tau_{>j}) q^maj(sigma^{>j})` over `P(sigma) = a`,
/// `Q(tau) = b`, `j in J(sigma, tau)`.
pub fn verify_permtotab_pair(a: &Tableau, b: &Tableau, j: usize) -> Report {
    let mut rep = Report::new("permtotab_pair", &[("size_a", a.size()), ("size_b", b.size()), ("j", j)]);
    let alpha = a.shape().outer().clone();
    let beta = b.shape().outer().clone();
    let taus = perms_with_q(b);
    let mut lhs = BivarPoly::zero();
    for sigma in perms_with_p(a) {
        for tau in &taus {
            if j2_set(&sigma, tau).contains(j) {
                let pe = tau.restrict_high(j).unwrap().imaj() as u32;
                let qe = sigma.suffix(j).unwrap().maj() as u32;
                lhs += &BivarPoly::pq_pow(pe, qe);
            }
        }
    }
    let rhs = inner_pair_sum(&alpha, &beta, j, &mut FCache::default());
    rep.check(|| format!("A={a}, B={b}, j={j}"), &lhs, &rhs);
    rep
}

/// Single and pair tableau identities for every SYT of size `<= max_size` and every `j`.
pub fn verify_permtotab_range(max_size: usize) -> Report {
    let tabs: Vec<Tableau> = (0..=max_size).flat_map(all_syt).collect();
    let mut jobs: Vec<(usize, usize, usize)> = Vec::new();
    for (ia, a) in tabs.iter().enumerate() {
        for j in 0..=a.size() {
            jobs.push((ia, usize::MAX, j));
        }
        for (ib, b) in tabs.iter().enumerate() {
            for j in 0..=a.size().min(b.size()) {
                jobs.push((ia, ib, j));
            }
        }
    }
    let reports: Vec<Report> = jobs
        .par_iter()
        .map(|&(ia, ib, j)| {
            if ib == usize::MAX {
                verify_permtotab(&tabs[ia], j)
            } else {
                verify_permtotab_pair(&tabs[ia], &tabs[ib], j)
            }
        })
        .collect();
    let mut rep = Report::new("permtotab", &[("max_size", max_size)]);
    for r in reports {
        rep.absorb(r);
    }
    rep
}

/// `sum over lambda/alpha ⊢ n of f^{lambda/alpha}(q)` against the expansion in
/// `t_k(q)` and inner skew sums, plus the integer version at `q = 1`.
pub fn verify_majgen(alpha: &Partition, n: usize) -> Report {
    let mut rep = Report::new("majgen", &[("alpha_size", alpha.size()), ("n", n)]);
    let mut cache = FCache::default();
    let lhs: BivarPoly = alpha.superpartitions(n).iter().map(|la| cache.get(la, alpha)).sum();
    let mut rhs = BivarPoly::zero();
    let mut count = BigInt::zero();
    for k in 0..=n {
        let Some(j) = (alpha.size() + k).checked_sub(n) else { continue };
        let inner = inner_sum(alpha, j, &mut cache);
        count += binomial(n, k) * t_count(k) * inner.coeff_sum();
        rhs += &(&(&qbin(n, k) * &t_poly(k)) * &inner);
    }
    rep.check(|| format!("alpha={alpha}, n={n}"), &lhs, &rhs);
    let lhs_count: BigInt = alpha
        .superpartitions(n)
        .into_iter()
        .map(|la| syt_count(&SkewShape::new(la, alpha.clone()).unwrap()))
        .sum();
    rep.check(|| format!("count alpha={alpha}, n={n}"), &lhs_count, &count);
    rep
}

/// `sum over lambda of f^{lambda/alpha}(p) f^{lambda/beta}(q)` with
/// `|lambda/alpha| = m`, `|lambda/beta| = n`, against its expansion in `A_k(p,q)`.
pub fn verify_majgen1(alpha: &Partition, beta: &Partition, m: usize, n: usize) -> Report {
    let mut rep = Report::new(
        "majgen1",
        &[("alpha_size", alpha.size()), ("beta_size", beta.size()), ("m", m), ("n", n)],
    );
    let mut cache = FCache::default();
    let mut lhs = BivarPoly::zero();
    let mut lhs_count = BigInt::zero();
    if alpha.size() + m == beta.size() + n {
        for la in alpha.superpartitions(m).iter().filter(|la| la.contains(beta)) {
            let fa = cache.get(la, alpha);
            let fb = cache.get(la, beta);
            lhs_count += fa.coeff_sum() * fb.coeff_sum();
            lhs += &(&fa.in_p() * &fb);
        }
    }
    let mut rhs = BivarPoly::zero();
    let mut count = BigInt::zero();
    for k in 0..=m.min(n) {
        let (Some(jb), Some(ja)) = ((beta.size() + k).checked_sub(m), (alpha.size() + k).checked_sub(n)) else {
            continue;
        };
        if ja != jb {
            continue;
        }
        let inner = inner_pair_sum(alpha, beta, ja, &mut cache);
        count += binomial(m, k) * binomial(n, k) * factorial(k) * inner.coeff_sum();
        let kernel = &(&qbin(m, k).in_p() * &qbin(n, k)) * &a_poly(k);
        rhs += &(&kernel * &inner);
    }
    rep.check(|| format!("alpha={alpha}, beta={beta}, m={m}, n={n}"), &lhs, &rhs);
    rep.check(|| format!("count alpha={alpha}, beta={beta}, m={m}, n={n}"), &lhs_count, &count);
    rep
}

/// `verify_majgen` for `|alpha| <= max_shape`, `n <= max_n`, and
/// `verify_majgen1` for `|alpha|, |beta| <= max_shape`, `m, n <= max_n`.
pub fn verify_majgen_range(max_shape: usize, max_n: usize) -> (Report, Report) {
    let shapes: Vec<Partition> = (0..=max_shape).flat_map(Partition::all).collect();
    let mut single = Report::new("majgen", &[("max_shape", max_shape), ("max_n", max_n)]);
    let jobs: Vec<(&Partition, usize)> = shapes.iter().flat_map(|al| (0..=max_n).map(move |n| (al, n))).collect();
    for r in jobs.par_iter().map(|&(al, n)| verify_majgen(al, n)).collect::<Vec<_>>() {
        single.absorb(r);
    }
    let mut pair = Report::new("majgen1", &[("max_shape", max_shape), ("max_n", max_n)]);
    let jobs: Vec<(&Partition, &Partition, usize, usize)> = shapes
        .iter()
        .flat_map(|al| shapes.iter().map(move |be| (al, be)))
        .flat_map(|(al, be)| (0..=max_n).flat_map(move |m| (0..=max_n).map(move |n| (al, be, m, n))))
        .collect();
    for r in jobs.par_iter().map(|&(al, be, m, n)| verify_majgen1(al, be, m, n)).collect::<Vec<_>>() {
        pair.absorb(r);
    }
    (single, pair)
}

/// Shuffle identity: `sum over r of q^maj(sf(sigma, tau; r)) = q^{maj sigma + maj tau} [a+b choose b]_q`.
pub fn verify_shuffle(a: usize, b: usize) -> Report {
    let mut rep = Report::new("shuffle", &[("a", a), ("b", b)]);
    let words = crate::perm::BinaryWord::all_with_weight(a + b, b);
    for sigma in Permutation::all(a) {
        for tau in Permutation::all(b) {
            let lhs: BivarPoly = words
                .iter()
                .map(|r| BivarPoly::pq_pow(0, crate::perm::shuffle(&sigma, &tau, r).unwrap().maj() as u32))
                .sum();
            let rhs = qbin(a + b, b).shift(0, (sigma.maj() + tau.maj()) as u32);
            rep.check(|| format!("sigma={sigma}, tau={tau}"), &lhs, &rhs);
        }
    }
    rep
}

/// `|T_n(A_1, ..., A_k)| / |T_n(E, ..., E)|`: tuples of same-shape tableaux
/// with `T_i ⊇ A_i`, relative to all same-shape tuples.
pub fn conjecture_probe(tableaux: &[Tableau], n: usize) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::zero();
    for la in Partition::all(n) {
        let f = la.syt_count();
        den += num_traits::pow(f, tableaux.len());
        let mut prod = BigInt::one();
        for a in tableaux {
            let alpha = a.shape().outer();
            if !la.contains(alpha) {
                prod = BigInt::zero();
                break;
            }
            prod *= syt_count(&SkewShape::new(la.clone(), alpha.clone()).unwrap());
        }
        num += prod;
    }
    Rational::new(num, den)
}

/// Same ratio by listing the tableaux of each shape and testing containment.
pub fn conjecture_probe_brute(tableaux: &[Tableau], n: usize) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::zero();
    for la in Partition::all(n) {
        let all = enumerate_syt(&SkewShape::straight(la));
        den += num_traits::pow(BigInt::from(all.len()), tableaux.len());
        let prod: BigInt = tableaux
            .iter()
            .map(|a| BigInt::from(all.iter().filter(|t| tab_contains(t, a)).count()))
            .product();
        num += prod;
    }
    Rational::new(num, den)
}

/// `|T_n(A)| / |T_n|`, the single-tableau case of [`conjecture_probe`].
pub fn containment_ratio(a: &Tableau, n: usize) -> Rational {
    conjecture_probe(std::slice::from_ref(a), n)
}
