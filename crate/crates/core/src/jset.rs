//! j-sets `J(pi)` and j2-sets `J(sigma, tau)`, their difference profiles, and
//! the block criteria that decide membership without a witness permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::JSetError;
use crate::perm::Permutation;

/// A finite set of nonnegative integers, printed as `0,1,3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSet(BTreeSet<usize>);

impl IntSet {
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        IntSet(items.into_iter().collect())
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        self.0.insert(x)
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `S ∩ {0, ..., k}`.
    pub fn up_to(&self, k: usize) -> IntSet {
        IntSet(self.0.range(..=k).copied().collect())
    }

    /// Every subset of `{0, ..., n}` that contains 0 and `n`.
    pub fn all_with_max(n: usize) -> Vec<IntSet> {
        if n == 0 {
            return vec![IntSet::new([0])];
        }
        let inner = n - 1;
        (0u64..1 << inner)
            .map(|mask| {
                let mut s = IntSet::new([0, n]);
                for i in 0..inner {
                    if mask >> i & 1 == 1 {
                        s.insert(i + 1);
                    }
                }
                s
            })
            .collect()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for IntSet {
    type Err = JSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() || t == "∅" {
            return Ok(IntSet::default());
        }
        t.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| JSetError::Parse(s.to_string())))
            .collect::<Result<BTreeSet<_>, _>>()
            .map(IntSet)
    }
}

impl FromIterator<usize> for IntSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IntSet::new(iter)
    }
}

/// An entry of the merged difference sequence; overlined entries print as `2'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub value: usize,
    pub overlined: bool,
}

impl DeltaEntry {
    pub fn plain(value: usize) -> Self {
        DeltaEntry { value, overlined: false }
    }

    pub fn over(value: usize) -> Self {
        DeltaEntry { value, overlined: true }
    }
}

impl fmt::Display for DeltaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.overlined { "'" } else { "" })
    }
}

/// All four difference-sequence views of a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JProfile {
    pub delta: Vec<usize>,
    pub delta_bar: Vec<DeltaEntry>,
    pub psi: Vec<Vec<DeltaEntry>>,
    /// `None` when the differences do not end in 1.
    pub psi2: Option<Vec<Vec<usize>>>,
}

/// `{j : pi^{<=j} is an involution}`.
pub fn j_set(pi: &Permutation) -> IntSet {
    (0..=pi.len())
        .filter(|&j| pi.prefix(j).expect("j <= n").is_involution())
        .collect()
}

/// `{j : sigma^{<=j} = tau_{<=j}}`.
pub fn j2_set(sigma: &Permutation, tau: &Permutation) -> IntSet {
    (0..=sigma.len().min(tau.len()))
        .filter(|&j| sigma.prefix(j).expect("j <= a") == tau.restrict_low(j).expect("j <= b"))
        .collect()
}

/// Differences of consecutive elements, read from the largest element down.
pub fn delta(s: &IntSet) -> Result<Vec<usize>, JSetError> {
    if s.is_empty() {
        return Err(JSetError::Empty);
    }
    let desc: Vec<usize> = s.iter().rev().collect();
    Ok(desc.windows(2).map(|w| w[0] - w[1]).collect())
}

/// Left-to-right merge pass over `delta`: a 1 that is not the last entry is
/// fused with its successor `e` into an overlined `e + 1`, and scanning
/// resumes after the fused entry.
pub fn delta_bar(s: &IntSet) -> Result<Vec<DeltaEntry>, JSetError> {
    let d = delta(s)?;
    let mut out = Vec::with_capacity(d.len());
    let mut i = 0;
    while i < d.len() {
        if d[i] == 1 && i + 1 < d.len() {
            out.push(DeltaEntry::over(d[i + 1] + 1));
            i += 2;
        } else {
            out.push(DeltaEntry::plain(d[i]));
            i += 1;
        }
    }
    Ok(out)
}

/// `delta_bar` cut after every overlined 2. The last block may be empty.
pub fn psi(s: &IntSet) -> Result<Vec<Vec<DeltaEntry>>, JSetError> {
    let mut blocks = vec![Vec::new()];
    for e in delta_bar(s)? {
        blocks.last_mut().unwrap().push(e);
        if e == DeltaEntry::over(2) {
            blocks.push(Vec::new());
        }
    }
    Ok(blocks)
}

/// `delta` cut after every 1. Fails when entries remain after the last 1.
pub fn psi2(s: &IntSet) -> Result<Vec<Vec<usize>>, JSetError> {
    let mut blocks = Vec::new();
    let mut cur = Vec::new();
    for x in delta(s)? {
        cur.push(x);
        if x == 1 {
            blocks.push(std::mem::take(&mut cur));
        }
    }
    if cur.is_empty() {
        Ok(blocks)
    } else {
        Err(JSetError::NotJ2Candidate)
    }
}

pub fn profile(s: &IntSet) -> Result<JProfile, JSetError> {
    Ok(JProfile {
        delta: delta(s)?,
        delta_bar: delta_bar(s)?,
        psi: psi(s)?,
        psi2: psi2(s).ok(),
    })
}

/// Weakly decreasing, with an overline allowed only on the last occurrence of a value.
fn is_overpartition(block: &[DeltaEntry]) -> bool {
    block.windows(2).all(|w| {
        w[0].value > w[1].value || (w[0].value == w[1].value && !w[0].overlined)
    })
}

/// Membership in `{J(pi)}` decided from the blocks of `psi`.
pub fn is_j_set(s: &IntSet) -> bool {
    if !s.contains(0) {
        return false;
    }
    let blocks = psi(s).expect("nonempty");
    let (last, body) = blocks.split_last().unwrap();
    body.iter()
        .all(|b| is_overpartition(b) && b.last() == Some(&DeltaEntry::over(2)))
        && (last.is_empty() || last.as_slice() == [DeltaEntry::plain(1)])
}

/// Membership in `{J(sigma, tau)}` decided from the blocks of `psi2`.
pub fn is_j2_set(s: &IntSet) -> bool {
    if !s.contains(0) {
        return false;
    }
    match psi2(s) {
        Ok(blocks) => blocks
            .iter()
            .all(|b| b.windows(2).all(|w| w[0] >= w[1]) && b.iter().filter(|&&x| x == 1).count() == 1),
        Err(_) => false,
    }
}

/// For a j2-set with largest element `n` and second largest `n - k`,
/// whether adding `n + m` keeps it a j2-set: `m = 1` or `m >= k`.
pub fn j2_extend_ok(j: &IntSet, m: usize) -> Result<bool, JSetError> {
    if !is_j2_set(j) {
        return Err(JSetError::Precondition(format!("{j} is not a j2-set")));
    }
    if j.len() < 2 {
        return Err(JSetError::Precondition("need at least two elements".into()));
    }
    if m == 0 {
        return Err(JSetError::Precondition("m must be positive".into()));
    }
    let mut top = j.iter().rev();
    let n = top.next().unwrap();
    let k = n - top.next().unwrap();
    Ok(m == 1 || m >= k)
}

/// For a j-set with largest element `m >= 2`, whether adding `n > m` keeps it
/// a j-set: `n = m + 1` or `n - m >= m - max(J ∩ {0, ..., m - 2})`.
pub fn j_extend_ok(j: &IntSet, n: usize) -> Result<bool, JSetError> {
    if !is_j_set(j) {
        return Err(JSetError::Precondition(format!("{j} is not a j-set")));
    }
    let m = j.largest().unwrap();
    if m < 2 {
        return Err(JSetError::Precondition("largest element must be at least 2".into()));
    }
    if n <= m {
        return Err(JSetError::Precondition(format!("{n} is not larger than {m}")));
    }
    let below = j.up_to(m - 2).largest().expect("0 is in every j-set");
    Ok(n == m + 1 || n - m >= m - below)
}

/// `{J(pi, pi) : pi in S_n}`, which is exactly the set of j2-sets with largest element `n`.
pub fn j2_sets_brute(n: usize) -> BTreeSet<IntSet> {
    Permutation::all(n).par_bridge().map(|pi| j2_set(&pi, &pi)).collect()
}

/// `{J(pi) : pi an involution of size n}`, the j-sets with largest element `n`.
pub fn j_sets_brute(n: usize) -> BTreeSet<IntSet> {
    Permutation::involutions(n).par_iter().map(j_set).collect()
}

/// Number of j2-sets with largest element `n`, by enumeration over `S_n`.
pub fn j2_count_brute(n: usize) -> BigInt {
    BigInt::from(j2_sets_brute(n).len())
}

/// Number of j2-sets with largest element `n`, by the block criterion over all subsets.
pub fn j2_count_criterion(n: usize) -> BigInt {
    BigInt::from(IntSet::all_with_max(n).iter().filter(|s| is_j2_set(s)).count())
}

/// Coefficients of `1 / (1 - x prod_{i>=2} 1/(1-x^i))` through `x^n_max`.
pub fn j2_series(n_max: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::zero(); n_max + 1];
    g[0] = BigInt::one();
    for i in 2..=n_max {
        for d in i..=n_max {
            let prev = g[d - i].clone();
            g[d] += prev;
        }
    }
    let mut f = vec![BigInt::zero(); n_max + 1];
    f[0] = BigInt::one();
    for d in 1..=n_max {
        f[d] = (1..=d).map(|j| &g[j - 1] * &f[d - j]).sum();
    }
    f
}

pub fn format_blocks<T: fmt::Display>(blocks: &[Vec<T>]) -> String {
    let inner: Vec<String> = blocks
        .iter()
        .map(|b| {
            let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            format!("({})", items.join(","))
        })
        .collect();
    format!("({})", inner.join(","))
}

pub fn format_seq<T: fmt::Display>(items: &[T]) -> String {
    let items: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(set("0,1,3").to_string(), "0,1,3");
        assert_eq!(set("{3, 1,0}"), set("0,1,3"));
        assert_eq!(set("").to_string(), "∅");
        assert!("0,x".parse::<IntSet>().is_err());
    }

    #[test]
    fn small_j_sets() {
        assert_eq!(j_set(&Permutation::identity(4)), set("0,1,2,3,4"));
        assert_eq!(j_set(&p("312")), set("0,1,2"));
        assert_eq!(j2_set(&p("312"), &p("312")), set("0,1,3"));
        assert_eq!(j2_set(&Permutation::empty(), &Permutation::empty()), set("0"));
        for pi in Permutation::all(5) {
            assert_eq!(j_set(&pi), j2_set(&pi, &pi.inverse()));
            assert!(j2_set(&pi, &p("21")).contains(1));
        }
    }

    #[test]
    fn worked_profiles() {
        let s = set("0,1,2,3,5,6,9,13,17,18,19,20,22");
        assert_eq!(delta(&s).unwrap(), vec![2, 1, 1, 1, 4, 4, 3, 1, 2, 1, 1, 1]);
        assert_eq!(format_seq(&delta_bar(&s).unwrap()), "(2,2',5',4,3,3',2',1)");
        assert_eq!(format_blocks(&psi(&s).unwrap()), "((2,2'),(5',4,3,3',2'),(1))");
        assert!(is_j_set(&s));

        let s = set("0,1,3,6,7,8,12,13,14,15,17");
        assert_eq!(delta(&s).unwrap(), vec![2, 1, 1, 1, 4, 1, 1, 3, 2, 1]);
        assert_eq!(format_blocks(&psi2(&s).unwrap()), "((2,1),(1),(1),(4,1),(1),(3,2,1))");
        assert!(is_j2_set(&s));
    }

    #[test]
    fn edge_cases() {
        assert!(is_j_set(&set("0")));
        assert!(!is_j_set(&set("0,2")));
        assert!(is_j2_set(&set("0")));
        assert!(!is_j2_set(&set("0,2")));
        assert_eq!(psi2(&set("0,2")), Err(JSetError::NotJ2Candidate));
        assert!(is_j2_set(&set("0,1,3")));
        assert!(!is_j_set(&set("0,1,3")));
        assert!(!is_j_set(&set("1,2")));
        assert_eq!(delta(&IntSet::default()), Err(JSetError::Empty));
    }

    #[test]
    fn extension_examples() {
        assert_eq!(j2_extend_ok(&set("0,1,4"), 2), Ok(false));
        assert_eq!(j2_extend_ok(&set("0,1,4"), 3), Ok(true));
        assert_eq!(j2_extend_ok(&set("0,1,4"), 1), Ok(true));
        assert!(j2_extend_ok(&set("0,2"), 1).is_err());
        assert_eq!(j_extend_ok(&set("0,1,2"), 3), Ok(true));
        assert!(j_extend_ok(&set("0,1"), 3).is_err());
    }

    #[test]
    fn series_head() {
        let want = [1, 1, 1, 2, 4, 8, 15, 29, 55, 105, 200, 381, 725, 1381, 2629, 5005];
        let got = j2_series(15);
        assert_eq!(got, want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        for (n, c) in got.iter().enumerate().take(8) {
            assert_eq!(&j2_count_brute(n), c);
        }
    }
}
