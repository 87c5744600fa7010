//! Partitions, skew shapes and standard Young tableaux.
//!
//! Cells are addressed `(row, col)`, English convention. Internally rows and
//! columns are 0-based; the JSON format pads inner cells with `null`.

use std::fmt;
use std::num::Wrapping;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::exact::{factorial, BivarPoly};

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(parts: &[usize]) -> Result<Self, TableauError> {
        let trimmed: Vec<usize> = parts.iter().copied().take_while(|&x| x > 0).collect();
        if parts[trimmed.len()..].iter().any(|&x| x > 0) || trimmed.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(parts.to_vec()));
        }
        Ok(Self(trimmed))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Length of row `i` (0 past the last row).
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// Ferrers-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `sum_i (i-1) lambda_i`, the smallest major index of a tableau of this shape.
    pub fn weighted_size(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &r)| i * r).sum()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.0.iter().enumerate() {
            for j in 0..r {
                out.push((r - j - 1) + (conj.row(j) - i - 1) + 1);
            }
        }
        out
    }

    /// `f^lambda` by the hook-length formula.
    pub fn syt_count(&self) -> BigInt {
        let prod = self.hooks().iter().fold(BigInt::one(), |acc, &h| acc * h);
        factorial(self.size()) / prod
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                rec(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of size `size` contained in `self`.
    pub fn subpartitions(&self, size: usize) -> Vec<Partition> {
        Partition::all(size).into_iter().filter(|mu| self.contains(mu)).collect()
    }

    /// Partitions `lambda ⊇ self` with `|lambda| = |self| + extra`.
    pub fn superpartitions(&self, extra: usize) -> Vec<Partition> {
        Partition::all(self.size() + extra)
            .into_iter()
            .filter(|la| la.contains(self))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(&v).map_err(serde::de::Error::custom)
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauError> {
        if !outer.contains(&inner) {
            return Err(TableauError::NotContained);
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells row by row, left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.num_rows())
            .flat_map(|i| (self.inner.row(i)..self.outer.row(i)).map(move |j| (i, j)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A standard filling of a (possibly skew) shape with `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    /// `rows[i]` holds the entries of columns `inner[i]..outer[i]` of row `i`.
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let nrows = shape.outer.num_rows();
        rows.resize(nrows, Vec::new());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.outer.row(i) - shape.inner.row(i) {
                return Err(TableauError::ShapeMismatch);
            }
        }
        let t = Self { shape, rows };
        if !t.is_standard() {
            return Err(TableauError::NotStandard);
        }
        Ok(t)
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = SkewShape::straight(Partition::new(&lens)?);
        Self::new(shape, rows)
    }

    pub fn empty() -> Self {
        Self {
            shape: SkewShape::default(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)` (0-based), if that cell belongs to the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let lo = self.shape.inner.row(i);
        if j < lo {
            return None;
        }
        self.rows.get(i)?.get(j - lo).copied()
    }

    fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (i, j) in self.shape.cells() {
            let v = self.get(i, j).unwrap();
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
            if j > 0 && self.get(i, j - 1).is_some_and(|left| left >= v) {
                return false;
            }
            if i > 0 && self.get(i - 1, j).is_some_and(|up| up >= v) {
                return false;
            }
        }
        true
    }

    /// Row index (0-based) of each entry; `row_of[v]` for `v` in `1..=n`.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                out[v] = i;
            }
        }
        out
    }

    /// `i` is a descent when `i + 1` sits in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let row = self.row_of();
        (1..self.size()).filter(|&i| row[i + 1] > row[i]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// `T_{<=k}`: the cells holding `1..=k`, on the shape `nu / inner`.
    pub fn restrict_low(&self, k: usize) -> Result<Tableau, TableauError> {
        if k > self.size() {
            return Err(TableauError::ShapeMismatch);
        }
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| v <= k).collect())
            .collect();
        let lens: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| self.shape.inner.row(i) + r.len())
            .collect();
        let outer = Partition::new(&lens)?;
        Tableau::new(SkewShape::new(outer, self.shape.inner.clone())?, rows)
    }

    /// `T_{>k}`: the cells holding `k+1..=n`, decreased by `k`, on `outer / nu`.
    pub fn restrict_high(&self, k: usize) -> Result<Tableau, TableauError> {
        let low = self.restrict_low(k)?;
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|&&v| v > k).map(|v| v - k).collect())
            .collect();
        Tableau::new(SkewShape::new(self.shape.outer.clone(), low.shape.outer.clone())?, rows)
    }

    /// Inverse of the restriction pair: rebuilds `T` from `T_{<=k}` and `T_{>k}`.
    pub fn join(low: &Tableau, high: &Tableau) -> Result<Tableau, TableauError> {
        if high.shape.inner != low.shape.outer {
            return Err(TableauError::ShapeMismatch);
        }
        let k = low.size();
        let nrows = high.shape.outer.num_rows();
        let rows = (0..nrows)
            .map(|i| {
                let mut r = low.rows.get(i).cloned().unwrap_or_default();
                r.extend(high.rows.get(i).into_iter().flatten().map(|v| v + k));
                r
            })
            .collect();
        Tableau::new(SkewShape::new(high.shape.outer.clone(), low.shape.inner.clone())?, rows)
    }

    /// Transpose of a straight tableau.
    pub fn transpose(&self) -> Tableau {
        assert!(self.shape.is_straight(), "transpose is defined for straight shapes");
        let conj = self.shape.outer.conjugate();
        let rows = (0..conj.num_rows())
            .map(|j| (0..conj.row(j)).map(|i| self.rows[i][j]).collect())
            .collect();
        Tableau {
            shape: SkewShape::straight(conj),
            rows,
        }
    }

    /// JSON form `{"outer":[..],"inner":[..],"rows":[[null, 2], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Tableau, TableauError> {
        serde_json::from_str(s).map_err(|e| TableauError::Json(e.to_string()))
    }

    /// Multi-line picture; inner cells print as `.`.
    pub fn pretty(&self) -> String {
        let width = self.size().max(1).to_string().len();
        let mut lines = Vec::new();
        for i in 0..self.shape.outer.num_rows() {
            let cells: Vec<String> = (0..self.shape.outer.row(i))
                .map(|j| match self.get(i, j) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// Parses a straight-shape tableau in the display form `[1,2,4|3]`;
/// the brackets are optional and `[]` or `∅` is the empty tableau.
impl std::str::FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Self::empty());
        }
        let rows = t
            .split('|')
            .map(|r| {
                r.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| TableauError::Parse(s.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
    rows: Vec<Vec<Option<usize>>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = (0..self.shape.outer.num_rows())
            .map(|i| (0..self.shape.outer.row(i)).map(|j| self.get(i, j)).collect())
            .collect();
        TableauJson {
            outer: self.shape.outer.0.clone(),
            inner: self.shape.inner.0.clone(),
            rows,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = TableauJson::deserialize(d)?;
        let outer = Partition::new(&raw.outer).map_err(D::Error::custom)?;
        let inner = Partition::new(&raw.inner).map_err(D::Error::custom)?;
        let shape = SkewShape::new(outer, inner).map_err(D::Error::custom)?;
        let mut rows = Vec::new();
        for (i, r) in raw.rows.iter().enumerate() {
            let lo = shape.inner.row(i);
            if r.len() != shape.outer.row(i) || r[..lo.min(r.len())].iter().any(|c| c.is_some()) {
                return Err(D::Error::custom(TableauError::ShapeMismatch));
            }
            let vals: Option<Vec<usize>> = r[lo..].iter().copied().collect();
            rows.push(vals.ok_or_else(|| D::Error::custom(TableauError::ShapeMismatch))?);
        }
        Tableau::new(shape, rows).map_err(D::Error::custom)
    }
}

/// Cells that can receive the next entry: `(row, col)` with `col = nu[row]`.
fn addable(nu: &[usize], outer: &Partition) -> Vec<usize> {
    (0..outer.num_rows())
        .filter(|&i| nu[i] < outer.row(i) && (i == 0 || nu[i - 1] > nu[i]))
        .collect()
}

/// Every standard filling of `shape`, in depth-first order (smaller rows first).
pub fn enumerate_syt(shape: &SkewShape) -> Vec<Tableau> {
    fn rec(
        shape: &SkewShape,
        nu: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        out: &mut Vec<Tableau>,
    ) {
        if next > shape.size() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in addable(nu, &shape.outer) {
            nu[i] += 1;
            rows[i].push(next);
            rec(shape, nu, rows, next + 1, out);
            rows[i].pop();
            nu[i] -= 1;
        }
    }
    let nrows = shape.outer.num_rows();
    let mut nu: Vec<usize> = (0..nrows).map(|i| shape.inner.row(i)).collect();
    let mut rows = vec![Vec::new(); nrows];
    let mut out = Vec::new();
    rec(shape, &mut nu, &mut rows, 1, &mut out);
    out
}

/// `f^{lambda/mu}(q) = sum over SYT T of shape lambda/mu of q^maj(T)`, by enumeration.
pub fn f_poly(shape: &SkewShape) -> BivarPoly {
    fn rec(shape: &SkewShape, nu: &mut Vec<usize>, placed: usize, last_row: usize, maj: usize, acc: &mut Vec<u64>) {
        if placed == shape.size() {
            if acc.len() <= maj {
                acc.resize(maj + 1, 0);
            }
            acc[maj] += 1;
            return;
        }
        for i in addable(nu, &shape.outer) {
            let d = if placed > 0 && i > last_row { placed } else { 0 };
            nu[i] += 1;
            rec(shape, nu, placed + 1, i, maj + d, acc);
            nu[i] -= 1;
        }
    }
    let nrows = shape.outer.num_rows();
    let mut nu: Vec<usize> = (0..nrows).map(|i| shape.inner.row(i)).collect();
    let mut acc = Vec::new();
    rec(shape, &mut nu, 0, 0, 0, &mut acc);
    BivarPoly::from_q_coeffs(acc)
}

/// Number of standard fillings of a skew shape.
pub fn syt_count(shape: &SkewShape) -> BigInt {
    use std::collections::HashMap;
    fn rec(nu: &mut Vec<usize>, outer: &Partition, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if nu.iter().zip(&outer.0).all(|(a, b)| a == b) {
            return BigInt::one();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in addable(nu, outer) {
            nu[i] += 1;
            total += rec(nu, outer, memo);
            nu[i] -= 1;
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    let mut nu: Vec<usize> = (0..shape.outer.num_rows()).map(|i| shape.inner.row(i)).collect();
    rec(&mut nu, &shape.outer, &mut HashMap::new())
}

/// Coefficient ring for the hook-formula kernel.
pub(crate) trait KernelRing: Clone + Send + Sync {
    fn kzero() -> Self;
    fn kone() -> Self;
    fn add_from(&mut self, other: &Self);
    fn sub_from(&mut self, other: &Self);
    fn kmul(&self, other: &Self) -> Self;
    fn kis_zero(&self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl KernelRing for Wrapping<u128> {
    fn kzero() -> Self {
        Wrapping(0)
    }
    fn kone() -> Self {
        Wrapping(1)
    }
    fn add_from(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_from(&mut self, other: &Self) {
        *self -= other;
    }
    fn kmul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn kis_zero(&self) -> bool {
        self.0 == 0
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl KernelRing for BigInt {
    fn kzero() -> Self {
        Zero::zero()
    }
    fn kone() -> Self {
        One::one()
    }
    fn add_from(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_from(&mut self, other: &Self) {
        *self -= other;
    }
    fn kmul(&self, other: &Self) -> Self {
        self * other
    }
    fn kis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Coefficients of `[n]_q! / prod_h [h]_q`, so that `f^lambda(q) = q^{b(lambda)}` times this.
///
/// Both factorial and hook products are written with factors `(1 - q^k)`;
/// common factors cancel and the rest is computed as a power series
/// truncated at the known degree `C(n,2) - b(lambda) - b(lambda')`. The
/// truncation is exact because the quotient is a polynomial. With
/// `Wrapping<u128>` every step is a ring operation mod 2^128, so the result is
/// exact whenever all true coefficients are below 2^128.
pub(crate) fn hook_quotient<T: KernelRing>(lambda: &Partition) -> Vec<T> {
    let n = lambda.size();
    let mut mult = vec![1i64; n + 1];
    mult[0] = 0;
    for h in lambda.hooks() {
        mult[h] -= 1;
    }
    let deg = n * n.saturating_sub(1) / 2 - lambda.weighted_size() - lambda.conjugate().weighted_size();
    let mut a = vec![T::kzero(); deg + 1];
    a[0] = T::kone();
    for (k, &m) in mult.iter().enumerate().skip(1) {
        if m < 0 {
            for _ in 0..(-m) {
                for i in k..=deg {
                    let prev = a[i - k].clone();
                    a[i].add_from(&prev);
                }
            }
        }
    }
    for (k, &m) in mult.iter().enumerate().skip(1) {
        if m > 0 {
            for _ in 0..m {
                for i in (k..=deg).rev() {
                    let prev = a[i - k].clone();
                    a[i].sub_from(&prev);
                }
            }
        }
    }
    a
}

/// True when every coefficient of `f^lambda(q)` fits in a `u128`.
pub(crate) fn fits_u128(total: &BigInt) -> bool {
    total.to_u128().is_some()
}

/// `f^lambda(q)` for a straight shape via the q-hook-length formula.
pub fn f_poly_hook(lambda: &Partition) -> BivarPoly {
    let shift = lambda.weighted_size();
    let coeffs: Vec<BigInt> = if fits_u128(&lambda.syt_count()) {
        hook_quotient::<Wrapping<u128>>(lambda).iter().map(|c| c.to_bigint()).collect()
    } else {
        hook_quotient::<BigInt>(lambda)
    };
    BivarPoly::from_q_coeffs(coeffs).shift(0, shift as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    fn eq5() -> Tableau {
        Tableau::from_rows(vec![vec![1, 2, 4, 7], vec![3, 5, 6], vec![8, 9]]).unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        let t = eq5();
        assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
        assert_eq!("1,2|3".parse::<Tableau>().unwrap().size(), 3);
        assert_eq!("[]".parse::<Tableau>().unwrap(), Tableau::empty());
        assert!("1,3|2,x".parse::<Tableau>().is_err());
        assert!("2,1".parse::<Tableau>().is_err());
    }

    #[test]
    fn partitions_of_four() {
        let got: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]);
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[4, 3, 1]).conjugate(), part(&[3, 2, 2, 1]));
        for n in 0..9 {
            for la in Partition::all(n) {
                assert_eq!(la.conjugate().conjugate(), la);
            }
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[2, 0, 1]).is_err());
        assert_eq!(Partition::new(&[2, 1, 0]).unwrap(), part(&[2, 1]));
        assert!(SkewShape::new(part(&[2]), part(&[1, 1])).is_err());
    }

    #[test]
    fn syt_enumeration() {
        assert_eq!(enumerate_syt(&SkewShape::straight(part(&[2, 1]))).len(), 2);
        assert_eq!(enumerate_syt(&SkewShape::straight(part(&[5]))).len(), 1);
        let skew = SkewShape::new(part(&[4, 3, 2]), part(&[3, 2])).unwrap();
        let all = enumerate_syt(&skew);
        let target = eq5().restrict_high(5).unwrap();
        assert!(all.contains(&target));
        assert_eq!(BigInt::from(all.len()), syt_count(&skew));
        for n in 0..8 {
            for la in Partition::all(n) {
                let sh = SkewShape::straight(la.clone());
                assert_eq!(BigInt::from(enumerate_syt(&sh).len()), la.syt_count());
            }
        }
    }

    #[test]
    fn descents_of_worked_example() {
        let t = eq5();
        assert_eq!(t.descents(), vec![2, 4, 7]);
        assert_eq!(t.maj(), 13);
        let row = Tableau::from_rows(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.descents().is_empty());
        let col = Tableau::from_rows((1..=5).map(|v| vec![v]).collect()).unwrap();
        assert_eq!(col.maj(), 10);
    }

    #[test]
    fn restrictions_of_worked_example() {
        let t = eq5();
        let low = t.restrict_low(5).unwrap();
        assert_eq!(low.rows(), &[vec![1, 2, 4], vec![3, 5]]);
        assert!(low.shape().is_straight());
        let high = t.restrict_high(5).unwrap();
        assert_eq!(high.shape(), &SkewShape::new(part(&[4, 3, 2]), part(&[3, 2])).unwrap());
        assert_eq!(high.rows(), &[vec![2], vec![1], vec![3, 4]]);
        assert_eq!(high.pretty(), ". . . 2\n. . 1\n3 4");
        assert_eq!(Tableau::join(&low, &high).unwrap(), t);

        assert_eq!(t.restrict_low(9).unwrap(), t);
        assert_eq!(t.restrict_high(9).unwrap().size(), 0);
        assert_eq!(t.restrict_low(0).unwrap(), Tableau::empty());
        assert_eq!(t.restrict_high(0).unwrap(), t);
    }

    #[test]
    fn json_format() {
        let high = eq5().restrict_high(5).unwrap();
        let js = serde_json::to_string(&high).unwrap();
        assert_eq!(js, r#"{"outer":[4,3,2],"inner":[3,2],"rows":[[null,null,null,2],[null,null,1],[3,4]]}"#);
        assert_eq!(Tableau::from_json(&js).unwrap(), high);
        assert!(Tableau::from_json(r#"{"outer":[2],"inner":[],"rows":[[2,1]]}"#).is_err());
        assert!(Tableau::from_json(r#"{"outer":[2],"rows":[[1,2]]}"#).is_ok());
    }

    #[test]
    fn rejects_nonstandard() {
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        assert!(Tableau::from_rows(vec![vec![1, 2], vec![4, 3]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn maj_polynomials() {
        let f21 = f_poly(&SkewShape::straight(part(&[2, 1])));
        assert_eq!(f21, BivarPoly::from_q_coeffs([0, 1, 1]));
        assert_eq!(f_poly_hook(&part(&[2, 1])), f21);
        assert_eq!(f_poly(&SkewShape::straight(part(&[6]))), BivarPoly::one());
        assert_eq!(f_poly_hook(&part(&[1, 1, 1, 1])), BivarPoly::pq_pow(0, 6));
        assert_eq!(f_poly(&SkewShape::straight(part(&[2, 2]))), BivarPoly::from_q_coeffs([0, 0, 1, 0, 1]));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 0..=8 {
            for la in Partition::all(n) {
                assert_eq!(f_poly_hook(&la), f_poly(&SkewShape::straight(la.clone())), "{la}");
            }
        }
    }

    #[test]
    fn bigint_kernel_agrees_with_wrapping_kernel() {
        let la = part(&[5, 3, 3, 1]);
        let w: Vec<BigInt> = hook_quotient::<Wrapping<u128>>(&la).iter().map(|c| c.to_bigint()).collect();
        assert_eq!(w, hook_quotient::<BigInt>(&la));
    }

    #[test]
    fn transpose_complements_maj() {
        for n in 0usize..=7 {
            let total = n * n.saturating_sub(1) / 2;
            for la in Partition::all(n) {
                for t in enumerate_syt(&SkewShape::straight(la)) {
                    let tt = t.transpose();
                    assert_eq!(t.maj() + tt.maj(), total);
                    assert_eq!(tt.transpose(), t);
                }
            }
        }
    }

    #[test]
    fn restriction_roundtrip() {
        for la in Partition::all(6) {
            for t in enumerate_syt(&SkewShape::straight(la)) {
                for k in 0..=6 {
                    let low = t.restrict_low(k).unwrap();
                    let high = t.restrict_high(k).unwrap();
                    assert_eq!(Tableau::join(&low, &high).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn skew_poly_counts() {
        let skew = SkewShape::new(part(&[4, 3, 2]), part(&[2, 1])).unwrap();
        assert_eq!(f_poly(&skew).coeff_sum(), syt_count(&skew));
    }
}
