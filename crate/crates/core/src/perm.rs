//! Permutations in one-line notation and the operations built on their
//! permutation matrices: restrictions, the block decomposition `phi_{a,b}`
//! and shuffles.
//!
//! Words are stored 0-based; everything that crosses the API boundary
//! (constructors taking `&[usize]`, `Display`, parsing) is 1-based.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::PermError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// From a 1-based one-line word.
    pub fn new(word: &[usize]) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation(word.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            word: word.iter().map(|v| v - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(word: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = word.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Self { word }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (0..n).collect() }
    }

    /// Decreasing permutation `n ... 2 1`.
    pub fn reverse(n: usize) -> Self {
        Self { word: (0..n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// 1-based one-line word.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.word
    }

    /// `pi_i` for 1-based `i`, 1-based value.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v] = i;
        }
        Self { word: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| self.word[v] == i)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.len() != other.len() {
            return Err(PermError::Dimension("composition of different sizes".into()));
        }
        Ok(Self {
            word: other.word.iter().map(|&v| self.word[v]).collect(),
        })
    }

    /// Descent set, 1-based positions `i` with `pi_i > pi_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .sum()
    }

    /// Major index of the inverse.
    pub fn imaj(&self) -> usize {
        // i is a descent of pi^-1 iff i+1 appears to the left of i in pi.
        let inv = self.inverse();
        (1..self.len()).filter(|&i| inv.word[i - 1] > inv.word[i]).sum()
    }

    fn check_cut(&self, k: usize) -> Result<(), PermError> {
        if k > self.len() {
            Err(PermError::OutOfRange { k, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// `pi_{<=k}`: the standardized subword of values `<= k`.
    pub fn restrict_low(&self, k: usize) -> Result<Self, PermError> {
        self.check_cut(k)?;
        Ok(Self {
            word: self.word.iter().copied().filter(|&v| v < k).collect(),
        })
    }

    /// `pi_{>k}`: the standardized subword of values `> k`.
    pub fn restrict_high(&self, k: usize) -> Result<Self, PermError> {
        self.check_cut(k)?;
        Ok(Self {
            word: self.word.iter().filter(|&&v| v >= k).map(|v| v - k).collect(),
        })
    }

    /// `pi^{<=k}`: the standardized prefix of length `k`.
    pub fn prefix(&self, k: usize) -> Result<Self, PermError> {
        self.check_cut(k)?;
        Ok(Self {
            word: standardize(&self.word[..k]),
        })
    }

    /// `pi^{>k}`: the standardized suffix after position `k`.
    pub fn suffix(&self, k: usize) -> Result<Self, PermError> {
        self.check_cut(k)?;
        Ok(Self {
            word: standardize(&self.word[k..]),
        })
    }

    /// Permutation matrix, entry `(i, j)` is 1 iff `pi_i = j`.
    pub fn matrix(&self) -> ZeroOneMatrix {
        let n = self.len();
        ZeroOneMatrix {
            rows: n,
            cols: n,
            row_to_col: self.word.iter().map(|&v| Some(v)).collect(),
        }
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|word| Permutation { word })
    }

    /// All involutions of size `n`, in lexicographic order.
    pub fn involutions(n: usize) -> Vec<Permutation> {
        fn rec(word: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
            let Some(i) = word.iter().position(|w| w.is_none()) else {
                out.push(word.iter().map(|w| w.unwrap()).collect());
                return;
            };
            word[i] = Some(i);
            rec(word, out);
            for j in i + 1..word.len() {
                if word[j].is_none() {
                    word[i] = Some(j);
                    word[j] = Some(i);
                    rec(word, out);
                    word[j] = None;
                }
            }
            word[i] = None;
        }
        let mut out = Vec::new();
        rec(&mut vec![None; n], &mut out);
        out.sort();
        out.into_iter().map(|word| Permutation { word }).collect()
    }
}

/// Replaces each entry by its rank among the entries (0-based).
pub(crate) fn standardize(vals: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by_key(|&i| vals[i]);
    let mut out = vec![0; vals.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank;
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let compact = self.len() <= 9;
        let sep = if compact { "" } else { " " };
        write!(f, "{}", self.word.iter().map(|v| v + 1).join(sep))
    }
}

/// Accepts `5 1 3 6`, `5,1,3,6`, or the compact digit form `5136` when `n <= 9`.
/// The empty permutation is written `""`, `∅` or `-`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "-" {
            return Ok(Self::empty());
        }
        let bad = || PermError::Parse(s.to_string());
        let word: Vec<usize> = if t.contains([' ', ',']) {
            t.split([' ', ','])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            if t.len() > 9 {
                return Err(bad());
            }
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(&word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.word().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Vec::<usize>::deserialize(d)?;
        Permutation::new(&w).map_err(serde::de::Error::custom)
    }
}

/// A 0/1 word such as a row or column sum vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![false; n] }
    }

    pub fn ones(n: usize) -> Self {
        Self { bits: vec![true; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// All words of length `n` with exactly `k` ones, lexicographic (0 < 1).
    pub fn all_with_weight(n: usize, k: usize) -> Vec<BinaryWord> {
        if k > n {
            return Vec::new();
        }
        (0..n)
            .combinations(k)
            .map(|ones| {
                let mut bits = vec![false; n];
                for i in ones {
                    bits[i] = true;
                }
                BinaryWord { bits }
            })
            .sorted()
            .collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "ε");
        }
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "ε" {
            return Ok(Self::default());
        }
        t.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(PermError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BinaryWord::new)
    }
}

/// A 0-1 matrix with at most one 1 in every row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    row_to_col: Vec<Option<usize>>,
}

impl ZeroOneMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_to_col: vec![None; rows],
        }
    }

    /// From dense rows of 0/1 entries.
    pub fn from_rows(entries: &[Vec<u8>]) -> Result<Self, PermError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut row_to_col = Vec::with_capacity(rows);
        let mut col_used = vec![false; cols];
        for r in entries {
            if r.len() != cols {
                return Err(PermError::Dimension("ragged matrix".into()));
            }
            let ones: Vec<usize> = r
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, _)| j)
                .collect();
            if r.iter().any(|&x| x > 1) || ones.len() > 1 {
                return Err(PermError::NotPartialPermutation);
            }
            if let Some(&j) = ones.first() {
                if col_used[j] {
                    return Err(PermError::NotPartialPermutation);
                }
                col_used[j] = true;
            }
            row_to_col.push(ones.first().copied());
        }
        Ok(Self { rows, cols, row_to_col })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        u8::from(self.row_to_col[i] == Some(j))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Row sums.
    pub fn row_word(&self) -> BinaryWord {
        BinaryWord::new(self.row_to_col.iter().map(|c| c.is_some()).collect())
    }

    /// Column sums.
    pub fn col_word(&self) -> BinaryWord {
        let mut bits = vec![false; self.cols];
        for &j in self.row_to_col.iter().flatten() {
            bits[j] = true;
        }
        BinaryWord::new(bits)
    }

    /// The permutation left after deleting all-zero rows and columns.
    pub fn compress(&self) -> Permutation {
        let cols: Vec<usize> = self.row_to_col.iter().flatten().copied().collect();
        Permutation { word: standardize(&cols) }
    }

    /// `M ~ N`: both compress to the same permutation.
    pub fn equivalent(&self, other: &ZeroOneMatrix) -> bool {
        self.compress() == other.compress()
    }

    /// Submatrix of rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> ZeroOneMatrix {
        ZeroOneMatrix {
            rows: r1 - r0,
            cols: c1 - c0,
            row_to_col: self.row_to_col[r0..r1]
                .iter()
                .map(|c| c.filter(|&j| j >= c0 && j < c1).map(|j| j - c0))
                .collect(),
        }
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.to_rows().iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// The image of `phi_{a,b}`: the four block permutations of `M(pi)` cut
/// after column `a` and row `b`, together with the words locating their 1s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiImage {
    pub pi11: Permutation,
    pub pi12: Permutation,
    pub pi21: Permutation,
    pub pi22: Permutation,
    /// `col(M21)`, length `a`.
    pub c1: BinaryWord,
    /// `row(M12)`, length `b`.
    pub r1: BinaryWord,
    /// `col(M22)`, length `m = l - a`.
    pub c2: BinaryWord,
    /// `row(M22)`, length `n = l - b`.
    pub r2: BinaryWord,
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for PhiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{},{},{})",
            self.pi11, self.pi12, self.pi21, self.pi22, self.c1, self.r1, self.c2, self.r2
        )
    }
}

/// Block decomposition of `M(pi)` with the columns cut after `a` and rows after `b`.
pub fn phi(pi: &Permutation, a: usize, b: usize) -> Result<PhiImage, PermError> {
    let l = pi.len();
    if a > l || b > l {
        return Err(PermError::Dimension(format!("cut ({a},{b}) exceeds size {l}")));
    }
    let m = pi.matrix();
    let m11 = m.block(0, b, 0, a);
    let m12 = m.block(0, b, a, l);
    let m21 = m.block(b, l, 0, a);
    let m22 = m.block(b, l, a, l);
    Ok(PhiImage {
        pi11: m11.compress(),
        pi12: m12.compress(),
        pi21: m21.compress(),
        pi22: m22.compress(),
        c1: m21.col_word(),
        r1: m12.row_word(),
        c2: m22.col_word(),
        r2: m22.row_word(),
        a,
        b,
    })
}

/// Reassembles the permutation from its `phi_{a,b}` image.
pub fn phi_inverse(x: &PhiImage) -> Result<Permutation, PermError> {
    let (a, b) = (x.a, x.b);
    let m = x.c2.len();
    let n = x.r2.len();
    let dim = |msg: &str| PermError::Dimension(msg.to_string());
    if x.c1.len() != a || x.r1.len() != b {
        return Err(dim("c1/r1 lengths must be a/b"));
    }
    if a + m != b + n {
        return Err(dim("a + m must equal b + n"));
    }
    let j = x.pi11.len();
    let k = x.pi22.len();
    if j > a.min(b)
        || x.pi12.len() + j != b
        || x.pi21.len() + j != a
        || k + a != n + j
        || x.c1.weight() != a - j
        || x.r1.weight() != b - j
        || x.c2.weight() != k
        || x.r2.weight() != k
    {
        return Err(dim("block sizes and word weights are inconsistent"));
    }
    let l = a + m;
    let positions = |w: &BinaryWord, bit: bool, offset: usize| -> Vec<usize> {
        w.bits()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == bit)
            .map(|(i, _)| i + offset)
            .collect()
    };
    let mut word = vec![usize::MAX; l];
    let mut place = |rows: Vec<usize>, cols: Vec<usize>, p: &Permutation| {
        for (r, &c) in rows.iter().zip(p.zero_based()) {
            word[*r] = cols[c];
        }
    };
    place(positions(&x.r1, false, 0), positions(&x.c1, false, 0), &x.pi11);
    place(positions(&x.r1, true, 0), positions(&x.c2, false, a), &x.pi12);
    place(positions(&x.r2, false, b), positions(&x.c1, true, 0), &x.pi21);
    place(positions(&x.r2, true, b), positions(&x.c2, true, a), &x.pi22);
    debug_assert!(word.iter().all(|&v| v != usize::MAX));
    Ok(Permutation::from_zero_based(word))
}

/// `sf(sigma, tau; r)`: the i-th 0 of `r` becomes `sigma_i`, the j-th 1 becomes `a + tau_j`.
pub fn shuffle(sigma: &Permutation, tau: &Permutation, r: &BinaryWord) -> Result<Permutation, PermError> {
    let (a, b) = (sigma.len(), tau.len());
    if r.len() != a + b || r.weight() != b {
        return Err(PermError::Dimension(format!(
            "shuffle word {r} must have length {} and weight {b}",
            a + b
        )));
    }
    let mut lo = sigma.zero_based().iter();
    let mut hi = tau.zero_based().iter();
    let word = r
        .bits()
        .iter()
        .map(|&bit| if bit { a + hi.next().unwrap() } else { *lo.next().unwrap() })
        .collect();
    Ok(Permutation { word })
}
