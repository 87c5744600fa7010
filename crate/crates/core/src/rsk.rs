//! Robinson–Schensted correspondence by row insertion.

use crate::error::{PermError, TableauError};
use crate::perm::Permutation;
use crate::tableau::{Partition, SkewShape, Tableau};

fn to_tableau(rows: Vec<Vec<usize>>) -> Tableau {
    Tableau::from_rows(rows).expect("row insertion produces standard tableaux")
}

/// Row-inserts `x` into `rows`, returning the index of the row that grew.
fn insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(pos) => x = std::mem::replace(&mut row[pos], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// `pi -> (P, Q)`: insertion tableau of `pi_1 ... pi_n` and its recording tableau.
pub fn rs(pi: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, v) in pi.word().into_iter().enumerate() {
        let r = insert(&mut p, v);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (to_tableau(p), to_tableau(q))
}

/// Insertion tableau only.
pub fn p_tableau(pi: &Permutation) -> Tableau {
    rs(pi).0
}

/// Recording tableau only.
pub fn q_tableau(pi: &Permutation) -> Tableau {
    rs(pi).1
}

/// Inverse of [`rs`]: repeatedly removes the largest entry of `Q` and reverse-bumps in `P`.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation, TableauError> {
    if p.shape() != q.shape() {
        return Err(TableauError::DifferentShapes);
    }
    if !p.shape().is_straight() {
        return Err(TableauError::ShapeMismatch);
    }
    let n = p.size();
    let mut prow: Vec<Vec<usize>> = p.rows().to_vec();
    let mut qrow: Vec<Vec<usize>> = q.rows().to_vec();
    let mut word = vec![0; n];
    for pos in (1..=n).rev() {
        let r = qrow
            .iter()
            .position(|row| row.last() == Some(&pos))
            .expect("largest entry of a standard tableau ends its row");
        qrow[r].pop();
        let mut x = prow[r].pop().unwrap();
        for row in prow[..r].iter_mut().rev() {
            // largest entry smaller than x gets bumped up
            let idx = row.iter().rposition(|&y| y < x).expect("row insertion invariant");
            x = std::mem::replace(&mut row[idx], x);
        }
        word[pos - 1] = x;
        while prow.last().is_some_and(|r| r.is_empty()) {
            prow.pop();
            qrow.pop();
        }
    }
    Ok(Permutation::new(&word).expect("reverse bumping yields a permutation"))
}

/// `pi -> P` for an involution (then `P = Q`).
pub fn rs_involution(pi: &Permutation) -> Result<Tableau, PermError> {
    if !pi.is_involution() {
        return Err(PermError::NotInvolution);
    }
    Ok(rs(pi).0)
}

pub fn rs_involution_inverse(p: &Tableau) -> Result<Permutation, TableauError> {
    rs_inverse(p, p)
}

/// Every standard tableau of size `n`, grouped by shape in the order of [`Partition::all`].
pub fn all_syt(n: usize) -> Vec<Tableau> {
    Partition::all(n)
        .into_iter()
        .flat_map(|la| crate::tableau::enumerate_syt(&SkewShape::straight(la)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_is_one_row() {
        let (pt, qt) = rs(&Permutation::identity(5));
        assert_eq!(pt.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(pt, qt);
    }

    #[test]
    fn small_insertions() {
        let (pt, qt) = rs(&p("312"));
        assert_eq!(pt.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(qt.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(rs_inverse(&pt, &qt).unwrap(), p("312"));
        let t = rs_involution(&p("21")).unwrap();
        assert_eq!(t.rows(), &[vec![1], vec![2]]);
        assert!(rs_involution(&p("312")).is_err());
    }

    #[test]
    fn inverse_rejects_mismatched_shapes() {
        let a = Tableau::from_rows(vec![vec![1, 2]]).unwrap();
        let b = Tableau::from_rows(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(rs_inverse(&a, &b), Err(TableauError::DifferentShapes));
    }

    #[test]
    fn roundtrip_and_descent_transport() {
        for pi in Permutation::all(6) {
            let (pt, qt) = rs(&pi);
            assert_eq!(rs_inverse(&pt, &qt).unwrap(), pi);
            assert_eq!(pi.descents(), qt.descents());
            assert_eq!(pi.inverse().descents(), pt.descents());
            assert_eq!(pi.is_involution(), pt == qt);
        }
    }

    #[test]
    fn involutions_biject_with_tableaux() {
        for n in 0..=8 {
            let images: BTreeSet<Tableau> = Permutation::involutions(n)
                .iter()
                .map(|pi| rs_involution(pi).unwrap())
                .collect();
            assert_eq!(images.len(), Permutation::involutions(n).len());
            assert_eq!(images, all_syt(n).into_iter().collect());
            for t in &images {
                assert_eq!(&rs_involution(&rs_involution_inverse(t).unwrap()).unwrap(), t);
            }
        }
    }
}
