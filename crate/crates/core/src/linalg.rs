//! Exact dense linear algebra over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// Row-reduced echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|v| !v.is_zero()));
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Some solution of `A·x = b` (free variables set to zero), if consistent.
/// `a` is given as rows.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for (row, &c) in aug.iter().zip(&pivots) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// Transpose of a row-major matrix with `ncols` columns.
pub fn transpose(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&m(&[])), 0);
    }

    #[test]
    fn solving() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let b = m(&[&[3, 1]])[0].clone();
        assert_eq!(solve(&a, &b), Some(m(&[&[2, 1]])[0].clone()));
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&singular, &m(&[&[1, 3]])[0]), None);
    }
}
