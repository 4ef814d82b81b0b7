//! Dense exact linear algebra over ℚ. Matrices are row-major `Vec<Vec<Q>>`.

use num_traits::{One, Zero};

use crate::Q;

/// Brings `rows` to reduced row echelon form in place, pivoting on the
/// leftmost available column, and drops zero rows. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(matrix: &[Vec<Q>]) -> usize {
    let mut m = matrix.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for an `nrows × ncols` matrix.
pub fn nullspace(matrix: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = matrix.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}
