//! Gaussian elimination over F_q.
//!
//! Matrices are row-major `Vec<Vec<Fq>>`. Pivots are the first nonzero entry
//! scanning rows top-down within a column; columns are scanned left to right.

use crate::base::{BaseField, Fq};

/// Reduces `rows` to reduced row echelon form, pivoting only in the first
/// `pivot_cols` columns. Returns the pivot column of each leading row.
pub fn rref(k: &BaseField, rows: &mut [Vec<Fq>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = k.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = k.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = k.sub(*x, k.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(k: &BaseField, rows: &[Vec<Fq>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(k, &mut m, ncols).len()
}

/// Kernel basis vectors read off an echelon form: one per free column.
fn kernel_from_rref(k: &BaseField, rows: &[Vec<Fq>], pivots: &[usize], ncols: usize) -> Vec<Vec<Fq>> {
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0; ncols];
            v[f] = 1;
            for (row, &c) in rows.iter().zip(pivots) {
                v[c] = k.neg(row[f]);
            }
            v
        })
        .collect()
}

/// A basis of `{v : A v = 0}` where `A` has `ncols` columns.
pub fn kernel(k: &BaseField, rows: &[Vec<Fq>], ncols: usize) -> Vec<Vec<Fq>> {
    let mut m = rows.to_vec();
    let pivots = rref(k, &mut m, ncols);
    kernel_from_rref(k, &m, &pivots, ncols)
}

/// Solution set of `A v = b`: a particular solution (free variables zero)
/// when one exists, plus a kernel basis from the same elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Option<Vec<Fq>>,
    pub kernel: Vec<Vec<Fq>>,
}

pub fn solve_affine(k: &BaseField, rows: &[Vec<Fq>], rhs: &[Fq], ncols: usize) -> AffineSolution {
    assert_eq!(rows.len(), rhs.len(), "row count must match right-hand side");
    let mut m: Vec<Vec<Fq>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            debug_assert_eq!(row.len(), ncols);
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let pivots = rref(k, &mut m, ncols);
    let consistent = m[pivots.len()..].iter().all(|row| row[ncols] == 0);
    let particular = consistent.then(|| {
        let mut v = vec![0; ncols];
        for (row, &c) in m.iter().zip(&pivots) {
            v[c] = row[ncols];
        }
        v
    });
    let kernel = kernel_from_rref(k, &m, &pivots, ncols);
    AffineSolution { particular, kernel }
}

/// `A v`.
pub fn apply(k: &BaseField, rows: &[Vec<Fq>], v: &[Fq]) -> Vec<Fq> {
    rows.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &x)| k.add(acc, k.mul(a, x))))
        .collect()
}
