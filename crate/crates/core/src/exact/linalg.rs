//! Dense linear algebra over an exact field by fraction-free (Bareiss)
//! elimination.

use alloc::vec::Vec;

use super::field::Field;

/// Result of eliminating a matrix: rank, pivot columns, and the original
/// indices of the pivot rows. The pivot rows and columns select a maximal
/// nonsingular minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub pivot_rows: Vec<usize>,
}

pub fn echelon<F: Field>(rows: &[Vec<F>]) -> Echelon {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut perm: Vec<usize> = (0..m.len()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = F::one();
    let mut pivot_cols = Vec::new();
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(r) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, r);
        perm.swap(rank, r);
        let piv = m[rank][c].clone();
        for i in rank + 1..m.len() {
            let lead = m[i][c].clone();
            for j in c + 1..ncols {
                let v = m[i][j].mul(&piv).sub(&lead.mul(&m[rank][j]));
                m[i][j] = v.div(&prev);
            }
            m[i][c] = F::zero();
        }
        prev = piv;
        pivot_cols.push(c);
        rank += 1;
    }
    let mut pivot_rows: Vec<usize> = perm[..rank].to_vec();
    pivot_rows.sort_unstable();
    Echelon {
        rank,
        pivot_cols,
        pivot_rows,
    }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    echelon(rows).rank
}

/// Dimension of `{ v : M v = 0 }`.
pub fn nullity<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    ncols - rank(rows)
}

pub fn det<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut prev = F::one();
    let mut neg = false;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return F::zero();
        };
        if r != k {
            m.swap(k, r);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return F::one();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        d.neg()
    } else {
        d
    }
}

/// Square submatrix on the given rows and columns.
pub fn minor<F: Field>(rows: &[Vec<F>], ri: &[usize], ci: &[usize]) -> Vec<Vec<F>> {
    ri.iter()
        .map(|&r| ci.iter().map(|&c| rows[r][c].clone()).collect())
        .collect()
}
