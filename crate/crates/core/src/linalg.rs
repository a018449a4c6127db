//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Rank of a list of row vectors (all of the same length).
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..ncols {
                let delta = &f * &m[r][j];
                m[i][j] -= delta;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves `Σ_j x_j columns[j][n] = target[n]` for every row `n < rows`.
///
/// Columns are eliminated in order; each takes as pivot the first
/// not-yet-used row (in row order) with a nonzero entry. After
/// elimination every non-pivot row must have a zero right-hand side.
pub fn solve_columns(columns: &[&[Rational]], target: &[Rational], rows: usize) -> Result<Vec<Rational>> {
    let unknowns = columns.len();
    // augmented matrix, row-major: `unknowns` coefficients then the rhs
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|n| {
            let mut row: Vec<Rational> = columns.iter().map(|col| col[n].clone()).collect();
            row.push(target[n].clone());
            row
        })
        .collect();
    let mut pivot_row = vec![usize::MAX; unknowns];
    let mut used = vec![false; rows];
    for c in 0..unknowns {
        let Some(p) = (0..rows).find(|&i| !used[i] && !m[i][c].is_zero()) else {
            let pivots = pivot_row.iter().filter(|&&r| r != usize::MAX).count();
            return Err(Error::Underdetermined { pivots, unknowns });
        };
        used[p] = true;
        pivot_row[c] = p;
        let inv = m[p][c].recip();
        for j in c..=unknowns {
            let v = &m[p][j] * &inv;
            m[p][j] = v;
        }
        let pivot = m[p].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == p || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..=unknowns {
                if !pivot[j].is_zero() {
                    row[j] -= &f * &pivot[j];
                }
            }
        }
    }
    if let Some(index) = (0..rows).find(|&i| !used[i] && !m[i][unknowns].is_zero()) {
        return Err(Error::Inconsistent { index });
    }
    Ok(pivot_row.iter().map(|&p| m[p][unknowns].clone()).collect())
}
