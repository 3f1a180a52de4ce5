use num_traits::{One, Zero};

use super::Rational;

/// Row-major dense matrix over Q.
pub type QMatrix = Vec<Vec<Rational>>;

/// Reduced row echelon form; returns the reduced nonzero rows and pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (QMatrix, Vec<usize>) {
    let mut m: QMatrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// Coefficients `c` with `sum c_i * vectors[i] = target`, if any.
pub fn solve_unique(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = vectors.len();
    let n = target.len();
    // Columns are the vectors; augmented with the target.
    let aug: QMatrix = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &c) in red.iter().zip(&pivots) {
        sol[c] = row[k].clone();
    }
    Some(sol)
}

/// Basis of `{ y : rows * y = 0 }`, i.e. the functionals annihilating every row.
pub fn left_kernel(rows: &[Vec<Rational>], ncols: usize) -> QMatrix {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![Rational::zero(); ncols];
            y[f] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                y[p] = -row[f].clone();
            }
            y
        })
        .collect()
}
