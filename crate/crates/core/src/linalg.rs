//! Small exact linear algebra: Gaussian elimination over Q and the Smith
//! normal form over Z. Matrices here never exceed a handful of rows, so the
//! implementations favour clarity over asymptotics.

use crate::rat::Rat;
use num_traits::{One, Zero};

/// Rank over Q of a row-major matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col];
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col] / inv;
                for c in col..ncols {
                    let sub = m[r][c] * factor;
                    m[i][c] -= sub;
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Solves `A x = b` and returns the solution only if it exists and is unique.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let nrows = a.len();
    assert_eq!(nrows, b.len());
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col];
        for c in col..=ncols {
            m[r][c] /= inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col];
                for c in col..=ncols {
                    let sub = m[r][c] * factor;
                    m[i][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    // inconsistent system: a zero row with nonzero right-hand side
    for row in m.iter().skip(r) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    // underdetermined: fewer pivots than unknowns
    if pivot_cols.len() < ncols {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[i][ncols];
    }
    Some(x)
}

/// Inverse of a square matrix over Q, or `None` when singular.
pub fn inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col];
        for c in 0..2 * n {
            m[col][c] /= inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col];
                for c in 0..2 * n {
                    let sub = m[col][c] * factor;
                    m[i][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn det(a: &[Vec<i128>]) -> i128 {
    // fraction-free Bareiss elimination
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Smith normal form `U A V = D`. Only the diagonal of `D` and the right
/// transform `V` are returned; that is what the group computations need.
pub struct Snf {
    /// Diagonal entries, nonnegative, each dividing the next, padded with
    /// zeros up to `min(nrows, ncols)`.
    pub diag: Vec<i128>,
    /// Unimodular `ncols x ncols` right factor, row-major.
    pub right: Vec<Vec<i128>>,
}

pub fn smith_normal_form(a: &[Vec<i128>]) -> Snf {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut v: Vec<Vec<i128>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| i128::from(i == j)).collect())
        .collect();
    let steps = nrows.min(ncols);
    let mut k = 0;
    while k < steps {
        // pivot: minimal nonzero |entry| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            for row in v.iter_mut() {
                row.swap(k, pj);
            }
        }
        // clear column k with row operations, column k's row with column ops
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in k + 1..nrows {
                if m[i][k] != 0 {
                    let q = m[i][k].div_euclid(m[k][k]);
                    for j in k..ncols {
                        m[i][j] -= q * m[k][j];
                    }
                    if m[i][k] != 0 {
                        m.swap(k, i);
                        dirty = true;
                    }
                }
            }
            for j in k + 1..ncols {
                if m[k][j] != 0 {
                    let q = m[k][j].div_euclid(m[k][k]);
                    for row in m.iter_mut() {
                        let sub = q * row[k];
                        row[j] -= sub;
                    }
                    for row in v.iter_mut() {
                        let sub = q * row[k];
                        row[j] -= sub;
                    }
                    if m[k][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(k, j);
                        }
                        for row in v.iter_mut() {
                            row.swap(k, j);
                        }
                        dirty = true;
                    }
                }
            }
        }
        // divisibility: d_k must divide every later entry
        let mut fixed = true;
        'scan: for i in k + 1..nrows {
            for j in k + 1..ncols {
                if m[i][j] % m[k][k] != 0 {
                    for c in k..ncols {
                        m[k][c] += m[i][c];
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            if m[k][k] < 0 {
                for row in m.iter_mut() {
                    row[k] = -row[k];
                }
                for row in v.iter_mut() {
                    row[k] = -row[k];
                }
            }
            k += 1;
        }
    }
    let diag = (0..steps).map(|i| m[i][i].abs()).collect();
    Snf { diag, right: v }
}

/// Basis (as rows) of the integer kernel `{x : A x = 0}`.
pub fn integer_kernel(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let ncols = if a.is_empty() { 0 } else { a[0].len() };
    let snf = smith_normal_form(a);
    let rank = snf.diag.iter().filter(|&&d| d != 0).count();
    (rank..ncols)
        .map(|j| (0..ncols).map(|i| snf.right[i][j]).collect())
        .collect()
}
