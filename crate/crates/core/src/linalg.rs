//! Small exact linear-algebra helpers shared across the crate.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::grpchar::cyclotomic::{Int, Rational};

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank_rational(mut rows: Vec<Vec<Rational>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col].clone();
        for r in pivot_row + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inv;
            for c in col..ncols {
                let delta = &factor * &rows[pivot_row][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    rank
}

/// Rank of an integer matrix, via fraction-free (Bareiss) elimination.
pub fn rank_int(mut rows: Vec<Vec<Int>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    let mut prev = Int::one();
    for col in 0..ncols {
        let Some(src) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let pivot = rows[pivot_row][col].clone();
        for r in pivot_row + 1..nrows {
            let lead = rows[r][col].clone();
            for c in col..ncols {
                let num = &pivot * &rows[r][c] - &lead * &rows[pivot_row][c];
                rows[r][c] = &num / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    rank
}

/// Determinant of a square rational matrix.
pub fn det_rational(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(src) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if src != col {
            rows.swap(col, src);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &rows[col][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
    }
    det
}

/// Determinant of a square integer matrix.
pub fn det_int(rows: &[Vec<i64>]) -> Int {
    let rat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from(Int::from(x))).collect())
        .collect();
    let d = det_rational(rat);
    debug_assert!(d.is_integer());
    d.to_integer()
}

/// Solves `A x = b` over the rationals. Returns one solution (free variables
/// set to zero) or `None` when the system is inconsistent.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..nrows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, src);
        let pivot = aug[pivot_row][col].clone();
        for c in col..=ncols {
            aug[pivot_row][c] = &aug[pivot_row][c] / &pivot;
        }
        for r in 0..nrows {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=ncols {
                    let delta = &factor * &aug[pivot_row][c];
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero right-hand side.
    for r in pivot_row..nrows {
        if !aug[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[row][ncols].clone();
    }
    Some(x)
}

/// gcd of a slice of integers (nonnegative result; 0 for the all-zero slice).
pub fn gcd_slice(values: &[i64]) -> i64 {
    let mut g: i64 = 0;
    for &v in values {
        g = gcd_i64(g, v.abs());
    }
    g
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Basis of the lattice `{x ∈ Z^d : a·x = 0}` for a nonzero integer vector
/// `a`, obtained by unimodular column operations on the identity.
pub fn integer_kernel_basis(a: &[i64]) -> Vec<Vec<i64>> {
    let d = a.len();
    let mut w: Vec<i64> = a.to_vec();
    let mut cols: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..d).filter(|&i| w[i] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        // Reduce the largest entry by the smallest nonzero one.
        let &jmin = nonzero
            .iter()
            .min_by_key(|&&i| w[i].abs())
            .expect("nonempty");
        for &i in &nonzero {
            if i == jmin {
                continue;
            }
            let q = w[i].div_euclid(w[jmin]);
            if q != 0 {
                w[i] -= q * w[jmin];
                for r in 0..d {
                    let delta = q * cols[jmin][r];
                    cols[i][r] -= delta;
                }
            }
        }
    }
    let keep: Vec<usize> = (0..d).filter(|&i| w[i] == 0).collect();
    keep.into_iter().map(|i| cols[i].clone()).collect()
}

/// Number of affinely independent points among `points` (affine rank + 1).
pub fn affine_independent_count(points: &[Vec<i64>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base.iter())
                .map(|(&x, &y)| Int::from(x - y))
                .collect()
        })
        .collect();
    rank_int(diffs) + 1
}

/// Calls `f` for every k-subset of `0..n`, in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // Advance to the next combination.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + n - k {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
        if k == 0 {
            return;
        }
    }
}

/// Rational nullspace basis of a matrix with `ncols` columns (rows are
/// relations; the row list may be empty).
pub fn nullspace_rational(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let nrows = rows.len();
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(src) = (r..nrows).find(|&row| !a[row][col].is_zero()) else {
            continue;
        };
        a.swap(r, src);
        let pivot = a[r][col].clone();
        for c in col..ncols {
            a[r][c] = &a[r][c] / &pivot;
        }
        for row in 0..nrows {
            if row != r && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for c in col..ncols {
                    let delta = &factor * &a[r][c];
                    a[row][c] = &a[row][c] - &delta;
                }
            }
        }
        pivot_col_of_row.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let pivot_cols: alloc::collections::BTreeSet<usize> =
        pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Small binomial coefficient as i64; arguments are desk-scale.
pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

#[allow(unused)]
pub fn is_zero_int(v: &Int) -> bool {
    v.is_zero()
}
