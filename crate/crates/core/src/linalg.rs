//! Exact Gaussian elimination over `Rational`.

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

fn pivot_row(m: &Matrix, col: usize, from: usize) -> Option<usize> {
    (from..m.len()).find(|&r| !m[r][col].is_zero())
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = pivot_row(&a, col, col) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = det * &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let d = &f * &a[col][c];
                a[r][c] -= &d;
            }
        }
    }
    det
}

/// Row rank of an arbitrary rectangular matrix.
pub fn rank(m: &Matrix) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a = m.clone();
    let cols = a[0].len();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = pivot_row(&a, col, r) else { continue };
        a.swap(p, r);
        let piv = a[r][col].clone();
        for i in r + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &piv;
            for c in col..cols {
                let d = &f * &a[r][c];
                a[i][c] -= &d;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Solves `m · x = rhs` for square nonsingular `m`.
pub fn solve(m: &Matrix, rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = pivot_row(&a, col, col).ok_or(Error::SingularMatrix)?;
        a.swap(p, col);
        let piv = a[col][col].clone();
        for c in col..=n {
            a[col][c] = &a[col][c] / &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..=n {
                let d = &f * &a[col][c];
                a[r][c] -= &d;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let id = identity(n);
    let cols = (0..n)
        .map(|j| {
            let e: Vec<Rational> = id.iter().map(|row| row[j].clone()).collect();
            solve(m, &e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(transpose(&cols))
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Row vector times matrix: `v · m`.
pub fn vec_mat(v: &[Rational], m: &Matrix) -> Vec<Rational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| v.iter().zip(m).map(|(a, row)| a * &row[j]).sum()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().map(|row| vec_mat(row, b)).collect()
}
