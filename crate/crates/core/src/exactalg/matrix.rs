use num_traits::{One, Zero};

use super::{RatVector, Rational};
use crate::error::{Error, Result};

/// Dense rational matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    ncols: usize,
}

impl RatMatrix {
    pub fn new(rows: Vec<RatVector>) -> Self {
        let ncols = rows.first().map_or(0, RatVector::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "matrix rows must be rectangular"
        );
        RatMatrix { rows, ncols }
    }

    /// Builds the matrix whose columns are `cols` (each of length `nrows`).
    pub fn from_columns(cols: &[RatVector], nrows: usize) -> Self {
        assert!(cols.iter().all(|c| c.len() == nrows), "column length mismatch");
        let rows = (0..nrows)
            .map(|i| RatVector::new(cols.iter().map(|c| c[i].clone()).collect()))
            .collect();
        RatMatrix {
            rows,
            ncols: cols.len(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                RatVector::new(
                    (0..n)
                        .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                        .collect(),
                )
            })
            .collect();
        RatMatrix { rows, ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn mul_vec(&self, x: &RatVector) -> RatVector {
        assert_eq!(x.len(), self.ncols, "vector length mismatch");
        RatVector::new(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "inverse of non-square matrix");
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.entries().to_vec();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let pivots = row_reduce(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        Some(RatMatrix::new(
            aug.into_iter()
                .map(|r| RatVector::new(r[n..].to_vec()))
                .collect(),
        ))
    }
}

/// Reduces `m` to reduced row echelon form using only the first `ncols`
/// columns for pivoting. Returns the pivot columns in order.
fn row_reduce(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for e in m[r].iter_mut() {
            *e *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Pivot columns of the row echelon form; for a matrix with independent
/// rows these index a nonsingular square submatrix.
pub fn pivot_columns(a: &RatMatrix) -> Vec<usize> {
    let mut m: Vec<Vec<Rational>> = a.rows.iter().map(|r| r.entries().to_vec()).collect();
    row_reduce(&mut m, a.ncols)
}

pub fn rank(a: &RatMatrix) -> usize {
    let mut m: Vec<Vec<Rational>> = a.rows.iter().map(|r| r.entries().to_vec()).collect();
    row_reduce(&mut m, a.ncols).len()
}

/// Determinant by fraction-tracking elimination.
pub fn determinant(a: &RatMatrix) -> Rational {
    let n = a.nrows();
    assert_eq!(n, a.ncols, "determinant of non-square matrix");
    let mut m: Vec<Vec<Rational>> = a.rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (e, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *e -= &f * p;
            }
        }
    }
    det
}

/// Solves `A x = b` exactly for a matrix with independent columns.
///
/// Returns `Ok(None)` when `b` lies outside the column span.
pub fn solve_exact(a: &RatMatrix, b: &RatVector) -> Result<Option<RatVector>> {
    assert_eq!(a.nrows(), b.len(), "right-hand side length mismatch");
    let n = a.ncols;
    let mut m: Vec<Vec<Rational>> = a
        .rows
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut row = r.entries().to_vec();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut m, n);
    if pivots.len() < n {
        return Err(Error::DependentColumns);
    }
    if m[n..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    Ok(Some(RatVector::new(m[..n].iter().map(|row| row[n].clone()).collect())))
}
