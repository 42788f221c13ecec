//! Exact linear algebra over the rationals: row reduction, spans, kernels.

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Row space of a finite set of vectors, held in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
        for r in &rows {
            assert_eq!(r.len(), width, "row width mismatch");
        }
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..width {
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = rows[top][col].recip().expect("nonzero pivot");
            for x in rows[top].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != top && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        RowSpace {
            width,
            rows,
            pivots,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced basis, one row per pivot.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Component of `v` left after eliminating the pivot columns; zero iff `v` is in the span.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if !out[col].is_zero() {
                let f = out[col].clone();
                for (x, y) in out.iter_mut().zip(row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Basis of `{x : A x = 0}` for the matrix whose rows are `equations`.
pub fn kernel(width: usize, equations: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rs = RowSpace::new(width, equations);
    let free: Vec<usize> = (0..width).filter(|c| !rs.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); width];
            x[f] = Rational::one();
            for (row, &p) in rs.rows.iter().zip(&rs.pivots) {
                x[p] = -&row[f];
            }
            x
        })
        .collect()
}

/// Product of a square matrix (row-major) with a column vector.
pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
