//! Dense exact linear algebra over `Q`.
//!
//! Plain rational Gauss-Jordan elimination with first-nonzero pivoting in
//! column order. The reduced row echelon form is unique, so the particular
//! solution and the nullspace basis returned here are reproducible.

use num_traits::Zero;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{CapelliError, Result};
use crate::rational::{zero, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = crate::rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(CapelliError::DimensionMismatch {
                    expected: c,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Rational]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(CapelliError::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CapelliError::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: other.rows * other.cols,
            });
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Reduced row echelon form, returning the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.entries.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = self[(r, c)].recip();
            for k in c..self.cols {
                let v = &self[(r, k)] * &inv;
                self[(r, k)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for k in c..self.cols {
                    if self[(r, k)].is_zero() {
                        continue;
                    }
                    let v = &self[(i, k)] - &f * &self[(r, k)];
                    self[(i, k)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    NoSolution,
    Underdetermined {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<Solution> {
    if a.rows() != b.len() {
        return Err(CapelliError::DimensionMismatch {
            expected: a.rows(),
            actual: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = RationalMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(Solution::NoSolution);
    }
    let mut x = vec![zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, n)].clone();
    }
    if pivots.len() == n {
        return Ok(Solution::Unique(x));
    }
    Ok(Solution::Underdetermined {
        particular: x,
        nullspace: nullspace_from_rref(&aug, &pivots, n),
    })
}

/// A basis of `{x : A x = 0}`; empty iff `A` has full column rank.
pub fn nullspace_basis(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = m.rref();
    nullspace_from_rref(&m, &pivots, a.cols())
}

fn nullspace_from_rref(m: &RationalMatrix, pivots: &[usize], n: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero(); n];
            v[f] = crate::rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[(r, f)].clone();
            }
            v
        })
        .collect()
}
