//! Dense rectangular matrices of rationals with exact products and minors.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{rat, Integer, Rational};
use crate::error::Error;

/// Immutable dense matrix of [`Rational`] entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    /// Build a `rows`x`cols` matrix from an entry function.
    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(entry(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Build from rows; all rows must have equal, non-zero length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        let entries = rows.into_iter().flatten().collect();
        ExactMatrix { rows: n, cols, entries }
    }

    /// Convenience constructor from machine-integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    /// Exact matrix product. Panics when `self.cols() != rhs.rows()`.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "dimension mismatch: {}x{} times {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * rhs.get(k, j);
            }
            acc
        })
    }

    /// The matrix with both index orders reversed: entry (i, j) of the result
    /// is entry (rows-1-i, cols-1-j) of `self`.
    pub fn reversed(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(self.rows - 1 - i, self.cols - 1 - j).clone()
        })
    }

    /// Exact determinant of the square submatrix selected by equal-sized,
    /// strictly increasing row and column index sets.
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Rational, Error> {
        if row_idx.len() != col_idx.len() {
            return Err(Error::UnequalCardinalities {
                rows: row_idx.len(),
                cols: col_idx.len(),
            });
        }
        if row_idx.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        validate_index_set(row_idx, self.rows)?;
        validate_index_set(col_idx, self.cols)?;
        Ok(self.minor_unchecked(row_idx, col_idx))
    }

    /// Minor without index validation; callers guarantee well-formed sets.
    pub(crate) fn minor_unchecked(&self, row_idx: &[usize], col_idx: &[usize]) -> Rational {
        let sub: Vec<Vec<Rational>> = row_idx
            .iter()
            .map(|&i| col_idx.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        determinant_of_rows(sub)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination. Rational
    /// entries are cleared to integers row by row first, so every
    /// intermediate value of the elimination stays integral.
    pub fn determinant(&self) -> Result<Rational, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let all: Vec<usize> = (0..self.rows).collect();
        let sub: Vec<Vec<Rational>> = all
            .iter()
            .map(|&i| all.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        Ok(determinant_of_rows(sub))
    }

    /// First entry position at which the two matrices differ, scanning
    /// row-major; `None` when equal. Panics on shape mismatch.
    pub fn first_difference(&self, other: &ExactMatrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

fn validate_index_set(idx: &[usize], bound: usize) -> Result<(), Error> {
    for w in idx.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::IndexSetNotIncreasing);
        }
    }
    for &i in idx {
        if i >= bound {
            return Err(Error::IndexOutOfRange { index: i, bound });
        }
    }
    Ok(())
}

/// Determinant of a square table of rationals. Rows are scaled to integers
/// (tracking the product of the scale factors), then eliminated fraction-free.
fn determinant_of_rows(rows: Vec<Vec<Rational>>) -> Rational {
    let mut scale = Integer::one();
    let mut int_rows: Vec<Vec<Integer>> = Vec::with_capacity(rows.len());
    for row in rows {
        let lcm = row
            .iter()
            .fold(Integer::one(), |acc, e| acc.lcm(e.denom()));
        int_rows.push(
            row.iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    Rational::new(bareiss_determinant(int_rows), scale)
}

/// Fraction-free elimination with row pivoting. Every division is checked to
/// be exact; a non-zero remainder means the elimination invariant was broken
/// and is a bug, so it panics.
fn bareiss_determinant(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::one();
    }
    let mut negated = false;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Integer::zero();
            };
            m.swap(k, p);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                assert!(
                    r.is_zero(),
                    "fraction-free elimination produced a non-integral intermediate"
                );
                m[i][j] = q;
            }
            m[i][k] = Integer::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negated {
        -det
    } else {
        det
    }
}

impl fmt::Display for ExactMatrix {
    /// Human-readable aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = rendered.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", rendered[i * self.cols + j])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
