//! Total non-negativity certification by exhaustive exact minor enumeration,
//! closure transforms, and the lattice-path counting oracle.
//!
//! Minors are enumerated by increasing order, then by lexicographically
//! increasing row set, then column set. Enumeration never stops early: every
//! minor up to the order cap is evaluated, so the checked count and the
//! (lexicographically first) witness are identical between the serial and
//! parallel runs.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::exact::{ExactMatrix, Integer, Rational};

/// A negative minor, identified by its row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Rational,
}

/// Result of a total-non-negativity check. `holds` is true exactly when no
/// witness was found; a present witness is the lexicographically first
/// violating (order, row set, column set) triple and its (negative) value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnnVerdict {
    pub holds: bool,
    pub checked_minors: u64,
    pub witness: Option<MinorWitness>,
}

fn order_limit(matrix: &ExactMatrix, max_order: Option<usize>) -> usize {
    let full = matrix.rows().min(matrix.cols());
    max_order.map_or(full, |cap| cap.min(full))
}

/// Certify total non-negativity by evaluating every square minor of order
/// `1..=min(rows, cols, max_order)` exactly.
pub fn all_minors_nonnegative(matrix: &ExactMatrix, max_order: Option<usize>) -> TnnVerdict {
    let mut checked = 0u64;
    let mut witness: Option<MinorWitness> = None;
    for order in 1..=order_limit(matrix, max_order) {
        for rows in (0..matrix.rows()).combinations(order) {
            for cols in (0..matrix.cols()).combinations(order) {
                checked += 1;
                let value = matrix.minor_unchecked(&rows, &cols);
                if value.is_negative() && witness.is_none() {
                    witness = Some(MinorWitness { rows: rows.clone(), cols, value });
                }
            }
        }
    }
    TnnVerdict { holds: witness.is_none(), checked_minors: checked, witness }
}

/// Same verdict as [`all_minors_nonnegative`], with the row sets of each
/// order partitioned across worker threads. Workers share only the immutable
/// matrix; the merge keeps the lexicographically smallest witness, so the
/// result is identical to the serial run.
pub fn all_minors_nonnegative_parallel(
    matrix: &ExactMatrix,
    max_order: Option<usize>,
) -> TnnVerdict {
    let mut checked = 0u64;
    let mut witness: Option<MinorWitness> = None;
    for order in 1..=order_limit(matrix, max_order) {
        let row_sets: Vec<Vec<usize>> = (0..matrix.rows()).combinations(order).collect();
        let (count, best) = row_sets
            .par_iter()
            .map(|rows| {
                let mut local = 0u64;
                let mut first: Option<MinorWitness> = None;
                for cols in (0..matrix.cols()).combinations(order) {
                    local += 1;
                    let value = matrix.minor_unchecked(rows, &cols);
                    if value.is_negative() && first.is_none() {
                        first = Some(MinorWitness { rows: rows.clone(), cols, value });
                    }
                }
                (local, first)
            })
            .reduce(|| (0, None), |a, b| (a.0 + b.0, merge_witness(a.1, b.1)));
        checked += count;
        if witness.is_none() {
            witness = best;
        }
    }
    TnnVerdict { holds: witness.is_none(), checked_minors: checked, witness }
}

fn merge_witness(a: Option<MinorWitness>, b: Option<MinorWitness>) -> Option<MinorWitness> {
    match (a, b) {
        (Some(x), Some(y)) => {
            if (&x.rows, &x.cols) <= (&y.rows, &y.cols) {
                Some(x)
            } else {
                Some(y)
            }
        }
        (x, None) => x,
        (None, y) => y,
    }
}

/// Total non-negativity restricted to minors of order at most two.
pub fn two_by_two_check(matrix: &ExactMatrix) -> TnnVerdict {
    all_minors_nonnegative(matrix, Some(2))
}

/// Entrywise scaling (i, j) ↦ row_weights[i]·entry·col_weights[j]. With
/// non-negative weights this preserves total non-negativity.
pub fn scale(
    matrix: &ExactMatrix,
    row_weights: &[Rational],
    col_weights: &[Rational],
) -> Result<ExactMatrix, Error> {
    if row_weights.len() != matrix.rows() {
        return Err(Error::LengthMismatch {
            expected: matrix.rows(),
            found: row_weights.len(),
        });
    }
    if col_weights.len() != matrix.cols() {
        return Err(Error::LengthMismatch {
            expected: matrix.cols(),
            found: col_weights.len(),
        });
    }
    if row_weights.iter().chain(col_weights).any(|w| w.is_negative()) {
        return Err(Error::NegativeWeight);
    }
    Ok(ExactMatrix::from_fn(matrix.rows(), matrix.cols(), |i, j| {
        &row_weights[i] * matrix.get(i, j) * &col_weights[j]
    }))
}

/// Endpoints of a monotone lattice path problem: from `(-2j, j)` to
/// `(0, k)` with unit steps right or up. No path exists when `k < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSpec {
    pub j: u64,
    pub k: u64,
}

/// Count the monotone lattice paths of `spec` by dynamic programming over
/// the step grid. Equals `C(k+j, 2j)`, which is how the factor entries get
/// their path interpretation.
pub fn lattice_path_count(spec: PathSpec) -> Integer {
    if spec.k < spec.j {
        return Integer::zero();
    }
    let rights = (2 * spec.j) as usize;
    let ups = (spec.k - spec.j) as usize;
    // ways[y] = number of paths to (x, y) for the current column x; along
    // the bottom edge there is exactly one path.
    let mut ways = vec![Integer::one(); ups + 1];
    for _ in 0..rights {
        for y in 1..=ups {
            let below = ways[y - 1].clone();
            ways[y] += below;
        }
    }
    ways[ups].clone()
}

/// Per-factor and product verdicts from [`product_closure_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClosureReport {
    pub factor_verdicts: Vec<TnnVerdict>,
    pub product: ExactMatrix,
    pub product_verdict: TnnVerdict,
}

impl ProductClosureReport {
    pub fn holds(&self) -> bool {
        self.factor_verdicts.iter().all(|v| v.holds) && self.product_verdict.holds
    }
}

/// Certify each factor totally non-negative by brute force, then certify
/// their product the same way. Minor products of the factors expand into the
/// product's minors, which is why closure holds; the check itself is direct.
pub fn product_closure_check(factors: &[ExactMatrix]) -> Result<ProductClosureReport, Error> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidArgument("product of no factors".into()));
    };
    for pair in factors.windows(2) {
        if pair[0].cols() != pair[1].rows() {
            return Err(Error::ChainMismatch {
                left_rows: pair[0].rows(),
                left_cols: pair[0].cols(),
                right_rows: pair[1].rows(),
                right_cols: pair[1].cols(),
            });
        }
    }
    let factor_verdicts = factors
        .iter()
        .map(|f| all_minors_nonnegative(f, None))
        .collect();
    let product = factors[1..]
        .iter()
        .fold(first.clone(), |acc, f| acc.mul(f));
    let product_verdict = all_minors_nonnegative(&product, None);
    Ok(ProductClosureReport { factor_verdicts, product, product_verdict })
}
