//! Finite windows of the face-transform matrices and their factor matrices,
//! plus an exact verifier for the factorizations.
//!
//! All windows take row indices `i = 0..=d` and column indices `k = 0..=n`
//! with `n = floor(d/2)`; the square factor windows are indexed in reversed
//! order, entry `(j, k)` holding the value at `(n-j, n-k)`.

use num_traits::One;

use crate::exact::{binom, ExactMatrix, Rational};

/// Sign selector for the `A` and `G` factor families, derived from the
/// parity of the polytope dimension: `Plus` iff `d` is even.
///
/// Stored as its own type rather than a bare integer so the sign convention
/// cannot drift between call sites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn from_dim(d: usize) -> Parity {
        if d.is_multiple_of(2) {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }
}

/// Dimension `d` together with the derived quantities every window needs:
/// `n = floor(d/2)` and the parity selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionContext {
    pub dim: usize,
    pub half: usize,
    pub parity: Parity,
}

impl DimensionContext {
    pub fn new(dim: usize) -> Self {
        DimensionContext {
            dim,
            half: dim / 2,
            parity: Parity::from_dim(dim),
        }
    }
}

/// The (d+1)x(n+1) matrix taking the g-vector to the face vector:
/// entry (i, k) = C(d-k+1, d-i+1) - C(k, d-i+1). Integral by construction.
pub fn build_m_g(d: usize) -> ExactMatrix {
    let ctx = DimensionContext::new(d);
    ExactMatrix::from_fn(d + 1, ctx.half + 1, |i, k| {
        let codim = (d - i + 1) as i64;
        Rational::from_integer(binom((d - k + 1) as u64, codim) - binom(k as u64, codim))
    })
}

/// The (d+1)x(n+1) matrix taking the γ-vector to the face vector:
/// entry (i, k) = Σ_j C(k, i-k-j)·C(d-2k, j)·2^j. Integral by construction.
pub fn build_m_gamma(d: usize) -> ExactMatrix {
    let ctx = DimensionContext::new(d);
    ExactMatrix::from_fn(d + 1, ctx.half + 1, |i, k| {
        let free = d - 2 * k;
        let mut acc = crate::exact::Integer::from(0u32);
        for j in 0..=free {
            let lower = i as i64 - k as i64 - j as i64;
            acc += binom(k as u64, lower) * (binom(free as u64, j as i64) << j);
        }
        Rational::from_integer(acc)
    })
}

/// A window of the factor `A`: entry (i, j) = C(j+1, i-j) ∓ C(j, i-j-1), the
/// sign chosen by `parity` (`Plus` subtracts, `Minus` adds). Simplified
/// forms: `A+(i,j) = C(j, i-j)` and `A-(i,j) = (i+1)/(j+1)·C(j+1, i-j)`.
pub fn build_a(parity: Parity, rows: usize, cols: usize) -> ExactMatrix {
    assert!(rows >= 1 && cols >= 1, "window must be non-empty");
    ExactMatrix::from_fn(rows, cols, |i, j| {
        let first = binom(j as u64 + 1, i as i64 - j as i64);
        let second = binom(j as u64, i as i64 - j as i64 - 1);
        Rational::from_integer(match parity {
            Parity::Plus => first - second,
            Parity::Minus => first + second,
        })
    })
}

/// The (n+1)x(n+1) factor window with entry (j, k) = G(n-j, n-k), where
/// `G+(j,k) = (2k+1)/(2j+1)·C(k+j, 2j)` and `G-(j,k) = C(k+j+1, 2j+1)`.
///
/// The `G+` fraction always cancels; a non-integral entry would be an
/// implementation bug and panics.
pub fn build_g_factor(parity: Parity, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 1, |j, k| {
        let (jj, kk) = ((n - j) as u64, (n - k) as u64);
        match parity {
            Parity::Plus => {
                let value = Rational::new(
                    binom(kk + jj, 2 * jj as i64) * (2 * kk + 1),
                    (2 * jj + 1).into(),
                );
                assert!(
                    value.denom().is_one(),
                    "G+ entry ({j},{k}) failed to cancel to an integer"
                );
                value
            }
            Parity::Minus => Rational::from_integer(binom(kk + jj + 1, 2 * jj as i64 + 1)),
        }
    })
}

/// The (n+1)x(n+1) factor window for the γ-matrix: entry (j, k) holds
/// `Γ(n-j, n-k)` with `Γ(j, k) = 4^(k-j)·C(k, j)`. The binomial vanishes
/// whenever the shift `k-j` is negative, so every entry is an integer.
pub fn build_cap_gamma_factor(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 1, |j, k| {
        let (jj, kk) = ((n - j) as u64, (n - k) as u64);
        let c = binom(kk, jj as i64);
        if c == 0u32.into() {
            return Rational::from_integer(0.into());
        }
        // c != 0 forces kk >= jj, so the power of four is a natural one.
        let shift = 2 * (kk - jj) as usize;
        Rational::from_integer(c << shift)
    })
}

/// The (n+1)x(n+1) lower-triangular matrix taking γ-vectors to g-vectors:
/// T(i, j) = C(d-2j, i-j) - C(d-2j, i-1-j), with unit diagonal and
/// non-negative entries.
///
/// The upper index is `d - 2j`; the variant with `n - 2j` fails the 3-cube
/// cross-check (γ = (1,0) must give g = (1,2)) and breaks the factorization
/// through the γ-matrix, while this one satisfies both.
pub fn build_g_from_gamma(d: usize) -> ExactMatrix {
    let n = d / 2;
    ExactMatrix::from_fn(n + 1, n + 1, |i, j| {
        let upper = (d - 2 * j) as u64;
        let lower = i as i64 - j as i64;
        Rational::from_integer(binom(upper, lower) - binom(upper, lower - 1))
    })
}

/// Which of the three factorization equalities a mismatch belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationEquation {
    /// g-matrix = A · (reversed G factor)
    GFactorization,
    /// γ-matrix = A · (reversed Γ factor)
    GammaFactorization,
    /// γ-matrix = g-matrix · (γ-to-g bridge)
    GammaBridge,
}

/// First differing entry of a failed factorization equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationMismatch {
    pub equation: FactorizationEquation,
    pub row: usize,
    pub col: usize,
    pub expected: Rational,
    pub actual: Rational,
}

/// Outcome of [`verify_factorization`]: one exact-equality flag per
/// factorization identity, plus the first differing entry if any failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub dim: usize,
    pub g_factorization: bool,
    pub gamma_factorization: bool,
    pub gamma_bridge: bool,
    pub mismatch: Option<FactorizationMismatch>,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.g_factorization && self.gamma_factorization && self.gamma_bridge
    }
}

/// Check, entry by entry and exactly, that for dimension `d`
///
/// 1. the g-matrix equals `A_ε` times the reversed `G_ε` factor,
/// 2. the γ-matrix equals `A_ε` times the reversed `Γ` factor,
/// 3. the γ-matrix equals the g-matrix times the γ-to-g bridge,
///
/// where `ε` is the parity of `d`. Failure is data, not an error: the report
/// carries the first differing entry.
pub fn verify_factorization(d: usize) -> FactorizationReport {
    let ctx = DimensionContext::new(d);
    let a = build_a(ctx.parity, d + 1, ctx.half + 1);
    let m_g = build_m_g(d);
    let m_gamma = build_m_gamma(d);

    let mut mismatch = None;
    let mut record = |equation, expected: &ExactMatrix, actual: &ExactMatrix| -> bool {
        match expected.first_difference(actual) {
            None => true,
            Some((row, col)) => {
                if mismatch.is_none() {
                    mismatch = Some(FactorizationMismatch {
                        equation,
                        row,
                        col,
                        expected: expected.get(row, col).clone(),
                        actual: actual.get(row, col).clone(),
                    });
                }
                false
            }
        }
    };

    let g_factorization = record(
        FactorizationEquation::GFactorization,
        &m_g,
        &a.mul(&build_g_factor(ctx.parity, ctx.half)),
    );
    let gamma_factorization = record(
        FactorizationEquation::GammaFactorization,
        &m_gamma,
        &a.mul(&build_cap_gamma_factor(ctx.half)),
    );
    let gamma_bridge = record(
        FactorizationEquation::GammaBridge,
        &m_gamma,
        &m_g.mul(&build_g_from_gamma(d)),
    );

    FactorizationReport {
        dim: d,
        g_factorization,
        gamma_factorization,
        gamma_bridge,
        mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Integer};
    use num_rational::Ratio;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows)
    }

    #[test]
    fn parity_follows_dimension() {
        assert_eq!(Parity::from_dim(0), Parity::Plus);
        assert_eq!(Parity::from_dim(3), Parity::Minus);
        let ctx = DimensionContext::new(7);
        assert_eq!((ctx.dim, ctx.half, ctx.parity), (7, 3, Parity::Minus));
    }

    #[test]
    fn m_g_windows() {
        assert_eq!(build_m_g(3), m(&[&[1, 0], &[4, 1], &[6, 3], &[4, 2]]));
        assert_eq!(build_m_g(2), m(&[&[1, 0], &[3, 1], &[3, 1]]));
        assert_eq!(build_m_g(0), m(&[&[1]]));
    }

    #[test]
    fn m_gamma_windows() {
        assert_eq!(build_m_gamma(3), m(&[&[1, 0], &[6, 1], &[12, 3], &[8, 2]]));
        assert_eq!(build_m_gamma(2), m(&[&[1, 0], &[4, 1], &[4, 1]]));
        assert_eq!(build_m_gamma(0), m(&[&[1]]));
    }

    #[test]
    fn a_windows() {
        assert_eq!(
            build_a(Parity::Minus, 4, 2),
            m(&[&[1, 0], &[2, 1], &[0, 3], &[0, 2]])
        );
        assert_eq!(build_a(Parity::Plus, 3, 2), m(&[&[1, 0], &[0, 1], &[0, 1]]));
        assert_eq!(*build_a(Parity::Plus, 1, 1).get(0, 0), rat(1));
        assert_eq!(*build_a(Parity::Minus, 1, 1).get(0, 0), rat(1));
    }

    #[test]
    fn g_factor_windows() {
        assert_eq!(build_g_factor(Parity::Minus, 1), m(&[&[1, 0], &[2, 1]]));
        assert_eq!(build_g_factor(Parity::Plus, 1), m(&[&[1, 0], &[3, 1]]));
        assert_eq!(build_g_factor(Parity::Plus, 0), m(&[&[1]]));
        assert_eq!(build_g_factor(Parity::Minus, 0), m(&[&[1]]));
    }

    #[test]
    fn cap_gamma_factor_windows() {
        assert_eq!(build_cap_gamma_factor(1), m(&[&[1, 0], &[4, 1]]));
        assert_eq!(build_cap_gamma_factor(0), m(&[&[1]]));
        let w = build_cap_gamma_factor(2);
        assert_eq!(w, m(&[&[1, 0, 0], &[8, 1, 0], &[16, 4, 1]]));
        assert_eq!(*w.get(0, 0), rat(1));
        assert_eq!(*w.get(2, 0), rat(16));
    }

    #[test]
    fn g_from_gamma_windows() {
        assert_eq!(build_g_from_gamma(3), m(&[&[1, 0], &[2, 1]]));
        assert_eq!(build_g_from_gamma(2), m(&[&[1, 0], &[1, 1]]));
        assert_eq!(build_g_from_gamma(0), m(&[&[1]]));
    }

    #[test]
    fn g_from_gamma_is_unit_lower_triangular_and_nonnegative() {
        for d in 0..=24 {
            let t = build_g_from_gamma(d);
            for i in 0..t.rows() {
                for j in 0..t.cols() {
                    let e = t.get(i, j);
                    if i == j {
                        assert_eq!(*e, rat(1), "diagonal at d={d}, i={i}");
                    }
                    if j > i {
                        assert_eq!(*e, rat(0), "upper part at d={d}, ({i},{j})");
                    }
                    assert!(*e >= rat(0), "negative entry at d={d}, ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn verify_factorization_small_dims() {
        for d in [0, 1, 2, 3, 5, 8] {
            let report = verify_factorization(d);
            assert!(report.holds(), "factorization failed at d={d}: {report:?}");
            assert_eq!(report.mismatch, None);
        }
    }

    #[test]
    fn simplification_identities_hold_entrywise() {
        // C(j+1, i-j) - C(j, i-j-1) = C(j, i-j) and
        // C(j+1, i-j) + C(j, i-j-1) = (i+1)/(j+1)·C(j+1, i-j).
        for i in 0..=40usize {
            for j in 0..=20usize {
                let first = binom(j as u64 + 1, i as i64 - j as i64);
                let second = binom(j as u64, i as i64 - j as i64 - 1);
                assert_eq!(&first - &second, binom(j as u64, i as i64 - j as i64));
                let lhs = Rational::from_integer(&first + &second);
                let rhs = Ratio::new(int((i + 1) as i64), int((j + 1) as i64))
                    * Rational::from_integer(first);
                assert_eq!(lhs, rhs, "at i={i}, j={j}");
            }
        }
    }

    #[test]
    fn m_g_column_zero_is_the_simplex_face_vector() {
        for d in 0..=24usize {
            let w = build_m_g(d);
            for i in 0..=d {
                assert_eq!(
                    *w.get(i, 0),
                    Rational::from_integer(binom((d + 1) as u64, (d - i + 1) as i64)),
                    "at d={d}, i={i}"
                );
            }
        }
    }

    #[test]
    fn g_plus_numerators_are_divisible() {
        use num_integer::Integer as _;
        for j in 0..=30u64 {
            for k in 0..=30u64 {
                let numerator = binom(k + j, 2 * j as i64) * (2 * k + 1);
                let remainder = numerator.mod_floor(&Integer::from(2 * j + 1));
                assert!(remainder == 0u32.into(), "at j={j}, k={k}");
            }
        }
    }

    #[test]
    fn all_window_entries_are_nonnegative() {
        for d in 0..=24usize {
            let ctx = DimensionContext::new(d);
            let windows = [
                build_m_g(d),
                build_m_gamma(d),
                build_g_from_gamma(d),
                build_a(Parity::Plus, d + 1, ctx.half + 1),
                build_a(Parity::Minus, d + 1, ctx.half + 1),
                build_g_factor(Parity::Plus, ctx.half),
                build_g_factor(Parity::Minus, ctx.half),
                build_cap_gamma_factor(ctx.half),
            ];
            for w in &windows {
                for i in 0..w.rows() {
                    for j in 0..w.cols() {
                        assert!(*w.get(i, j) >= rat(0), "negative entry at d={d}");
                    }
                }
            }
        }
    }
}
