//! Machine checks for the binomial identities, generating polynomials, and
//! differential equations behind the matrix factorization.
//!
//! The two identity families are the entrywise form of the factorization
//! (one per parity); the generating polynomials `F` and `G` package their
//! right-hand sides, and the closed form `G_a(s) = (s+1)^(2a+1) - s^(2a+1)`
//! is what makes both sides match. Everything is checked by exact
//! polynomial and rational arithmetic; no tolerances.

use num_traits::{One, Zero};

use crate::exact::{binom, Integer, Poly, Rational};

/// One failing index pair of an identity check, with both side values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub i: u64,
    pub k: u64,
    pub lhs: Integer,
    pub rhs: Rational,
}

/// Result of checking one identity family over its whole index range
/// `0 <= k <= n`, `0 <= i <= 2n+1`. Holds iff `failures` is empty.
/// Failures are listed in (k, i) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: u64,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_identity(
    n: u64,
    mut rhs_term: impl FnMut(u64, u64, u64) -> Rational,
    mut lhs: impl FnMut(u64, u64) -> Integer,
) -> IdentityReport {
    let mut failures = Vec::new();
    for k in 0..=n {
        for i in 0..=2 * n + 1 {
            let left = lhs(i, k);
            let mut right = Rational::zero();
            for j in k..=n {
                right += rhs_term(i, k, j);
            }
            if Rational::from_integer(left.clone()) != right {
                failures.push(IdentityFailure { i, k, lhs: left, rhs: right });
            }
        }
    }
    IdentityReport { n, failures }
}

/// Even-parity identity:
/// `C(2n-k+1, 2n-i+1) - C(k, 2n-i+1)
///   = Σ_(j=k..n) C(j, i-j)·(2n-2k+1)/(2n-2j+1)·C(2n-(k+j), 2n-2j)`.
pub fn identity1_check(n: u64) -> IdentityReport {
    check_identity(
        n,
        |i, k, j| {
            Rational::new(
                binom(j, i as i64 - j as i64)
                    * binom(2 * n - (k + j), 2 * (n as i64 - j as i64))
                    * (2 * n - 2 * k + 1),
                (2 * n - 2 * j + 1).into(),
            )
        },
        |i, k| {
            let lower = 2 * n as i64 - i as i64 + 1;
            binom(2 * n - k + 1, lower) - binom(k, lower)
        },
    )
}

/// Odd-parity identity:
/// `C(2n-k+2, 2n-i+2) - C(k, 2n-i+2)
///   = Σ_(j=k..n) (i+1)/(j+1)·C(j+1, i-j)·C(2n-(k+j)+1, 2n-2j+1)`.
pub fn identity2_check(n: u64) -> IdentityReport {
    check_identity(
        n,
        |i, k, j| {
            Rational::new(
                binom(j + 1, i as i64 - j as i64)
                    * binom(2 * n - (k + j) + 1, 2 * (n as i64 - j as i64) + 1)
                    * (i + 1),
                (j + 1).into(),
            )
        },
        |i, k| {
            let lower = 2 * n as i64 - i as i64 + 2;
            binom(2 * n - k + 2, lower) - binom(k, lower)
        },
    )
}

/// The generating polynomial
/// `F_a(z) = Σ_(j=0..a) z^j·(2a+1)/(2a-2j+1)·C(2a-j, 2a-2j)`.
/// Every coefficient cancels to an integer; a fractional one would be an
/// implementation bug and panics.
pub fn f_gen(a: u64) -> Poly {
    let coeffs = (0..=a)
        .map(|j| {
            let c = Rational::new(
                binom(2 * a - j, 2 * (a as i64 - j as i64)) * (2 * a + 1),
                (2 * a - 2 * j + 1).into(),
            );
            assert!(c.denom().is_one(), "F coefficient {j} of a={a} is not an integer");
            c
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `G_a(s) = F_a(s(s+1))`.
pub fn g_gen(a: u64) -> Poly {
    f_gen(a).compose(&Poly::from_int_coeffs(&[0, 1, 1]))
}

/// Exact polynomial equality `G_a(s) = (s+1)^(2a+1) - s^(2a+1)`.
pub fn closed_form_check(a: u64) -> bool {
    let degree = (2 * a + 1) as usize;
    let closed = &Poly::from_int_coeffs(&[1, 1]).pow(degree)
        - &Poly::monomial(Rational::one(), degree);
    g_gen(a) == closed
}

/// Residual of the second-order equation satisfied by `G_a`:
/// `s(s+1)·G'' - 2a(1+2s)·G' + 2a(2a+1)·G`, identically zero.
pub fn ode_residual_g(a: u64) -> Poly {
    let g = g_gen(a);
    let g1 = g.derivative();
    let g2 = g1.derivative();
    let a = a as i64;
    let second = &Poly::from_int_coeffs(&[0, 1, 1]) * &g2;
    let first = (&Poly::from_int_coeffs(&[1, 2]) * &g1).scalar_mul(&crate::exact::rat(2 * a));
    let zeroth = g.scalar_mul(&crate::exact::rat(2 * a * (2 * a + 1)));
    &(&second - &first) + &zeroth
}

/// Which first-order coefficient to use in the `F` equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OdeVariant {
    /// `a(z - a(4z+1))` — does not annihilate `F_a` for `a >= 1`.
    Printed,
    /// `2(z - a(4z+1))` — follows from the `G` equation by the chain rule
    /// with `z = s(s+1)`: `G' = (2s+1)F'` and `G'' = (4z+1)F'' + 2F'`.
    Corrected,
}

/// Residual of `z(4z+1)·F'' + c(z)·F' + 2a(2a+1)·F` for the chosen
/// first-order coefficient `c`. Identically zero for `Corrected`; non-zero
/// for `Printed` whenever `a >= 1`.
pub fn ode_residual_f(a: u64, variant: OdeVariant) -> Poly {
    let f = f_gen(a);
    let f1 = f.derivative();
    let f2 = f1.derivative();
    let a = a as i64;
    let first_order = match variant {
        OdeVariant::Printed => Poly::from_int_coeffs(&[-a * a, a - 4 * a * a]),
        OdeVariant::Corrected => Poly::from_int_coeffs(&[-2 * a, 2 - 8 * a]),
    };
    let second = &Poly::from_int_coeffs(&[0, 1, 4]) * &f2;
    let first = &first_order * &f1;
    let zeroth = f.scalar_mul(&crate::exact::rat(2 * a * (2 * a + 1)));
    &(&second + &first) + &zeroth
}

/// The polynomial `Σ_(i=0..2n+1) [C(2n-k+1, 2n-i+1) - C(k, 2n-i+1)]·s^i`,
/// i.e. the left-hand side of the even-parity identity packaged as a
/// generating polynomial in `s`. Equals `(s(s+1))^k · G_(n-k)(s)`.
/// Requires `k <= n`.
pub fn lhs_generating_poly(n: u64, k: u64) -> Poly {
    assert!(k <= n, "k = {k} exceeds n = {n}");
    let coeffs = (0..=2 * n + 1)
        .map(|i| {
            let lower = 2 * n as i64 - i as i64 + 1;
            Rational::from_integer(binom(2 * n - k + 1, lower) - binom(k, lower))
        })
        .collect();
    Poly::from_coeffs(coeffs)
}
