//! Exact combinatorial linear algebra for the face vectors of simple polytopes.
//!
//! Everything here is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and every equality check is exact. The crate
//! provides
//!
//! * [`exact`] — scalars, dense univariate polynomials, and dense rational
//!   matrices with exact minors (fraction-free elimination);
//! * [`matrices`] — the transformation matrices taking g- and γ-vectors to
//!   face vectors, their bidiagonal-style factor windows, and an exact
//!   verifier for the factorizations;
//! * [`vectors`] — conversions among f-, g-, h-, and γ-vectors by both the
//!   matrix route and the polynomial-expansion route, a Dehn–Somerville
//!   consistency check, and a small catalogue of ground-truth polytopes;
//! * [`tnn`] — total-non-negativity certification by exhaustive exact minor
//!   enumeration, with closure transforms (scaling, index reversal, products)
//!   and a lattice-path counting oracle;
//! * [`genfun`] — machine checks for the binomial identities, generating
//!   polynomials, and differential equations behind the factorization.

pub mod error;
pub mod exact;
pub mod genfun;
pub mod matrices;
pub mod tnn;
pub mod vectors;

pub use error::Error;
pub use exact::{binom, ExactMatrix, Integer, Poly, Rational};
