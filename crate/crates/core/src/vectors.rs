//! Conversions among f-, g-, h-, and γ-vectors, Dehn–Somerville checking,
//! and a small catalogue of ground-truth polytopes.
//!
//! Index conventions: for a `d`-dimensional simple polytope, `f[i]` counts
//! the codimension-`i` faces (`f[0] = 1` is the polytope itself, `f[d]` the
//! vertex count) and the face polynomial is `Σ f[i]·t^(d-i)`. The g- and
//! γ-sequences have length `n+1`, `n = floor(d/2)`; the h-sequence has
//! length `d+1` and is palindromic exactly when the face vector is
//! Dehn–Somerville consistent.
//!
//! Every conversion exists in two independent forms — a matrix route through
//! [`crate::matrices`] and a polynomial-expansion route through
//! [`crate::exact::Poly`] — and the test suites require them to agree
//! exactly on every input.

use num_traits::One;

use crate::error::Error;
use crate::exact::{ExactMatrix, Integer, Poly, Rational};
use crate::matrices::{build_g_from_gamma, build_m_g, build_m_gamma};

/// A dimension together with whichever of the four face-number sequences are
/// known. Lengths are rigid: `f` and `h` have `d+1` entries, `g` and `gamma`
/// have `floor(d/2)+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceData {
    pub dim: usize,
    pub f: Option<Vec<Integer>>,
    pub g: Option<Vec<Integer>>,
    pub h: Option<Vec<Integer>>,
    pub gamma: Option<Vec<Integer>>,
}

impl FaceData {
    pub fn new(dim: usize) -> Self {
        FaceData { dim, ..Default::default() }
    }

    /// Check the index-range invariants on every present sequence.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.dim / 2;
        let check = |seq: &Option<Vec<Integer>>, expected: usize| match seq {
            Some(s) if s.len() != expected => Err(Error::LengthMismatch {
                expected,
                found: s.len(),
            }),
            _ => Ok(()),
        };
        check(&self.f, self.dim + 1)?;
        check(&self.h, self.dim + 1)?;
        check(&self.g, n + 1)?;
        check(&self.gamma, n + 1)
    }
}

fn expect_len(seq: &[Integer], expected: usize) -> Result<(), Error> {
    if seq.len() != expected {
        return Err(Error::LengthMismatch { expected, found: seq.len() });
    }
    Ok(())
}

/// Apply an integral matrix to an integer vector; the result is integral
/// because every entry product is.
fn apply(matrix: &ExactMatrix, v: &[Integer]) -> Vec<Integer> {
    assert_eq!(matrix.cols(), v.len());
    (0..matrix.rows())
        .map(|i| {
            let mut acc = Rational::from_integer(0.into());
            for (k, value) in v.iter().enumerate() {
                acc += matrix.get(i, k) * Rational::from_integer(value.clone());
            }
            assert!(acc.denom().is_one(), "integral matrix-vector product expected");
            acc.numer().clone()
        })
        .collect()
}

/// The basis polynomial `u_i(t) = Σ_(q=i..d-i) (1+t)^q` of the g-expansion.
/// Requires `i <= floor(d/2)`.
pub fn u_poly(d: usize, i: usize) -> Poly {
    assert!(i <= d / 2, "basis index {i} out of range for dimension {d}");
    let base = Poly::from_int_coeffs(&[1, 1]);
    let mut power = base.pow(i);
    let mut acc = power.clone();
    for _ in i + 1..=d - i {
        power = &power * &base;
        acc = &acc + &power;
    }
    acc
}

/// The basis polynomial `v_i(t) = (t+1)^i (t+2)^(d-2i)` of the γ-expansion.
/// Requires `i <= floor(d/2)`.
pub fn v_poly(d: usize, i: usize) -> Poly {
    assert!(i <= d / 2, "basis index {i} out of range for dimension {d}");
    let linear = Poly::from_int_coeffs(&[1, 1]);
    let shifted = Poly::from_int_coeffs(&[2, 1]);
    &linear.pow(i) * &shifted.pow(d - 2 * i)
}

/// Read the face vector off a face polynomial: `f[i]` is the coefficient of
/// `t^(d-i)`.
fn face_vector_from_poly(d: usize, poly: &Poly) -> Vec<Integer> {
    (0..=d)
        .map(|i| {
            let c = poly.coeff(d - i);
            assert!(c.denom().is_one(), "face polynomial must have integer coefficients");
            c.numer().clone()
        })
        .collect()
}

/// Face vector from a g-vector, by the matrix route.
pub fn f_from_g(d: usize, g: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(g, d / 2 + 1)?;
    Ok(apply(&build_m_g(d), g))
}

/// Face vector from a g-vector, by expanding `Σ g_k·u_k(t)`. Independent of
/// the matrix route; the two must agree exactly.
pub fn f_from_g_poly(d: usize, g: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(g, d / 2 + 1)?;
    let mut sum = Poly::zero();
    for (k, coeff) in g.iter().enumerate() {
        sum = &sum + &u_poly(d, k).scalar_mul(&Rational::from_integer(coeff.clone()));
    }
    Ok(face_vector_from_poly(d, &sum))
}

/// Face vector from a γ-vector, by the matrix route.
pub fn f_from_gamma(d: usize, gamma: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(gamma, d / 2 + 1)?;
    Ok(apply(&build_m_gamma(d), gamma))
}

/// Face vector from a γ-vector, by expanding `Σ γ_k·v_k(t)`.
pub fn f_from_gamma_poly(d: usize, gamma: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(gamma, d / 2 + 1)?;
    let mut sum = Poly::zero();
    for (k, coeff) in gamma.iter().enumerate() {
        sum = &sum + &v_poly(d, k).scalar_mul(&Rational::from_integer(coeff.clone()));
    }
    Ok(face_vector_from_poly(d, &sum))
}

/// g-vector from a γ-vector. Satisfies
/// `f_from_g(d, g_from_gamma(d, γ)) = f_from_gamma(d, γ)`.
pub fn g_from_gamma(d: usize, gamma: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(gamma, d / 2 + 1)?;
    Ok(apply(&build_g_from_gamma(d), gamma))
}

/// h-vector from a g-vector: `h[q] = Σ_(k <= min(q, d-q)) g[k]`, palindromic
/// by construction.
pub fn h_from_g(d: usize, g: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(g, d / 2 + 1)?;
    Ok((0..=d)
        .map(|q| g[..=q.min(d - q)].iter().sum())
        .collect())
}

/// g-vector from a palindromic h-vector: `g[0] = h[0]`,
/// `g[k] = h[k] - h[k-1]`. Inverse of [`h_from_g`] on palindromic input.
pub fn g_from_h(d: usize, h: &[Integer]) -> Result<Vec<Integer>, Error> {
    expect_len(h, d + 1)?;
    if (0..=d / 2).any(|q| h[q] != h[d - q]) {
        return Err(Error::NonPalindromic);
    }
    Ok((0..=d / 2)
        .map(|k| if k == 0 { h[0].clone() } else { &h[k] - &h[k - 1] })
        .collect())
}

/// Decide whether `f` is the face vector of *some* g-vector, i.e. whether it
/// satisfies the Dehn–Somerville relations.
///
/// The leading `(n+1)x(n+1)` block of the g-to-f matrix is unit lower
/// triangular, so a candidate g is recovered by exact forward substitution
/// from the first `n+1` rows; `f` is consistent exactly when that candidate
/// reproduces the whole vector.
pub fn check_dehn_somerville(d: usize, f: &[Integer]) -> Result<bool, Error> {
    expect_len(f, d + 1)?;
    let matrix = build_m_g(d);
    let n = d / 2;
    let mut g: Vec<Integer> = Vec::with_capacity(n + 1);
    for (i, face_count) in f.iter().enumerate().take(n + 1) {
        let mut value = Rational::from_integer(face_count.clone());
        for (k, known) in g.iter().enumerate() {
            value -= matrix.get(i, k) * Rational::from_integer(known.clone());
        }
        // Unit diagonal, so the entry itself is the next g-coordinate.
        assert!(value.denom().is_one());
        g.push(value.numer().clone());
    }
    Ok(apply(&matrix, &g) == f)
}

/// Named shapes available from the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogueShape {
    Simplex { dim: usize },
    Cube { dim: usize },
    Polygon { vertices: usize },
}

impl CatalogueShape {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogueShape::Simplex { .. } => "simplex",
            CatalogueShape::Cube { .. } => "cube",
            CatalogueShape::Polygon { .. } => "polygon",
        }
    }
}

/// A ground-truth polytope: its g-vector, its γ-vector when the polytope is
/// flag, and the face vector implied by the g-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub shape: CatalogueShape,
    pub dim: usize,
    pub g: Vec<Integer>,
    pub gamma: Option<Vec<Integer>>,
    pub f: Vec<Integer>,
    pub note: Option<&'static str>,
}

/// The d-simplex: g = (1, 0, ..., 0).
pub fn simplex(dim: usize) -> CatalogueEntry {
    let mut g = vec![Integer::from(0u32); dim / 2 + 1];
    g[0] = Integer::one();
    let f = f_from_g(dim, &g).expect("lengths are consistent by construction");
    CatalogueEntry {
        shape: CatalogueShape::Simplex { dim },
        dim,
        g,
        gamma: None,
        f,
        note: None,
    }
}

/// The d-cube: γ = (1, 0, ..., 0), with the g-vector derived from it.
pub fn cube(dim: usize) -> CatalogueEntry {
    let mut gamma = vec![Integer::from(0u32); dim / 2 + 1];
    gamma[0] = Integer::one();
    let g = g_from_gamma(dim, &gamma).expect("lengths are consistent by construction");
    let f = f_from_g(dim, &g).expect("lengths are consistent by construction");
    CatalogueEntry {
        shape: CatalogueShape::Cube { dim },
        dim,
        g,
        gamma: Some(gamma),
        f,
        note: None,
    }
}

/// The m-gon (`m >= 3`): d = 2, g = (1, m-3). The γ-vector (1, m-4) is
/// stored only for `m >= 4`; the triangle is not flag and its expansion has
/// a negative coordinate, so it is reported without one.
pub fn polygon(vertices: usize) -> Result<CatalogueEntry, Error> {
    if vertices < 3 {
        return Err(Error::InvalidArgument(format!(
            "a polygon needs at least 3 vertices, got {vertices}"
        )));
    }
    let g = vec![Integer::one(), Integer::from(vertices as u64 - 3)];
    let gamma = (vertices >= 4).then(|| vec![Integer::one(), Integer::from(vertices as u64 - 4)]);
    let note = (vertices == 3)
        .then_some("not flag: the gamma expansion of the triangle has a negative coordinate");
    let f = f_from_g(2, &g).expect("lengths are consistent by construction");
    Ok(CatalogueEntry {
        shape: CatalogueShape::Polygon { vertices },
        dim: 2,
        g,
        gamma,
        f,
        note,
    })
}

/// Look up a catalogue entry by name. The parameter is the dimension for
/// `simplex` and `cube`, and the vertex count for `polygon`.
pub fn catalogue(name: &str, parameter: usize) -> Result<CatalogueEntry, Error> {
    match name {
        "simplex" => Ok(simplex(parameter)),
        "cube" => Ok(cube(parameter)),
        "polygon" => polygon(parameter),
        other => Err(Error::UnknownCatalogue(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn seq(values: &[i64]) -> Vec<Integer> {
        values.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn u_poly_examples() {
        assert_eq!(u_poly(3, 0), Poly::from_int_coeffs(&[4, 6, 4, 1]));
        assert_eq!(u_poly(3, 1), Poly::from_int_coeffs(&[2, 3, 1]));
        assert_eq!(u_poly(2, 1), Poly::from_int_coeffs(&[1, 1]));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn u_poly_rejects_large_index() {
        let _ = u_poly(3, 2);
    }

    #[test]
    fn v_poly_examples() {
        assert_eq!(v_poly(3, 0), Poly::from_int_coeffs(&[8, 12, 6, 1]));
        assert_eq!(v_poly(2, 1), Poly::from_int_coeffs(&[1, 1]));
        assert_eq!(v_poly(3, 1), Poly::from_int_coeffs(&[2, 3, 1]));
    }

    #[test]
    fn f_from_g_examples() {
        assert_eq!(f_from_g(3, &seq(&[1, 0])).unwrap(), seq(&[1, 4, 6, 4]));
        assert_eq!(f_from_g(3, &seq(&[1, 2])).unwrap(), seq(&[1, 6, 12, 8]));
        assert_eq!(f_from_g(2, &seq(&[1, 2])).unwrap(), seq(&[1, 5, 5]));
        assert!(matches!(
            f_from_g(3, &seq(&[1])),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn polynomial_route_agrees_on_examples() {
        for (d, g) in [(3, seq(&[1, 0])), (3, seq(&[1, 2])), (2, seq(&[1, 2])), (6, seq(&[1, -2, 7, 4]))] {
            assert_eq!(f_from_g(d, &g).unwrap(), f_from_g_poly(d, &g).unwrap());
        }
        for (d, gamma) in [(3, seq(&[1, 0])), (2, seq(&[1, 1])), (5, seq(&[2, 0, -3]))] {
            assert_eq!(
                f_from_gamma(d, &gamma).unwrap(),
                f_from_gamma_poly(d, &gamma).unwrap()
            );
        }
    }

    #[test]
    fn f_from_gamma_examples() {
        assert_eq!(f_from_gamma(3, &seq(&[1, 0])).unwrap(), seq(&[1, 6, 12, 8]));
        assert_eq!(f_from_gamma(2, &seq(&[1, 1])).unwrap(), seq(&[1, 5, 5]));
        assert_eq!(f_from_gamma(2, &seq(&[1, 0])).unwrap(), seq(&[1, 4, 4]));
    }

    #[test]
    fn g_from_gamma_examples() {
        assert_eq!(g_from_gamma(3, &seq(&[1, 0])).unwrap(), seq(&[1, 2]));
        assert_eq!(g_from_gamma(2, &seq(&[1, 1])).unwrap(), seq(&[1, 2]));
        // For γ = (1, 0, ..., 0) the result must satisfy the f-consistency
        // equation; that equation is the oracle, not a quoted value.
        for d in 0..=10 {
            let mut gamma = vec![int(0); d / 2 + 1];
            gamma[0] = int(1);
            let g = g_from_gamma(d, &gamma).unwrap();
            assert_eq!(
                f_from_g(d, &g).unwrap(),
                f_from_gamma(d, &gamma).unwrap(),
                "consistency at d={d}"
            );
        }
    }

    #[test]
    fn h_from_g_examples() {
        assert_eq!(h_from_g(3, &seq(&[1, 2])).unwrap(), seq(&[1, 3, 3, 1]));
        assert_eq!(h_from_g(3, &seq(&[1, 0])).unwrap(), seq(&[1, 1, 1, 1]));
        assert_eq!(h_from_g(2, &seq(&[1, 2])).unwrap(), seq(&[1, 3, 1]));
    }

    #[test]
    fn g_from_h_examples() {
        assert_eq!(g_from_h(3, &seq(&[1, 3, 3, 1])).unwrap(), seq(&[1, 2]));
        assert_eq!(g_from_h(4, &seq(&[1, 1, 1, 1, 1])).unwrap(), seq(&[1, 0, 0]));
        assert_eq!(g_from_h(2, &seq(&[1, 3, 1])).unwrap(), seq(&[1, 2]));
        assert!(matches!(
            g_from_h(2, &seq(&[1, 3, 2])),
            Err(Error::NonPalindromic)
        ));
    }

    #[test]
    fn h_round_trip() {
        for (d, g) in [(3, seq(&[1, 2])), (5, seq(&[1, 4, 2])), (6, seq(&[2, 0, 5, 1])), (0, seq(&[3]))] {
            let h = h_from_g(d, &g).unwrap();
            for q in 0..=d {
                assert_eq!(h[q], h[d - q], "palindromic at d={d}, q={q}");
            }
            assert_eq!(g_from_h(d, &h).unwrap(), g);
        }
    }

    #[test]
    fn dehn_somerville_examples() {
        assert!(check_dehn_somerville(3, &seq(&[1, 6, 12, 8])).unwrap());
        assert!(!check_dehn_somerville(3, &seq(&[1, 6, 12, 9])).unwrap());
        assert!(check_dehn_somerville(0, &seq(&[1])).unwrap());
        assert!(matches!(
            check_dehn_somerville(3, &seq(&[1, 6, 12])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn perturbing_the_vertex_count_breaks_dehn_somerville() {
        for d in 1..=12 {
            let g: Vec<Integer> = (0..=d / 2).map(|k| int(k as i64 + 1)).collect();
            let mut f = f_from_g(d, &g).unwrap();
            assert!(check_dehn_somerville(d, &f).unwrap());
            f[d] += 1;
            assert!(!check_dehn_somerville(d, &f).unwrap(), "at d={d}");
        }
    }

    #[test]
    fn catalogue_examples() {
        let cube3 = cube(3);
        assert_eq!(cube3.f, seq(&[1, 6, 12, 8]));
        assert_eq!(cube3.g, seq(&[1, 2]));
        assert_eq!(cube3.gamma, Some(seq(&[1, 0])));

        let pentagon = polygon(5).unwrap();
        assert_eq!(pentagon.f, seq(&[1, 5, 5]));
        assert_eq!(pentagon.g, seq(&[1, 2]));
        assert_eq!(pentagon.gamma, Some(seq(&[1, 1])));

        let simplex4 = simplex(4);
        assert_eq!(simplex4.f, seq(&[1, 5, 10, 10, 5]));

        let triangle = polygon(3).unwrap();
        assert_eq!(triangle.f, seq(&[1, 3, 3]));
        assert_eq!(triangle.gamma, None);
        assert!(triangle.note.is_some());

        assert!(matches!(polygon(2), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            catalogue("orthoplex", 3),
            Err(Error::UnknownCatalogue(_))
        ));
        assert_eq!(catalogue("cube", 3).unwrap(), cube3);
    }

    #[test]
    fn face_data_validates_lengths() {
        let mut data = FaceData::new(3);
        data.f = Some(seq(&[1, 6, 12, 8]));
        data.g = Some(seq(&[1, 2]));
        assert!(data.validate().is_ok());
        data.g = Some(seq(&[1, 2, 3]));
        assert!(matches!(
            data.validate(),
            Err(Error::LengthMismatch { expected: 2, found: 3 })
        ));
    }
}
