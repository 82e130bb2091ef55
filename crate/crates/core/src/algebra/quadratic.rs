//! Algebraic numbers of degree at most 2, kept as minimal polynomials.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly::QPoly;
use super::rational::{is_rational_square, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// A root of a monic polynomial of degree at most 2 over Q, irreducible when quadratic.
///
/// For a quadratic `x^2 + b x + c` with discriminant `d`, `Plus` stands for
/// `(-b + sqrt d)/2` where `sqrt d` is the positive real root for `d > 0` and
/// `i sqrt(-d)` for `d < 0`. Nothing in the library depends on this embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticElement {
    minpoly: QPoly,
    sign: RootSign,
}

impl QuadraticElement {
    pub fn new(minpoly: QPoly, sign: RootSign) -> Result<Self> {
        let d = minpoly.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 || d > 2 {
            return Err(Error::Invalid("minimal polynomial must have degree 1 or 2".into()));
        }
        let m = minpoly.monic();
        if d == 2 && is_rational_square(&discriminant(&m)).is_some() {
            return Err(Error::Invalid("quadratic is reducible over Q".into()));
        }
        Ok(QuadraticElement { minpoly: m, sign })
    }

    pub fn rational(r: Rational) -> Self {
        QuadraticElement { minpoly: QPoly::new(vec![-r, <Rational as Ring>::one()]), sign: RootSign::Plus }
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.minpoly
    }

    pub fn sign(&self) -> RootSign {
        self.sign
    }

    pub fn is_rational(&self) -> bool {
        self.minpoly.degree() == Some(1)
    }

    /// True iff this element and its conjugate are `a ± b sqrt(d)`.
    pub fn conjugates_are(&self, a: &Rational, b: &Rational, d: &Rational) -> bool {
        let (sum, prod) = sum_product(a, b, d);
        let two = Rational::from_i64(2);
        match self.minpoly.degree() {
            Some(2) => self.minpoly.coeff(1) == -sum && self.minpoly.coeff(0) == prod,
            Some(1) => Zero::is_zero(b) && -self.minpoly.coeff(0) == sum / two,
            _ => false,
        }
    }
}

/// Sum and product of `a + b sqrt d` and `a - b sqrt d`.
pub fn sum_product(a: &Rational, b: &Rational, d: &Rational) -> (Rational, Rational) {
    (a * Rational::from_i64(2), a * a - b * b * d)
}

/// Discriminant of a quadratic `c0 + c1 x + c2 x^2`.
pub fn discriminant(q: &QPoly) -> Rational {
    let (c0, c1, c2) = (q.coeff(0), q.coeff(1), q.coeff(2));
    &c1 * &c1 - Rational::from_i64(4) * c0 * c2
}

/// Roots of a monic quadratic split into rational roots or a conjugate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticRoots {
    Rational(Vec<Rational>),
    Conjugate([QuadraticElement; 2]),
}

pub fn solve_quadratic(q: &QPoly) -> Result<QuadraticRoots> {
    if q.degree() != Some(2) {
        return Err(Error::Invalid("expected a quadratic".into()));
    }
    let m = q.monic();
    let d = discriminant(&m);
    match is_rational_square(&d) {
        Some(s) => {
            let b = m.coeff(1);
            let two = Rational::from_i64(2);
            let mut r = vec![(-&b - &s) / &two, (-&b + &s) / &two];
            r.dedup();
            Ok(QuadraticRoots::Rational(r))
        }
        None => Ok(QuadraticRoots::Conjugate([
            QuadraticElement { minpoly: m.clone(), sign: RootSign::Plus },
            QuadraticElement { minpoly: m, sign: RootSign::Minus },
        ])),
    }
}

/// Whether `r` is a rational square times `k` (e.g. a discriminant of the form 5 * square).
pub fn is_square_times(r: &Rational, k: &Rational) -> bool {
    !Zero::is_zero(k) && (r / k).is_positive() && is_rational_square(&(r / k)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn conjugate_pair() {
        // x^2 - 2x - 2 has roots 1 ± sqrt 3
        let q = QPoly::from_i64s(&[-2, -2, 1]);
        let e = QuadraticElement::new(q.clone(), RootSign::Plus).unwrap();
        assert!(e.conjugates_are(&int(1), &int(1), &int(3)));
        assert!(!e.conjugates_are(&int(1), &int(1), &int(2)));
        assert!(matches!(solve_quadratic(&q).unwrap(), QuadraticRoots::Conjugate(_)));
        assert!(QuadraticElement::new(QPoly::from_i64s(&[-1, 0, 1]), RootSign::Plus).is_err());
    }

    #[test]
    fn rational_roots_of_quadratic() {
        let q = QPoly::from_i64s(&[0, 12288000, 1]);
        assert_eq!(
            solve_quadratic(&q).unwrap(),
            QuadraticRoots::Rational(vec![int(-12288000), int(0)])
        );
        assert!(is_square_times(&int(45), &int(5)));
        assert!(!is_square_times(&int(10), &int(5)));
    }
}
