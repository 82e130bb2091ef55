//! Elliptic curves `V^2 = c3 U^3 + c2 U^2 + c1 U + c0`.

use serde::Serialize;

use crate::algebra::poly::QPoly;
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticModel {
    #[serde(with = "rational::as_string")]
    pub c3: Rational,
    #[serde(with = "rational::as_string")]
    pub c2: Rational,
    #[serde(with = "rational::as_string")]
    pub c1: Rational,
    #[serde(with = "rational::as_string")]
    pub c0: Rational,
}

impl EllipticModel {
    pub fn new(c3: Rational, c2: Rational, c1: Rational, c0: Rational) -> Result<Self> {
        let e = EllipticModel { c3, c2, c1, c0 };
        if Ring::is_zero(&e.c3) || Ring::is_zero(&e.discriminant()) {
            return Err(Error::SingularCubic);
        }
        Ok(e)
    }

    pub fn from_i64s(c3: i64, c2: i64, c1: i64, c0: i64) -> Result<Self> {
        Self::new(int(c3), int(c2), int(c1), int(c0))
    }

    pub fn from_cubic(p: &QPoly) -> Result<Self> {
        if p.degree() != Some(3) {
            return Err(Error::SingularCubic);
        }
        Self::new(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0))
    }

    /// `[c0, c1, c2, c3]`.
    pub fn coeffs(&self) -> [Rational; 4] {
        [self.c0.clone(), self.c1.clone(), self.c2.clone(), self.c3.clone()]
    }

    pub fn cubic(&self) -> QPoly {
        QPoly::new(self.coeffs().to_vec())
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        self.cubic().eval(x)
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        y * y == self.rhs(x)
    }

    /// Discriminant of the cubic.
    pub fn discriminant(&self) -> Rational {
        let (a, b, c, d) = (&self.c3, &self.c2, &self.c1, &self.c0);
        int(18) * a * b * c * d - int(4) * b * b * b * d + b * b * c * c - int(4) * a * c * c * c
            - int(27) * a * a * d * d
    }

    /// Twist by `k`: `V^2 = k g(U)`.
    pub fn twist(&self, k: &Rational) -> Result<Self> {
        Self::new(&self.c3 * k, &self.c2 * k, &self.c1 * k, &self.c0 * k)
    }

    pub fn to_expr(&self) -> String {
        format!("V^2 = {}", self.cubic().to_expr("U"))
    }
}

/// `j` of `V^2 = c3 U^3 + c2 U^2 + c1 U + c0`, via `X = c3 U`, `Y = c3 V`.
pub fn j_invariant(e: &EllipticModel) -> Result<Rational> {
    if Ring::is_zero(&e.c3) {
        return Err(Error::SingularCubic);
    }
    let a2 = e.c2.clone();
    let a4 = &e.c1 * &e.c3;
    let a6 = &e.c0 * &e.c3 * &e.c3;
    let b2 = int(4) * &a2;
    let b4 = int(2) * &a4;
    let b6 = int(4) * &a6;
    let b8 = int(4) * &a2 * &a6 - &a4 * &a4;
    let c4 = &b2 * &b2 - int(24) * &b4;
    let delta = -(&b2 * &b2 * &b8) - int(8) * Ring::pow(&b4, 3) - int(27) * &b6 * &b6
        + int(9) * &b2 * &b4 * &b6;
    if Ring::is_zero(&delta) {
        return Err(Error::SingularCubic);
    }
    Ok(Ring::pow(&c4, 3) / delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_values() {
        assert_eq!(j_invariant(&EllipticModel::from_i64s(27, 0, 4, 0).unwrap()).unwrap(), int(1728));
        assert_eq!(j_invariant(&EllipticModel::from_i64s(-27, 0, 0, 4).unwrap()).unwrap(), int(0));
        assert!(EllipticModel::from_i64s(1, 0, 0, 0).is_err());
        // The j-invariant does not see twists.
        let e = EllipticModel::from_i64s(1, 3, -6, -8).unwrap();
        assert_eq!(j_invariant(&e).unwrap(), j_invariant(&e.twist(&int(-7)).unwrap()).unwrap());
    }
}
