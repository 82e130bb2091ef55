//! Sylvester resultants with fraction-free (Bareiss) elimination.

use super::poly::{inner_degree, swap_vars, total_degree, BiPoly, Poly, QPoly};
use super::rational::Rational;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Fraction-free Gaussian elimination. Every division is exact in an integral domain.
pub fn bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of two coefficient lists (lowest degree first). The list
/// lengths fix the formal degrees, so vanishing leading entries are kept.
pub fn sylvester<R: Ring>(p: &[R], q: &[R]) -> Vec<Vec<R>> {
    let m = p.len().saturating_sub(1);
    let n = q.len().saturating_sub(1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for (k, c) in p.iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for (k, c) in q.iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant with respect to the (outer) variable of `p` and `q`.
///
/// Sign convention: `res(p, q) = lc(p)^deg q * prod q(root of p)`, so
/// `res(x - u, x - v) = u - v`.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(R::determinant(sylvester(p.coeffs(), q.coeffs())))
}

/// Which variable of a bivariate polynomial to eliminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    /// The outer variable (x, or u in the subcover parametrization).
    Outer,
    /// The inner variable (y, or v).
    Inner,
}

/// Resultant of two bivariate polynomials, eliminating `eliminate`.
pub fn poly_resultant(p: &BiPoly, q: &BiPoly, eliminate: Var) -> Result<QPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match eliminate {
        Var::Outer => Ok(resultant_interp(p, q)),
        Var::Inner => Ok(resultant_interp(&swap_vars(p), &swap_vars(q))),
    }
}

/// Bound on the degree in the inner variable of `Res_outer(p, q)`.
pub fn resultant_degree_bound<R: Ring>(p: &Poly<Poly<R>>, q: &Poly<Poly<R>>) -> usize {
    let (m, n) = (p.deg0(), q.deg0());
    let by_parts = n * inner_degree(p) + m * inner_degree(q);
    by_parts.min(total_degree(p) * total_degree(q))
}

/// Resultant eliminating the outer variable, computed by evaluating the inner
/// variable at 0, 1, 2, ... and interpolating. The Sylvester matrix keeps the
/// formal outer degrees, so each evaluation is exactly the specialized resultant.
pub fn resultant_interp<R: Field>(p: &Poly<Poly<R>>, q: &Poly<Poly<R>>) -> Poly<R> {
    let bound = resultant_degree_bound(p, q);
    let xs: Vec<R> = (0..=bound).map(|k| R::from_i64(k as i64)).collect();
    let ys: Vec<R> = xs
        .iter()
        .map(|x| {
            let pc: Vec<R> = p.coeffs().iter().map(|c| c.eval(x)).collect();
            let qc: Vec<R> = q.coeffs().iter().map(|c| c.eval(x)).collect();
            R::determinant(sylvester(&pc, &qc))
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through distinct nodes.
pub fn interpolate<R: Field>(xs: &[R], ys: &[R]) -> Poly<R> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = c[i].sub(&c[i - 1]);
            let den = xs[i].sub(&xs[i - j]);
            c[i] = num.div(&den).expect("distinct nodes");
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::new(vec![xs[i].neg(), R::one()]);
        acc = &(&acc * &lin) + &Poly::constant(c[i].clone());
    }
    acc
}

/// Resultant of two univariate rational polynomials.
pub fn resultant_q(p: &QPoly, q: &QPoly) -> Result<Rational> {
    resultant(p, q)
}
