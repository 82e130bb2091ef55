//! Dense univariate polynomials over a [`Ring`]; bivariate polynomials are
//! polynomials whose coefficients are polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use super::ring::{Field, QAlgebra, Ring};

/// Coefficients lowest degree first, never with a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Univariate polynomial over Q.
pub type QPoly = Poly<Rational>;
/// Bivariate polynomial over Q: outer variable first (x or u), coefficients in the inner one (y or v).
pub type BiPoly = Poly<QPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for bounds and loops.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Number of vanishing low-order coefficients (the multiplicity of 0 as a root).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Divides by `x^k`, dropping the low coefficients.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut q = vec![R::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = rem[k + dd].div_exact(&lc)?;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dj));
                }
            }
            q[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }
}

impl<R: Field> Poly<R> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut q = vec![R::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = rem[k + dd].mul(&inv);
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dj));
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero")),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, if the two are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        // Extended Euclid tracking only the cofactor of `self`.
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.lc().inv()?;
        Some(s0.scale(&c).rem(m))
    }

    /// Squarefree part (monic), characteristic 0 or large enough.
    pub fn squarefree_monic(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl<R: QAlgebra> Poly<R> {
    pub fn scale_q(&self, c: &Rational) -> Self {
        self.scale(&R::from_rational(c))
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_poly(rhs)
    }
}

impl<R: QAlgebra> QAlgebra for Poly<R> {
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(R::from_rational(r))
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => R::zero(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.sub(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.neg(),
                    (None, None) => R::zero(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                $tr::$m(&self, &rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &'a Poly<R>) -> Poly<R> {
                $tr::$m(&self, rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Coefficient-list text format, e.g. `[1, 0, -3/2]`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl QPoly {
    /// Human-readable expression in the variable `var`, highest degree first.
    pub fn to_expr(&self, var: &str) -> String {
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                s.push_str(&a.to_string());
            } else if One::is_one(&a) {
                s.push_str(&mono);
            } else if a.is_integer() {
                s.push_str(&format!("{a}*{mono}"));
            } else {
                s.push_str(&format!("({a})*{mono}"));
            }
        }
        s
    }

    pub fn from_rationals(cs: &[Rational]) -> Self {
        Poly::new(cs.to_vec())
    }
}

/// Evaluates the inner variable of a bivariate polynomial.
pub fn eval_inner<R: Ring>(p: &Poly<Poly<R>>, y: &R) -> Poly<R> {
    p.map(|c| c.eval(y))
}

/// Evaluates the outer variable, leaving a polynomial in the inner one.
pub fn eval_outer<R: Ring>(p: &Poly<Poly<R>>, x: &R) -> Poly<R> {
    p.eval(&Poly::constant(x.clone()))
}

/// Full evaluation at (x, y) with x the outer variable.
pub fn eval2<R: Ring>(p: &Poly<Poly<R>>, x: &R, y: &R) -> R {
    eval_inner(p, y).eval(x)
}

/// Exchanges the roles of the two variables.
pub fn swap_vars<R: Ring>(p: &Poly<Poly<R>>) -> Poly<Poly<R>> {
    let n = p.coeffs().iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    Poly::new(
        (0..n)
            .map(|j| Poly::new(p.coeffs().iter().map(|c| c.coeff(j)).collect()))
            .collect(),
    )
}

/// Bivariate polynomial from `(i, j, c)` terms meaning `c * x^i * y^j`.
pub fn bivar<R: Ring>(terms: &[(usize, usize, R)]) -> Poly<Poly<R>> {
    let mut acc = Poly::zero();
    for (i, j, c) in terms {
        acc = &acc + &Poly::monomial(Poly::monomial(c.clone(), *j), *i);
    }
    acc
}

/// The outer variable as a bivariate polynomial.
pub fn outer_var<R: Ring>() -> Poly<Poly<R>> {
    Poly::x()
}

/// The inner variable as a bivariate polynomial.
pub fn inner_var<R: Ring>() -> Poly<Poly<R>> {
    Poly::constant(Poly::x())
}

/// Maximum inner degree over all coefficients.
pub fn inner_degree<R: Ring>(p: &Poly<Poly<R>>) -> usize {
    p.coeffs().iter().map(|c| c.deg0()).max().unwrap_or(0)
}

/// Total degree of a bivariate polynomial (0 for zero).
pub fn total_degree<R: Ring>(p: &Poly<Poly<R>>) -> usize {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| i + c.deg0())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn arithmetic() {
        let a = qp(&[1, 1]);
        let b = qp(&[-1, 1]);
        assert_eq!(&a * &b, qp(&[-1, 0, 1]));
        assert_eq!(&a + &b, qp(&[0, 2]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(3), qp(&[1, 3, 3, 1]));
        assert_eq!(qp(&[1, 2, 3]).eval(&int(2)), int(17));
        assert_eq!(qp(&[1, 2, 3]).derivative(), qp(&[2, 6]));
    }

    #[test]
    fn division() {
        let p = qp(&[-1, 0, 0, 1]);
        let d = qp(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, qp(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.div_exact_poly(&d), Some(qp(&[1, 1, 1])));
        assert_eq!(p.div_exact_poly(&qp(&[1, 1])), None);
        assert_eq!(qp(&[2, 4]).gcd(&qp(&[-1, 0, 4])), qp(&[1, 2]).scale(&rat(1, 2)));
    }

    #[test]
    fn modular_inverse() {
        let m = qp(&[-2, 0, 1]);
        let a = qp(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!((&a * &inv).rem(&m), qp(&[1]));
        assert!(qp(&[0, 1]).inverse_mod(&qp(&[0, 0, 1])).is_none());
    }

    #[test]
    fn bivariate_helpers() {
        // x*y + 2y^2
        let p = bivar(&[(1, 1, int(1)), (0, 2, int(2))]);
        assert_eq!(eval2(&p, &int(3), &int(5)), int(65));
        let s = swap_vars(&p);
        assert_eq!(eval2(&s, &int(5), &int(3)), int(65));
        assert_eq!(total_degree(&p), 2);
        assert_eq!(inner_degree(&p), 2);
    }

    #[test]
    fn expression_text() {
        let p = QPoly::new(vec![int(4), int(0), rat(-1, 2), int(1)]);
        assert_eq!(p.to_expr("x"), "x^3 - (1/2)*x^2 + 4");
        assert_eq!(p.to_string(), "[4, 0, -1/2, 1]");
    }
}
