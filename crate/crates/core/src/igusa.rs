//! Classical invariants of binary sextics, absolute invariants and moduli points.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::parse::parse_poly;
use crate::algebra::poly::{BiPoly, QPoly};
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::ring::{QAlgebra, Ring};
use crate::error::{Error, Result};

/// `f(X, Z) = a6 X^6 + a5 X^5 Z + ... + a0 Z^6`, stored as `[a0, ..., a6]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinarySextic {
    #[serde(with = "rational::vec_as_string")]
    coeffs: Vec<Rational>,
}

impl BinarySextic {
    pub fn new(a: [Rational; 7]) -> Result<Self> {
        if a.iter().all(|c| Ring::is_zero(c)) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(BinarySextic { coeffs: a.to_vec() })
    }

    /// Sextic from `f(x)` of degree 5 or 6 (degree 5 puts a root at infinity).
    pub fn from_poly(p: &QPoly) -> Result<Self> {
        match p.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(d) if d == 5 || d == 6 => {
                Ok(BinarySextic { coeffs: (0..=6).map(|i| p.coeff(i)).collect() })
            }
            Some(d) => Err(Error::BadDegree(d)),
        }
    }

    pub fn from_i64s(a: [i64; 7]) -> Self {
        BinarySextic { coeffs: a.iter().map(|&c| int(c)).collect() }
    }

    /// `a_k`, the coefficient of `X^k Z^(6-k)`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The dehomogenization `f(x, 1)`.
    pub fn to_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinarySextic { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(aX + bZ, cX + dZ)`.
    pub fn substitute(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        let num = QPoly::new(vec![b.clone(), a.clone()]);
        let den = QPoly::new(vec![d.clone(), c.clone()]);
        let mut acc = QPoly::zero();
        for (k, ak) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(ak) {
                continue;
            }
            let term = &(&num.pow(k as u32) * &den.pow((6 - k) as u32)) * &QPoly::constant(ak.clone());
            acc = &acc + &term;
        }
        BinarySextic { coeffs: (0..=6).map(|i| acc.coeff(i)).collect() }
    }

    pub fn is_squarefree(&self) -> bool {
        !Ring::is_zero(&classical_invariants(self).j10)
    }
}

impl fmt::Debug for BinarySextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySextic({})", self.to_poly().to_expr("X"))
    }
}

impl fmt::Display for BinarySextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().to_expr("X"))
    }
}

/// Parses `"x^5+x^3+x"`, `"y^2 = (3x^2+4)(x^3+x)"` and the like.
pub fn curve_from_equation(text: &str) -> Result<BinarySextic> {
    BinarySextic::from_poly(&parse_poly(text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    #[serde(rename = "J2", with = "rational::as_string")]
    pub j2: Rational,
    #[serde(rename = "J4", with = "rational::as_string")]
    pub j4: Rational,
    #[serde(rename = "J6", with = "rational::as_string")]
    pub j6: Rational,
    #[serde(rename = "J10", with = "rational::as_string")]
    pub j10: Rational,
}

impl ClassicalInvariants {
    pub fn as_array(&self) -> [Rational; 4] {
        [self.j2.clone(), self.j4.clone(), self.j6.clone(), self.j10.clone()]
    }

    pub fn moduli_point(&self) -> ModuliPoint {
        ModuliPoint(self.as_array())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbsoluteInvariants {
    #[serde(with = "rational::as_string")]
    pub i1: Rational,
    #[serde(with = "rational::as_string")]
    pub i2: Rational,
    #[serde(with = "rational::as_string")]
    pub i3: Rational,
}

impl AbsoluteInvariants {
    pub fn new(i1: Rational, i2: Rational, i3: Rational) -> Self {
        AbsoluteInvariants { i1, i2, i3 }
    }

    pub fn parse(i1: &str, i2: &str, i3: &str) -> Result<Self> {
        Ok(AbsoluteInvariants {
            i1: rational::parse_rational(i1)?,
            i2: rational::parse_rational(i2)?,
            i3: rational::parse_rational(i3)?,
        })
    }

    /// The moduli point with `J2 = 1` carrying these invariants.
    pub fn moduli_point(&self) -> ModuliPoint {
        let j4 = &self.i1 / int(144);
        let j6 = (&j4 + &self.i2 / int(1728)) / int(3);
        let j10 = &self.i3 / int(486);
        ModuliPoint([int(1), j4, j6, j10])
    }
}

impl fmt::Display for AbsoluteInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i1, self.i2, self.i3)
    }
}

/// `i1 = 144 J4/J2^2`, `i2 = -1728 (J2 J4 - 3 J6)/J2^3`, `i3 = 486 J10/J2^5`.
pub fn absolute_invariants(j: &ClassicalInvariants) -> Result<AbsoluteInvariants> {
    if Ring::is_zero(&j.j2) {
        return Err(Error::J2Zero);
    }
    let j2 = &j.j2;
    let i1 = int(144) * &j.j4 / Ring::pow(j2, 2);
    let i2 = int(-1728) * (j2 * &j.j4 - int(3) * &j.j6) / Ring::pow(j2, 3);
    let i3 = int(486) * &j.j10 / Ring::pow(j2, 5);
    Ok(AbsoluteInvariants { i1, i2, i3 })
}

/// `(J2 : J4 : J6 : J10)` in weighted projective space, weights (2, 4, 6, 10).
#[derive(Clone, Debug)]
pub struct ModuliPoint(pub [Rational; 4]);

impl Serialize for ModuliPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.classical().serialize(s)
    }
}

/// Weights halved: `(J2, J4, J6, J10)` scale by `mu, mu^2, mu^3, mu^5` with `mu = lambda^2`.
pub const HALF_WEIGHTS: [u32; 4] = [1, 2, 3, 5];

impl ModuliPoint {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| Ring::is_zero(c))
    }

    /// The representative scaled by `lambda`: `(lambda^2 J2, lambda^4 J4, ...)`.
    pub fn rescale(&self, lambda: &Rational) -> Self {
        let mu = lambda * lambda;
        let mut out = self.0.clone();
        for (c, &w) in out.iter_mut().zip(HALF_WEIGHTS.iter()) {
            *c = &*c * Ring::pow(&mu, w);
        }
        ModuliPoint(out)
    }

    pub fn classical(&self) -> ClassicalInvariants {
        let [j2, j4, j6, j10] = self.0.clone();
        ClassicalInvariants { j2, j4, j6, j10 }
    }

    pub fn absolute(&self) -> Result<AbsoluteInvariants> {
        absolute_invariants(&self.classical())
    }
}

/// Weighted-projective equality over the algebraic closure: some `lambda != 0`
/// with `Q_k = lambda^(2 w_k) P_k`. Since the halved weights are pairwise coprime
/// this holds iff the zero patterns agree and `Q_k^(w_l) P_l^(w_k) = Q_l^(w_k) P_k^(w_l)`
/// for every pair, i.e. iff the two sextics give isomorphic curves over Q-bar.
pub fn moduli_equal(p: &ModuliPoint, q: &ModuliPoint) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    for k in 0..4 {
        if Ring::is_zero(&p.0[k]) != Ring::is_zero(&q.0[k]) {
            return false;
        }
    }
    for k in 0..4 {
        for l in k + 1..4 {
            if Ring::is_zero(&p.0[k]) || Ring::is_zero(&p.0[l]) {
                continue;
            }
            let (wk, wl) = (HALF_WEIGHTS[k], HALF_WEIGHTS[l]);
            let lhs = Ring::pow(&q.0[k], wl) * Ring::pow(&p.0[l], wk);
            let rhs = Ring::pow(&q.0[l], wk) * Ring::pow(&p.0[k], wl);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

impl PartialEq for ModuliPoint {
    fn eq(&self, other: &Self) -> bool {
        moduli_equal(self, other)
    }
}

impl Eq for ModuliPoint {}

// Binary forms of degree n as coefficient vectors, index k <-> X^k Z^(n-k).

fn falling(n: usize, a: usize) -> i64 {
    (n + 1 - a..=n).map(|x| x as i64).product()
}

fn partial<R: QAlgebra>(f: &[R], a: usize, b: usize) -> Vec<R> {
    let n = f.len() - 1;
    if a + b > n {
        return vec![R::zero()];
    }
    let m = n - a - b;
    let mut out = vec![R::zero(); m + 1];
    for (k, c) in f.iter().enumerate() {
        if k < a || n - k < b || c.is_zero() {
            continue;
        }
        let s = falling(k, a) * falling(n - k, b);
        out[k - a] = c.mul(&R::from_i64(s));
    }
    out
}

fn form_mul<R: QAlgebra>(f: &[R], g: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    out
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn binomial(n: usize, k: usize) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The k-th transvectant `(f, g)_k`, normalized by `(m-k)! (n-k)! / (m! n!)`.
pub fn transvectant<R: QAlgebra>(f: &[R], g: &[R], k: usize) -> Vec<R> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let mut acc = vec![R::zero(); m + n - 2 * k + 1];
    for j in 0..=k {
        let term = form_mul(&partial(f, k - j, j), &partial(g, j, k - j));
        let c = binomial(k, j) * if j % 2 == 0 { 1 } else { -1 };
        let c = R::from_i64(c);
        for (a, t) in acc.iter_mut().zip(term.iter()) {
            *a = a.add(&t.mul(&c));
        }
    }
    let scale = Rational::new(
        (factorial(m - k) * factorial(n - k)).into(),
        (factorial(m) * factorial(n)).into(),
    );
    let s = R::from_rational(&scale);
    acc.iter().map(|a| a.mul(&s)).collect()
}

fn lin<R: QAlgebra>(terms: &[(i64, &R)]) -> R {
    terms.iter().fold(R::zero(), |acc, (c, x)| acc.add(&x.mul(&R::from_i64(*c))))
}

/// `[J2, J4, J6, J10]` of the sextic with coefficients `a0..a6` in any Q-algebra.
pub fn classical_invariants_generic<R: QAlgebra>(a: &[R]) -> [R; 4] {
    assert_eq!(a.len(), 7, "a binary sextic has 7 coefficients");
    let i = transvectant(a, a, 4);
    let delta = transvectant(&i, &i, 2);
    let ca = transvectant(a, a, 6)[0].clone();
    let cb = transvectant(&i, &i, 4)[0].clone();
    let cc = transvectant(&i, &delta, 4)[0].clone();
    let y1 = transvectant(a, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let cd = transvectant(&y3, &y1, 2)[0].clone();

    let a2 = ca.mul(&ca);
    let a3 = a2.mul(&ca);
    let a5 = a3.mul(&a2);
    let ab = ca.mul(&cb);
    let j2 = ca.mul(&R::from_i64(-120));
    let j4 = lin(&[(-720, &a2), (6750, &cb)]);
    let j6 = lin(&[(8640, &a3), (-108000, &ab), (202500, &cc)]);
    let j10 = lin(&[
        (-62208, &a5),
        (972000, &a3.mul(&cb)),
        (1620000, &a2.mul(&cc)),
        (-3037500, &ab.mul(&cb)),
        (-6075000, &cb.mul(&cc)),
        (-4556250, &cd),
    ]);
    [j2, j4, j6, j10]
}

pub fn classical_invariants(f: &BinarySextic) -> ClassicalInvariants {
    let [j2, j4, j6, j10] = classical_invariants_generic(f.coeffs());
    ClassicalInvariants { j2, j4, j6, j10 }
}

pub fn invariants_of(f: &BinarySextic) -> Result<AbsoluteInvariants> {
    absolute_invariants(&classical_invariants(f))
}

/// `J2, J4, J6, J10` of `(v^2X^3 + uvX^2 + vX + 1)(4v^2X^3 + v^2X^2 + 2vX + 1)`
/// as polynomials in `u` (outer) and `v` (inner).
pub fn uv_invariants() -> &'static [BiPoly; 4] {
    static CELL: OnceLock<[BiPoly; 4]> = OnceLock::new();
    CELL.get_or_init(|| classical_invariants_generic(&uv_sextic_coeffs()))
}

pub(crate) fn uv_sextic_coeffs() -> Vec<BiPoly> {
    use crate::algebra::poly::{inner_var, outer_var};
    let (u, v) = (outer_var::<Rational>(), inner_var::<Rational>());
    let one = BiPoly::one();
    let v2 = &v * &v;
    // Coefficients in X, lowest first, of the two cubic factors.
    let f1 = [one.clone(), v.clone(), &u * &v, v2.clone()];
    let f2 = [one, v.scale_q(&int(2)), v2.clone(), v2.scale_q(&int(4))];
    let mut out = vec![BiPoly::zero(); 7];
    for (i, a) in f1.iter().enumerate() {
        for (j, b) in f2.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn d8_family_at_one() {
        let f = curve_from_equation("x^5+x^3+x").unwrap();
        let j = classical_invariants(&f);
        assert_eq!(j.as_array(), [int(46), int(-44), int(-72), int(144)]);
    }

    #[test]
    fn d12_family_at_one() {
        let f = curve_from_equation("x^6+x^3+1").unwrap();
        let j = classical_invariants(&f);
        assert_eq!(j.as_array(), [int(-234), int(1944), int(-129762), int(-19683)]);
    }

    #[test]
    fn repeated_root() {
        let f = curve_from_equation("x^2 (x - 1)(x^3 + x + 1)").unwrap();
        assert!(!f.is_squarefree());
    }

    #[test]
    fn table_rows() {
        let p3 = invariants_of(&curve_from_equation("5x^5+5x^3+x").unwrap()).unwrap();
        assert_eq!(p3, AbsoluteInvariants::new(rat(144, 49), rat(3456, 8575), rat(243, 52521875)));
        let p6 = invariants_of(&curve_from_equation("11x^6+11x^3-4").unwrap()).unwrap();
        assert_eq!(p6, AbsoluteInvariants::new(rat(576, 361), rat(60480, 6859), rat(243, 2476099)));
    }

    #[test]
    fn moduli_equality() {
        let a = classical_invariants(&curve_from_equation("(3x^2+4)(x^3+x)").unwrap()).moduli_point();
        let b = classical_invariants(&curve_from_equation("49x^5+49x^3+12x").unwrap()).moduli_point();
        assert!(moduli_equal(&a, &b));
        let p5 = classical_invariants(&curve_from_equation("25x^6+25x^3+4").unwrap()).moduli_point();
        let p6 = classical_invariants(&curve_from_equation("11x^6+11x^3-4").unwrap()).moduli_point();
        assert!(!moduli_equal(&p5, &p6));
        assert!(moduli_equal(&p5, &p5.rescale(&rat(-3, 7))));
    }

    #[test]
    fn parsing_shapes() {
        let f = curve_from_equation("x^5+x^3+x").unwrap();
        assert_eq!(f, BinarySextic::from_i64s([0, 1, 0, 1, 0, 1, 0]));
        let g = curve_from_equation("x^6-1").unwrap();
        assert_eq!(g, BinarySextic::from_i64s([-1, 0, 0, 0, 0, 0, 1]));
        assert!(matches!(curve_from_equation("x^4+1"), Err(Error::BadDegree(4))));
        assert!(matches!(curve_from_equation("0"), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn uv_invariants_specialize() {
        use crate::algebra::poly::eval2;
        let j = uv_invariants();
        let (u, v) = (int(20), int(16));
        let direct = classical_invariants(&crate::split3::nondegenerate_sextic_unchecked(&u, &v));
        let specialized: Vec<Rational> = j.iter().map(|p| eval2(p, &u, &v)).collect();
        assert_eq!(specialized, direct.as_array().to_vec());
    }
}
