//! Degree 3 elliptic subcovers: the (u, v) family, its covering maps and
//! elliptic models, the involution beta, the map theta to moduli and its fibers.

use serde::Serialize;

use crate::algebra::poly::{bivar, BiPoly, QPoly};
use crate::algebra::rational::{self, int, rat, Rational};
use crate::algebra::ring::{Field, Ring};
use crate::error::{Error, Result};
use crate::igusa::{
    classical_invariants, invariants_of, moduli_equal, AbsoluteInvariants, BinarySextic,
    ModuliPoint,
};

pub mod fiber;
pub mod model;

pub use fiber::{e3_fiber, e3_fiber_moduli, DegenerateReport, FiberReport, FiberSolution};
pub use model::{j_invariant, EllipticModel};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UVParam {
    #[serde(with = "rational::as_string")]
    pub u: Rational,
    #[serde(with = "rational::as_string")]
    pub v: Rational,
}

/// `R = 27v + 4v^2 - u^2 v + 4u^3 - 18uv`.
pub fn r_factor(u: &Rational, v: &Rational) -> Rational {
    int(27) * v + int(4) * v * v - u * u * v + int(4) * u * u * u - int(18) * u * v
}

/// `R` as a polynomial in `u` over `Q[v]`.
pub fn r_factor_poly() -> BiPoly {
    bivar(&[(0, 1, int(27)), (0, 2, int(4)), (2, 1, int(-1)), (3, 0, int(4)), (1, 1, int(-18))])
}

impl UVParam {
    /// Checks `Delta = -16 v^17 (v - 27) R^3 != 0`.
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if Ring::is_zero(&v) {
            return Err(Error::DegenerateSextic("v"));
        }
        if v == int(27) {
            return Err(Error::DegenerateSextic("v - 27"));
        }
        if Ring::is_zero(&r_factor(&u, &v)) {
            return Err(Error::DegenerateSextic("R"));
        }
        Ok(UVParam { u, v })
    }

    pub fn from_i64(u: i64, v: i64) -> Result<Self> {
        Self::new(int(u), int(v))
    }

    pub fn r(&self) -> Rational {
        r_factor(&self.u, &self.v)
    }

    /// `4u - v - 9`.
    pub fn k(&self) -> Rational {
        int(4) * &self.u - &self.v - int(9)
    }

    pub fn discriminant(&self) -> Rational {
        int(-16) * Ring::pow(&self.v, 17) * (&self.v - int(27)) * Ring::pow(&self.r(), 3)
    }

    /// `v^2 X^3 + uv X^2 + v X + 1`.
    pub fn f1(&self) -> QPoly {
        let (u, v) = (&self.u, &self.v);
        QPoly::new(vec![int(1), v.clone(), u * v, v * v])
    }

    /// `4v^2 X^3 + v^2 X^2 + 2v X + 1`.
    pub fn f2(&self) -> QPoly {
        let v = &self.v;
        QPoly::new(vec![int(1), int(2) * v, v * v, int(4) * v * v])
    }
}

/// The sextic `F1 F2` without the discriminant check.
pub fn nondegenerate_sextic_unchecked(u: &Rational, v: &Rational) -> BinarySextic {
    let p = UVParam { u: u.clone(), v: v.clone() };
    BinarySextic::from_poly(&(&p.f1() * &p.f2())).expect("leading coefficient 4 v^4")
}

pub fn nondegenerate_sextic(p: &UVParam) -> Result<BinarySextic> {
    let p = UVParam::new(p.u.clone(), p.v.clone())?;
    Ok(nondegenerate_sextic_unchecked(&p.u, &p.v))
}

/// A rational map `X -> num(X)/den(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringMap {
    #[serde(serialize_with = "ser_poly")]
    pub num: QPoly,
    #[serde(serialize_with = "ser_poly")]
    pub den: QPoly,
}

fn ser_poly<S: serde::Serializer>(p: &QPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_expr("X"))
}

impl CoveringMap {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        let g = num.gcd(&den);
        let (n, d) = if g.deg0() > 0 { (num.div_rem(&g).0, den.div_rem(&g).0) } else { (num, den) };
        // Monic denominator so equal maps compare equal.
        let c = <Rational as Field>::inv(&d.lc()).expect("nonzero denominator");
        CoveringMap { num: n.scale(&c), den: d.scale(&c) }
    }

    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    /// Value at `x`; `None` for a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if Ring::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Value at `X = infinity`; `None` for a pole.
    pub fn eval_infinity(&self) -> Option<Rational> {
        let (n, d) = (self.num.deg0(), self.den.deg0());
        if n > d {
            None
        } else if n < d {
            Some(int(0))
        } else {
            Some(self.num.lc() / self.den.lc())
        }
    }
}

/// `U1 = vX^2 / F1` and `U2 = (vX + 3)^2 (kvX + 3u - v) / (v k F2)` with `k = 4u - v - 9`.
pub fn covering_maps(p: &UVParam) -> Result<(CoveringMap, CoveringMap)> {
    let p = UVParam::new(p.u.clone(), p.v.clone())?;
    let k = p.k();
    if Ring::is_zero(&k) {
        return Err(Error::U2Undefined);
    }
    let (u, v) = (&p.u, &p.v);
    let u1 = CoveringMap::new(QPoly::monomial(v.clone(), 2), p.f1());
    let a = QPoly::new(vec![int(3), v.clone()]);
    let lin = QPoly::new(vec![int(3) * u - v, &k * v]);
    let num = &(&a * &a) * &lin;
    let den = p.f2().scale(&(v * &k));
    Ok((u1, CoveringMap::new(num, den)))
}

/// E: `V^2 = -g(U)` with `g = R U^3 - (12u^2 - 2uv - 18v) U^2 + (12u - v) U - 4`, and
/// E': `V^2 = -(v - 27) (c3 U^3 + c2 U^2 + c1 U + c0)`.
///
/// The overall constants are the twists for which `Y^2 = F1 F2` really covers the
/// curves through `U1` and `U2`; see `verify_cover`.
pub fn subcover_models(p: &UVParam) -> Result<(EllipticModel, EllipticModel)> {
    let p = UVParam::new(p.u.clone(), p.v.clone())?;
    if Ring::is_zero(&p.k()) {
        return Err(Error::U2Undefined);
    }
    let (g, gp) = model_cubics(&p.u, &p.v);
    let e = EllipticModel::from_cubic(&g.scale(&int(-1)))?;
    let ep = EllipticModel::from_cubic(&gp.scale(&-(&p.v - int(27))))?;
    Ok((e, ep))
}

/// The two cubics as printed: `g` for E and `c3 U^3 + ... + c0` for E'.
pub fn model_cubics(u: &Rational, v: &Rational) -> (QPoly, QPoly) {
    let r = r_factor(u, v);
    let g = QPoly::new(vec![
        int(-4),
        int(12) * u - v,
        -(int(12) * u * u - int(2) * u * v - int(18) * v),
        r,
    ]);
    let k = int(4) * u - v - int(9);
    let c0 = -Ring::pow(&(int(9) * u - int(2) * v - int(27)), 3);
    let c1 = &k
        * (int(729) * u * u + int(54) * u * u * v - int(972) * u * v - int(18) * u * v * v
            + int(189) * v * v
            + int(729) * v
            + v * v * v);
    let c2 = -(v * &k * &k * (int(54) * u + u * v - int(27) * v));
    let c3 = v * v * Ring::pow(&k, 3);
    (g, QPoly::new(vec![c0, c1, c2, c3]))
}

/// `beta(u), beta(v)`.
pub fn beta(p: &UVParam) -> Result<UVParam> {
    let (u, v) = (&p.u, &p.v);
    let d = int(4) * u * u * u + int(27) * v - int(18) * u * v - u * u * v + int(4) * v * v;
    if v == &int(27) {
        return Err(Error::BetaUndefined("v - 27"));
    }
    if Ring::is_zero(&d) {
        return Err(Error::BetaUndefined("4u^3 + 27v - 18uv - u^2 v + 4v^2"));
    }
    let w = v - int(3) * u;
    let bu = &w
        * (int(324) * u * u + int(15) * u * u * v - int(378) * u * v - int(4) * u * v * v
            + int(243) * v
            + int(72) * v * v)
        / ((v - int(27)) * &d);
    let bv = int(-4) * Ring::pow(&w, 3) / &d;
    Ok(UVParam { u: bu, v: bv })
}

/// `(u, v) -> (i1, i2, i3)`.
pub fn theta(p: &UVParam) -> Result<AbsoluteInvariants> {
    invariants_of(&nondegenerate_sextic(p)?)
}

pub fn theta_moduli(p: &UVParam) -> Result<ModuliPoint> {
    Ok(classical_invariants(&nondegenerate_sextic(p)?).moduli_point())
}

/// `8v^3 + 27v^2 - 54uv^2 - u^2v^2 + 108u^2v + 4u^3v - 108u^3`, zero on the branch curve of theta.
pub fn jacobian_det_locus(u: &Rational, v: &Rational) -> Rational {
    let (u2, v2) = (u * u, v * v);
    int(8) * &v2 * v + int(27) * &v2 - int(54) * u * &v2 - &u2 * &v2 + int(108) * &u2 * v
        + int(4) * &u2 * u * v
        - int(108) * &u2 * u
}

/// Points of the branch curve: `u = s v` with `s = (6 + 4m)/(9 - m^2)`, the rational
/// parametrization of the quadratic residual `v`-equation's discriminant.
pub fn branch_curve_points(m: &Rational) -> Vec<UVParam> {
    let den = int(9) - m * m;
    if Ring::is_zero(&den) {
        return Vec::new();
    }
    let s = (int(6) + int(4) * m) / den;
    // v^2 (4s^3 - s^2) + v (8 - 54s + 108s^2 - 108s^3) + 27 = 0
    let a = int(4) * Ring::pow(&s, 3) - &s * &s;
    let b = int(8) - int(54) * &s + int(108) * &s * &s - int(108) * Ring::pow(&s, 3);
    let q = QPoly::new(vec![int(27), b, a]);
    let mut out = Vec::new();
    if q.degree() != Some(2) {
        return out;
    }
    for (v, _) in crate::algebra::roots::rational_roots(&q).unwrap_or_default() {
        if let Ok(p) = UVParam::new(&s * &v, v) {
            out.push(p);
        }
    }
    out
}

/// The three isolated images of the critical locus of theta.
pub fn exceptional_points() -> [AbsoluteInvariants; 3] {
    [
        AbsoluteInvariants::new(rat(-8019, 20), rat(-1240029, 200), rat(-531441, 100000)),
        AbsoluteInvariants::new(rat(729, 2116), rat(1240029, 97336), rat(531441, 13181630464)),
        AbsoluteInvariants::new(int(81), rat(-5103, 25), rat(-729, 12500)),
    ]
}

/// `c` of the degenerate family `Y^2 = (3X^2 + 4)(X^3 + X + c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateParam {
    #[serde(with = "rational::as_string")]
    pub c: Rational,
}

impl DegenerateParam {
    pub fn w(&self) -> Rational {
        &self.c * &self.c
    }
}

pub fn degenerate_sextic(d: &DegenerateParam) -> Result<BinarySextic> {
    if d.w() == rat(-4, 27) {
        return Err(Error::Degenerate);
    }
    let c = &d.c;
    let f = QPoly::new(vec![int(4) * c, int(4), int(3) * c, int(7), int(0), int(3)]);
    BinarySextic::from_poly(&f)
}

/// `J2, J4, J6, J10` of the degenerate family as polynomials in `w = c^2`.
pub fn degenerate_invariants() -> [QPoly; 4] {
    let w = QPoly::x();
    let a = &w.scale(&int(27)) + &QPoly::constant(int(4));
    [
        QPoly::constant(int(774)),
        QPoly::from_i64s(&[9648, 30132]),
        QPoly::from_i64s(&[2763360, 10460664, -26244]),
        a.pow(3).scale(&int(432)),
    ]
}

/// Genus 2 curves with degree 3 subcovers lying outside both the (u, v) chart and
/// the degenerate family. Each entry has covers checked by `verify_cover_data`.
pub fn boundary_pairs() -> Vec<BoundaryPair> {
    // (X^3 + 1)(4X^3 + 1) with U1 = X^2/(X^3 + 1) and U2 = X/(4X^3 + 1).
    let f = BinarySextic::from_poly(&QPoly::from_i64s(&[1, 0, 0, 5, 0, 0, 4])).expect("degree 6");
    let u1 = CoveringMap::new(QPoly::from_i64s(&[0, 0, 1]), QPoly::from_i64s(&[1, 0, 0, 1]));
    let u2 = CoveringMap::new(QPoly::from_i64s(&[0, 1]), QPoly::from_i64s(&[1, 0, 0, 4]));
    let e = EllipticModel::new(int(-27), int(0), int(0), int(4)).expect("nonsingular");
    let ep = EllipticModel::new(int(-432), int(0), int(0), int(16)).expect("nonsingular");
    vec![BoundaryPair { name: "(X^3+1)(4X^3+1)", curve: f, covers: [(u1, e), (u2, ep)] }]
}

#[derive(Clone, Debug)]
pub struct BoundaryPair {
    pub name: &'static str,
    pub curve: BinarySextic,
    pub covers: [(CoveringMap, EllipticModel); 2],
}

pub fn boundary_match(p: &ModuliPoint) -> Option<BoundaryPair> {
    boundary_pairs()
        .into_iter()
        .find(|b| moduli_equal(&classical_invariants(&b.curve).moduli_point(), p))
}

/// Whether `(U, V)` with `V = Y * h(X)` for some rational `h` maps `Y^2 = f(X)` onto
/// `V^2 = g(U)`: `g(U(X)) f(X)` must be the square of a rational function.
pub fn verify_cover_data(f: &BinarySextic, u: &CoveringMap, g: &EllipticModel) -> bool {
    let (n, d) = (&u.num, &u.den);
    let cs = g.coeffs();
    let mut acc = QPoly::zero();
    for (i, c) in cs.iter().enumerate() {
        let t = &(&n.pow(i as u32) * &d.pow((3 - i) as u32)) * &QPoly::constant(c.clone());
        acc = &acc + &t;
    }
    // g(N/D) f = acc f / D^3 = acc f D / D^4.
    let p = &(&acc * &f.to_poly()) * d;
    poly_sqrt(&p).is_some()
}

/// Square root of a polynomial that is a square in `Q[x]`.
pub fn poly_sqrt(p: &QPoly) -> Option<QPoly> {
    if p.is_zero() {
        return Some(QPoly::zero());
    }
    let n = p.deg0();
    if n % 2 == 1 {
        return None;
    }
    let lc = rational::is_rational_square(&p.lc())?;
    let m = n / 2;
    // Determine coefficients of s from the top down.
    let mut s = vec![int(0); m + 1];
    s[m] = lc;
    let two_lead = int(2) * &s[m];
    for k in (0..m).rev() {
        // coefficient of x^(m + k) in s^2 is 2 s_m s_k + sum_{i+j = m+k, k < i,j < m} s_i s_j
        let mut acc = p.coeff(m + k);
        for i in k + 1..m {
            let j = m + k - i;
            if j > k && j < m + 1 && j != m {
                acc -= &s[i] * &s[j];
            }
        }
        s[k] = acc / &two_lead;
    }
    let s = QPoly::new(s);
    if &s * &s == *p {
        Some(s)
    } else {
        None
    }
}

pub fn verify_cover(p: &UVParam) -> Result<bool> {
    let f = nondegenerate_sextic(p)?;
    let (u1, u2) = covering_maps(p)?;
    let (e, ep) = subcover_models(p)?;
    Ok(verify_cover_data(&f, &u1, &e) && verify_cover_data(&f, &u2, &ep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_six_data() {
        let p = UVParam::from_i64(20, 16).unwrap();
        let (u1, u2) = covering_maps(&p).unwrap();
        assert_eq!(u1, CoveringMap::new(QPoly::from_i64s(&[0, 0, 16]), QPoly::from_i64s(&[1, 16, 320, 256])));
        let n = &QPoly::from_i64s(&[3, 16]).pow(2) * &QPoly::from_i64s(&[1, 20]);
        let d = QPoly::from_i64s(&[1, 32, 256, 1024]).scale(&int(20));
        assert_eq!(u2, CoveringMap::new(n, d));
        let (e, ep) = subcover_models(&p).unwrap();
        assert_eq!(j_invariant(&e).unwrap(), int(-32768));
        assert_eq!(j_invariant(&ep).unwrap(), int(-32768));
        assert!(verify_cover(&p).unwrap());
        assert_eq!(beta(&p).unwrap(), p);
        assert!(Ring::is_zero(&jacobian_det_locus(&p.u, &p.v)));
    }

    #[test]
    fn example_four_data() {
        let p = UVParam::new(rat(25, 2), rat(250, 9)).unwrap();
        assert!(verify_cover(&p).unwrap());
        let (u1, u2) = covering_maps(&p).unwrap();
        // The quadratic factor belongs to F1, i.e. 2500X^2 + 225X + 9.
        let num = QPoly::from_i64s(&[0, 0, 2250]);
        let den = &QPoly::from_i64s(&[9, 25]) * &QPoly::from_i64s(&[9, 225, 2500]);
        assert_eq!(u1, CoveringMap::new(num, den));
        let a = QPoly::from_i64s(&[27, 250]);
        let num = &(&a * &a) * &QPoly::from_i64s(&[9, 340]);
        let den = (&QPoly::from_i64s(&[9, 100]) * &QPoly::from_i64s(&[9, 400, 2500])).scale(&int(340));
        assert_eq!(u2, CoveringMap::new(num, den));
        assert_eq!(theta(&p).unwrap(), exceptional_points()[0]);
    }

    #[test]
    fn corrupted_model_fails() {
        let p = UVParam::from_i64(20, 16).unwrap();
        let f = nondegenerate_sextic(&p).unwrap();
        let (u1, _) = covering_maps(&p).unwrap();
        let (e, _) = subcover_models(&p).unwrap();
        let mut c = e.coeffs();
        c[1] += int(1);
        let bad = EllipticModel::new(c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone()).unwrap();
        assert!(verify_cover_data(&f, &u1, &e));
        assert!(!verify_cover_data(&f, &u1, &bad));
    }

    #[test]
    fn sextic_errors() {
        assert!(matches!(nondegenerate_sextic(&UVParam { u: int(1), v: int(27) }), Err(Error::DegenerateSextic("v - 27"))));
        assert_eq!(jacobian_det_locus(&int(1), &int(1)), int(-16));
        assert_eq!(jacobian_det_locus(&int(0), &int(0)), int(0));
    }

    #[test]
    fn boundary_covers() {
        for b in boundary_pairs() {
            for (u, e) in &b.covers {
                assert!(verify_cover_data(&b.curve, u, e));
                assert_eq!(u.degree(), 3);
            }
        }
    }

    #[test]
    fn degenerate_invariants_match() {
        for c in [0, 1, 2, -3] {
            let f = degenerate_sextic(&DegenerateParam { c: int(c) }).unwrap();
            let j = classical_invariants(&f).as_array();
            let w = int(c * c);
            let poly: Vec<Rational> = degenerate_invariants().iter().map(|p| p.eval(&w)).collect();
            assert_eq!(poly, j.to_vec());
        }
    }

    #[test]
    fn sqrt_of_square() {
        let s = QPoly::from_i64s(&[3, -1, 0, 5]);
        assert_eq!(poly_sqrt(&(&s * &s)).map(|r| r.pow(2)), Some(&s * &s));
        assert!(poly_sqrt(&QPoly::from_i64s(&[1, 0, 2])).is_none());
    }
}
