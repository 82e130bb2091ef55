//! Automorphism groups: the D8 and D12 loci, their normal forms, elliptic
//! involutions and the degree 2 subcover j-invariants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::poly::{bivar, inner_var, outer_var, BiPoly, Poly, QPoly};
use crate::algebra::rational::{self, int, rat, Rational};
use crate::algebra::resultant::sylvester;
use crate::algebra::ring::{QAlgebra, Ring};
use crate::algebra::triangular::solve_system;
use crate::error::{Error, Result};
use crate::igusa::{
    absolute_invariants, classical_invariants, moduli_equal, AbsoluteInvariants, BinarySextic,
    ClassicalInvariants,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AutGroupLabel {
    Z2,
    V4,
    D8,
    D12,
    #[serde(rename = "Z3⋊D8")]
    Z3D8,
    #[serde(rename = "GL2(3)")]
    GL2_3,
    Z10,
}

impl AutGroupLabel {
    pub fn order(self) -> usize {
        match self {
            AutGroupLabel::Z2 => 2,
            AutGroupLabel::V4 => 4,
            AutGroupLabel::D8 => 8,
            AutGroupLabel::D12 => 12,
            AutGroupLabel::Z10 => 10,
            AutGroupLabel::Z3D8 => 24,
            AutGroupLabel::GL2_3 => 48,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AutGroupLabel::Z2 => "Z2",
            AutGroupLabel::V4 => "V4",
            AutGroupLabel::D8 => "D8",
            AutGroupLabel::D12 => "D12",
            AutGroupLabel::Z3D8 => "Z3⋊D8",
            AutGroupLabel::GL2_3 => "GL2(3)",
            AutGroupLabel::Z10 => "Z10",
        }
    }

    /// True if the group contains an elliptic involution.
    pub fn has_elliptic_involution(self) -> bool {
        self.order() % 4 == 0
    }
}

impl fmt::Display for AutGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    D8,
    D12,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d8" => Ok(Family::D8),
            "d12" => Ok(Family::D12),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }

    fn excluded(self) -> [Rational; 3] {
        match self {
            Family::D8 => [int(0), rat(1, 4), rat(9, 100)],
            Family::D12 => [int(0), rat(1, 4), rat(-1, 50)],
        }
    }
}

/// `Y^2 = X^5 + X^3 + tX` or `Y^2 = X^6 + X^3 + t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormParam {
    pub family: Family,
    #[serde(with = "rational::as_string")]
    pub t: Rational,
}

impl NormalFormParam {
    pub fn new(family: Family, t: Rational) -> Result<Self> {
        if family.excluded().contains(&t) {
            return Err(excluded(&t, "outside the family's automorphism stratum"));
        }
        Ok(NormalFormParam { family, t })
    }

    pub fn sextic(&self) -> BinarySextic {
        family_sextic(self.family, &self.t)
    }
}

/// The family member at `t`, with no restriction on `t`.
pub fn family_sextic(family: Family, t: &Rational) -> BinarySextic {
    let (o, z) = (int(1), int(0));
    let a = match family {
        Family::D8 => [z.clone(), t.clone(), z.clone(), o.clone(), z.clone(), o, z],
        Family::D12 => [t.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z, o],
    };
    BinarySextic::new(a).expect("nonzero")
}

fn excluded(t: &Rational, reason: &'static str) -> Error {
    Error::ExcludedParameter { t: t.to_string(), reason }
}

fn jpow(j: &ClassicalInvariants) -> [Vec<Rational>; 4] {
    let p = |x: &Rational, n: usize| -> Vec<Rational> {
        let mut v = vec![int(1)];
        for k in 1..=n {
            v.push(&v[k - 1] * x);
        }
        v
    };
    [p(&j.j2, 6), p(&j.j4, 5), p(&j.j6, 2), p(&j.j10, 2)]
}

/// Left side of the D8 locus equation.
pub fn d8_locus_value(j: &ClassicalInvariants) -> Rational {
    let [a, b, c, _] = jpow(j);
    int(1706) * &b[2] * &a[2] + int(2560) * &b[3] + int(27) * &b[1] * &a[4] - int(81) * &a[3] * &c[1]
        - int(14880) * &a[1] * &b[1] * &c[1]
        + int(28800) * &c[2]
}

/// Left sides of the two D12 locus equations.
pub fn d12_locus_values(j: &ClassicalInvariants) -> [Rational; 2] {
    let [a, b, c, d] = jpow(j);
    let first = -(&b[1] * &a[4]) + int(12) * &a[3] * &c[1] - int(52) * &b[2] * &a[2] + int(80) * &b[3]
        + int(960) * &a[1] * &b[1] * &c[1]
        - int(3600) * &c[2];
    let second = int(864) * &d[1] * &a[5] + int(3456000) * &d[1] * &b[2] * &a[1]
        - int(43200) * &d[1] * &b[1] * &a[3]
        - int(2332800000i64) * &d[2]
        - &b[2] * &a[6]
        - int(768) * &b[4] * &a[2]
        + int(48) * &b[3] * &a[4]
        + int(4096) * &b[5];
    [first, second]
}

/// The J2 = 0 members of the two families.
fn j2_zero_representative(family: Family) -> BinarySextic {
    match family {
        Family::D8 => family_sextic(Family::D8, &rat(-3, 20)),
        Family::D12 => family_sextic(Family::D12, &rat(1, 40)),
    }
}

fn in_locus(j: &ClassicalInvariants, family: Family) -> bool {
    let vanish = match family {
        Family::D8 => Ring::is_zero(&d8_locus_value(j)),
        Family::D12 => d12_locus_values(j).iter().all(Ring::is_zero),
    };
    if !vanish {
        return false;
    }
    if Ring::is_zero(&j.j2) {
        let rep = classical_invariants(&j2_zero_representative(family));
        return moduli_equal(&j.moduli_point(), &rep.moduli_point());
    }
    let Ok(p) = absolute_invariants(j) else {
        return false;
    };
    t_from_invariants(family, &p).is_ok()
}

pub fn in_d8_locus(j: &ClassicalInvariants) -> bool {
    in_locus(j, Family::D8)
}

pub fn in_d12_locus(j: &ClassicalInvariants) -> bool {
    in_locus(j, Family::D12)
}

pub fn d8_family_invariants(t: &Rational) -> Result<AbsoluteInvariants> {
    for (bad, reason) in [(int(0), "t = 0"), (rat(1, 4), "t = 1/4"), (rat(-3, 20), "J2 = 0 at t = -3/20")] {
        if t == &bad {
            return Err(excluded(t, reason));
        }
    }
    let s = int(20) * t + int(3);
    let s2 = &s * &s;
    let s3 = &s2 * &s;
    let q = int(4) * t - int(1);
    let i1 = int(-144) * t * (int(20) * t - int(9)) / &s2;
    let i2 = int(3456) * t * t * (int(140) * t - int(27)) / &s3;
    let i3 = int(243) * t * t * t * &q * &q / (&s3 * &s2);
    Ok(AbsoluteInvariants::new(i1, i2, i3))
}

pub fn d12_family_invariants(t: &Rational) -> Result<AbsoluteInvariants> {
    for (bad, reason) in [(int(0), "t = 0"), (rat(1, 4), "t = 1/4"), (rat(1, 40), "J2 = 0 at t = 1/40")] {
        if t == &bad {
            return Err(excluded(t, reason));
        }
    }
    let s = int(40) * t - int(1);
    let s2 = &s * &s;
    let s3 = &s2 * &s;
    let q = int(4) * t - int(1);
    let i1 = int(1296) * t * (int(5) * t + int(1)) / &s2;
    let i2 = int(-11664) * t * (int(20) * t * t + int(26) * t - int(1)) / &s3;
    let i3 = rat(729, 16) * t * t * &q * &q * &q / (&s3 * &s2);
    Ok(AbsoluteInvariants::new(i1, i2, i3))
}

pub fn family_invariants(family: Family, t: &Rational) -> Result<AbsoluteInvariants> {
    match family {
        Family::D8 => d8_family_invariants(t),
        Family::D12 => d12_family_invariants(t),
    }
}

fn checked_div(n: Rational, d: Rational) -> Result<Rational> {
    if Ring::is_zero(&d) {
        Err(Error::DegenerateReconstruction)
    } else {
        Ok(n / d)
    }
}

fn round_trip(family: Family, t: Rational, p: &AbsoluteInvariants) -> Result<Rational> {
    let name = match family {
        Family::D8 => "d8",
        Family::D12 => "d12",
    };
    match family_invariants(family, &t) {
        Ok(q) if &q == p => Ok(t),
        _ => Err(Error::NotInLocus(name)),
    }
}

/// `t = -3/4 (345 i1^2 + 50 i1 i2 - 90 i2 - 1296 i1) / (2925 i1^2 + 250 i1 i2 - 9450 i2 - 54000 i1 + 139968)`.
pub fn d8_t_from_invariants(p: &AbsoluteInvariants) -> Result<Rational> {
    let (a, b) = (&p.i1, &p.i2);
    let num = int(345) * a * a + int(50) * a * b - int(90) * b - int(1296) * a;
    let den = int(2925) * a * a + int(250) * a * b - int(9450) * b - int(54000) * a + int(139968);
    let t = rat(-3, 4) * checked_div(num, den)?;
    round_trip(Family::D8, t, p)
}

/// The reconstruction formula as printed for the D12 case. It does not invert
/// the D12 absolute invariants; kept for the errata report.
pub fn d12_t_printed(p: &AbsoluteInvariants) -> Result<Rational> {
    let (a, b) = (&p.i1, &p.i2);
    let num = int(540) * a * a + int(100) * a * b - int(1728) * a + int(45) * b;
    let den = int(2700) * a * a + int(1000) * a * b + int(204525) * a + int(40950) * b - int(708588);
    Ok(rat(1, 4) * checked_div(num, den)?)
}

/// `t = (42 i1 + 5 i2) / (1140 i1 + 200 i2 - 3888)`, from eliminating t between
/// the first two D12 invariants. The printed formula is tried first.
pub fn d12_t_from_invariants(p: &AbsoluteInvariants) -> Result<Rational> {
    if let Ok(t) = d12_t_printed(p).and_then(|t| round_trip(Family::D12, t, p)) {
        return Ok(t);
    }
    let (a, b) = (&p.i1, &p.i2);
    let num = int(42) * a + int(5) * b;
    let den = int(1140) * a + int(200) * b - int(3888);
    round_trip(Family::D12, checked_div(num, den)?, p)
}

pub fn t_from_invariants(family: Family, p: &AbsoluteInvariants) -> Result<Rational> {
    match family {
        Family::D8 => d8_t_from_invariants(p),
        Family::D12 => d12_t_from_invariants(p),
    }
}

/// `x -> (a x + b) / (c x - a)`, acting on the sextic by `f(aX + bZ, cX - aZ) = lambda f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusInvolution {
    #[serde(with = "rational::as_string")]
    pub a: Rational,
    #[serde(with = "rational::as_string")]
    pub b: Rational,
    #[serde(with = "rational::as_string")]
    pub c: Rational,
    #[serde(with = "rational::as_string")]
    pub lambda: Rational,
    /// Branch points (roots of the sextic in P^1) fixed by the involution: 0 or 2.
    pub fixed_branch_points: usize,
}

impl MobiusInvolution {
    /// Elliptic (non-hyperelliptic) involutions fix no branch point.
    pub fn is_elliptic(&self) -> bool {
        self.fixed_branch_points == 0
    }

    pub fn apply(&self, f: &BinarySextic) -> BinarySextic {
        f.substitute(&self.a, &self.b, &self.c, &-self.a.clone())
    }
}

/// The involutions of P^1 preserving the roots of `f`, counted over the
/// algebraic closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSearch {
    /// Those defined over Q.
    pub rational: Vec<MobiusInvolution>,
    pub total: usize,
    /// Those fixing no branch point.
    pub elliptic: usize,
}

/// `f(X + bZ, cX - Z)` as coefficients over Q[b, c]; `b` is the outer variable.
fn transformed_chart_a(f: &BinarySextic) -> Vec<BiPoly> {
    let one = BiPoly::one();
    let l1: Poly<BiPoly> = Poly::new(vec![outer_var(), one.clone()]);
    let l2: Poly<BiPoly> = Poly::new(vec![-one, inner_var()]);
    let mut acc: Poly<BiPoly> = Poly::zero();
    for (k, ak) in f.coeffs().iter().enumerate() {
        if Ring::is_zero(ak) {
            continue;
        }
        let term = &l1.pow(k as u32) * &l2.pow((6 - k) as u32);
        acc = &acc + &term.map(|c| c.scale_q(ak));
    }
    (0..=6).map(|i| acc.coeff(i)).collect()
}

/// Homogeneous resultant of `f` (formal degree 6) and a binary quadratic.
fn form_resultant<R: QAlgebra>(f: &BinarySextic, q: [R; 3]) -> R {
    let fc: Vec<R> = f.coeffs().iter().map(R::from_rational).collect();
    R::determinant(sylvester(&fc, &q))
}

fn proportionality<R: QAlgebra>(f: &BinarySextic, g: &[R]) -> Vec<R> {
    let j0 = f.coeffs().iter().position(|c| !Ring::is_zero(c)).expect("nonzero form");
    (0..=6)
        .filter(|&k| k != j0)
        .map(|k| g[k].mul(&R::from_rational(f.coeff(j0))).sub(&g[j0].mul(&R::from_rational(f.coeff(k)))))
        .collect()
}

/// Number of roots of `f` in P^1 that are fixed by `x -> (ax + b)/(cx - a)`.
fn fixed_branch_points(f: &BinarySextic, a: &Rational, b: &Rational, c: &Rational) -> usize {
    // Fixed points: c X^2 - 2a XZ - b Z^2 = 0.
    let q = QPoly::new(vec![-b.clone(), int(-2) * a, c.clone()]);
    let fx = f.to_poly();
    let affine = fx.gcd(&q).deg0();
    let at_infinity = Ring::is_zero(c) && Ring::is_zero(f.coeff(6));
    affine + usize::from(at_infinity)
}

fn make_involution(f: &BinarySextic, a: Rational, b: Rational, c: Rational) -> MobiusInvolution {
    let g = f.substitute(&a, &b, &c, &-a.clone());
    let j0 = f.coeffs().iter().position(|x| !Ring::is_zero(x)).expect("nonzero form");
    let lambda = g.coeff(j0) / f.coeff(j0);
    let fixed = fixed_branch_points(f, &a, &b, &c);
    MobiusInvolution { a, b, c, lambda, fixed_branch_points: fixed }
}

pub fn find_involutions(f: &BinarySextic) -> Result<InvolutionSearch> {
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut rational = Vec::new();

    // Chart a = 1: x -> (x + b)/(cx - 1), nondegenerate when 1 + bc != 0.
    let g = transformed_chart_a(f);
    let eqs = proportionality(f, &g);
    let det = bivar(&[(0, 0, int(1)), (1, 1, int(1))]);
    let d = solve_system(&eqs)?.exclude(&det);
    let fixed_res = form_resultant::<BiPoly>(f, [-outer_var::<Rational>(), BiPoly::constant(QPoly::constant(int(-2))), inner_var()]);
    let total_a = d.count();
    let elliptic_a = d.exclude(&fixed_res).count();
    for (b, c) in d.rational_points() {
        rational.push(make_involution(f, int(1), b, c));
    }

    // Chart a = 0, c = 1: x -> b/x with b != 0.
    let g: Vec<QPoly> = (0..=6).map(|m| QPoly::monomial(f.coeff(6 - m).clone(), 6 - m)).collect();
    let mut h = QPoly::zero();
    for e in proportionality(f, &g) {
        h = h.gcd(&e);
    }
    let (mut total_b, mut elliptic_b) = (0, 0);
    if !h.is_zero() {
        let mut h = h.squarefree_monic();
        h = h.unshift(h.valuation());
        total_b = h.deg0();
        let fixed = form_resultant::<QPoly>(f, [QPoly::new(vec![int(0), int(-1)]), QPoly::zero(), QPoly::one()]);
        let common = h.gcd(&fixed);
        elliptic_b = total_b - common.deg0();
        for (b, _) in crate::algebra::roots::rational_roots(&h)? {
            rational.push(make_involution(f, int(0), b, int(1)));
        }
    }
    Ok(InvolutionSearch { rational, total: total_a + total_b, elliptic: elliptic_a + elliptic_b })
}

/// Decides the automorphism group. Special curves are matched first, then the
/// D12 and D8 loci with a normal-form round trip, then elliptic involutions.
pub fn classify(f: &BinarySextic) -> Result<AutGroupLabel> {
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let j = classical_invariants(f);
    let p = j.moduli_point();
    for (curve, label) in special_curves() {
        if moduli_equal(&p, &classical_invariants(&curve).moduli_point()) {
            return Ok(label);
        }
    }
    if in_d12_locus(&j) {
        return Ok(AutGroupLabel::D12);
    }
    if in_d8_locus(&j) {
        return Ok(AutGroupLabel::D8);
    }
    if find_involutions(f)?.elliptic > 0 {
        return Ok(AutGroupLabel::V4);
    }
    Ok(AutGroupLabel::Z2)
}

/// `Y^2 = X^6 - 1`, `Y^2 = X^5 - X` and `Y^2 = X^6 - X`.
pub fn special_curves() -> [(BinarySextic, AutGroupLabel); 3] {
    [
        (BinarySextic::from_i64s([-1, 0, 0, 0, 0, 0, 1]), AutGroupLabel::Z3D8),
        (BinarySextic::from_i64s([0, -1, 0, 0, 0, 1, 0]), AutGroupLabel::GL2_3),
        (BinarySextic::from_i64s([0, -1, 0, 0, 0, 0, 1]), AutGroupLabel::Z10),
    ]
}

/// Monic quadratic whose roots are the j-invariants of the degree 2 elliptic
/// subcovers of the family member at `t`.
///
/// D8: `j^2 - 128 (2000t^2 + 1440t + 27)/(4t - 1)^2 j + 4096 (100t - 9)^3/(4t - 1)^3`.
/// D12: `j^2 - 13824 t (500t^2 + 965t + 92)/(4t - 1)^3 j + 47775744 t (25t - 4)^3/(4t - 1)^4`.
pub fn deg2_j_quadratic(family: Family, t: &Rational) -> Result<QPoly> {
    if t == &rat(1, 4) {
        return Err(Error::Degenerate);
    }
    NormalFormParam::new(family, t.clone())?;
    let q = int(4) * t - int(1);
    let (lin, cst) = match family {
        Family::D8 => {
            let s = int(100) * t - int(9);
            (
                int(128) * (int(2000) * t * t + int(1440) * t + int(27)) / (&q * &q),
                int(4096) * &s * &s * &s / (&q * &q * &q),
            )
        }
        Family::D12 => {
            let s = int(25) * t - int(4);
            (
                int(13824) * t * (int(500) * t * t + int(965) * t + int(92)) / (&q * &q * &q),
                int(47775744) * t * &s * &s * &s / (&q * &q * &q * &q),
            )
        }
    };
    Ok(QPoly::new(vec![cst, -lin, int(1)]))
}

/// The D12 quadratic with the linear coefficient as printed (`+ 27`).
pub fn deg2_j_quadratic_printed_d12(t: &Rational) -> Result<QPoly> {
    let q = deg2_j_quadratic(Family::D12, t)?;
    let d = int(4) * t - int(1);
    let shift = int(13824) * t * int(65) / (&d * &d * &d);
    Ok(QPoly::new(vec![q.coeff(0), q.coeff(1) + shift, int(1)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::igusa::{curve_from_equation, invariants_of};
    use crate::split3::j_invariant;
    use crate::split3::EllipticModel;

    fn j_of(s: &str) -> ClassicalInvariants {
        classical_invariants(&curve_from_equation(s).unwrap())
    }

    #[test]
    fn locus_examples() {
        assert!(in_d8_locus(&j_of("x^5+x^3+1/5x")));
        assert!(!in_d8_locus(&j_of("x^6+x^3+4/25")));
        assert!(!in_d8_locus(&j_of("x^6+2x^5-x^3+3x+5")));
        assert!(in_d12_locus(&j_of("x^6+x^3+4/25")));
        assert!(!in_d12_locus(&j_of("x^5+x^3+x")));
        assert!(in_d12_locus(&j_of("x^6+x^3-1/40")));
        assert!(in_d12_locus(&j_of("x^6+x^3+1/40")));
        assert!(in_d8_locus(&j_of("x^5+x^3-3/20x")));
    }

    #[test]
    fn family_values() {
        assert_eq!(
            d8_family_invariants(&rat(81, 196)).unwrap(),
            AbsoluteInvariants::new(rat(729, 2116), rat(1240029, 97336), rat(531441, 13181630464))
        );
        assert_eq!(
            d12_family_invariants(&rat(-4, 11)).unwrap(),
            AbsoluteInvariants::new(rat(576, 361), rat(60480, 6859), rat(243, 2476099))
        );
        assert!(matches!(d8_family_invariants(&rat(-3, 20)), Err(Error::ExcludedParameter { .. })));
        assert!(matches!(d12_family_invariants(&rat(1, 40)), Err(Error::ExcludedParameter { .. })));
    }

    #[test]
    fn family_invariants_match_sextics() {
        for t in [rat(7, 3), rat(-2, 5), int(3), rat(1, 7)] {
            for fam in [Family::D8, Family::D12] {
                let direct = invariants_of(&family_sextic(fam, &t)).unwrap();
                assert_eq!(family_invariants(fam, &t).unwrap(), direct, "{fam:?} {t}");
            }
        }
    }

    #[test]
    fn reconstruction() {
        let p = d8_family_invariants(&int(7)).unwrap();
        assert_eq!(d8_t_from_invariants(&p).unwrap(), int(7));
        let p = d12_family_invariants(&int(-2)).unwrap();
        assert_eq!(d12_t_from_invariants(&p).unwrap(), int(-2));
        // The printed D12 inversion misses.
        assert_ne!(d12_t_printed(&p).unwrap(), int(-2));
        let generic = invariants_of(&curve_from_equation("x^6+2x^5-x^3+3x+5").unwrap()).unwrap();
        assert!(d8_t_from_invariants(&generic).is_err());
        assert!(d12_t_from_invariants(&generic).is_err());
    }

    #[test]
    fn involutions_of_examples() {
        let f = curve_from_equation("x^5+x^3+x").unwrap();
        let s = find_involutions(&f).unwrap();
        let has = |b: i64, c: i64, a: i64| s.rational.iter().any(|g| g.a == int(a) && g.b == int(b) && g.c == int(c));
        // -x, 1/x and -1/x.
        assert!(has(0, 0, 1) && has(1, 1, 0) && has(-1, 1, 0));
        let minus = s.rational.iter().find(|g| g.a == int(1) && Ring::is_zero(&g.b) && Ring::is_zero(&g.c)).unwrap();
        assert_eq!(minus.fixed_branch_points, 2);
        assert!(s.rational.iter().filter(|g| g.a == int(0)).all(|g| g.is_elliptic()));
        for g in &s.rational {
            assert_eq!(g.apply(&f), f.scale(&g.lambda));
        }
        let f = curve_from_equation("x^6-1").unwrap();
        let s = find_involutions(&f).unwrap();
        assert!(s.rational.iter().any(|g| g.a == int(1) && Ring::is_zero(&g.b) && g.is_elliptic()));
        let f = curve_from_equation("x^6+2x^5-x^3+3x+5").unwrap();
        let s = find_involutions(&f).unwrap();
        assert_eq!(s.total, 0);
    }

    #[test]
    fn classification() {
        let cases = [
            ("196x^5+196x^3+81x", AutGroupLabel::D8),
            ("20x^6+20x^3+1", AutGroupLabel::D12),
            ("(3x^2+4)(x^3+x)", AutGroupLabel::D8),
            ("x^6-1", AutGroupLabel::Z3D8),
            ("x^5-x", AutGroupLabel::GL2_3),
            ("x^6-x", AutGroupLabel::Z10),
            ("(x^2-1)(x^2-4)(x^2-9)", AutGroupLabel::V4),
            ("x^6+2x^5-x^3+3x+5", AutGroupLabel::Z2),
            ("x^5+x^3+9/100x", AutGroupLabel::Z3D8),
            ("x^6+x^3-1/50", AutGroupLabel::GL2_3),
            ("x^6+x^3+1/40", AutGroupLabel::D12),
            ("x^5+x^3-3/20x", AutGroupLabel::D8),
        ];
        for (s, want) in cases {
            assert_eq!(classify(&curve_from_equation(s).unwrap()).unwrap(), want, "{s}");
        }
    }

    /// j-invariants of the two quotients of an even sextic `g(X^2)`.
    fn even_quotients(g: &BinarySextic) -> [Rational; 2] {
        let c = |k: usize| g.coeff(k).clone();
        let e1 = EllipticModel::new(c(6), c(4), c(2), c(0)).unwrap();
        let e2 = EllipticModel::new(c(0), c(2), c(4), c(6)).unwrap();
        [j_invariant(&e1).unwrap(), j_invariant(&e2).unwrap()]
    }

    #[test]
    fn j_quadratic_against_quotients() {
        // With t = r^4 (D8) or t = r^6 (D12), x -> r^2/x is an involution of the
        // curve and x = r(1 + X)/(1 - X) turns it into X -> -X.
        for r in [rat(2, 1), rat(1, 3), rat(-3, 2), rat(5, 7)] {
            let t = Ring::pow(&r, 4);
            let g = family_sextic(Family::D8, &t).substitute(&r, &r, &int(-1), &int(1));
            let q = deg2_j_quadratic(Family::D8, &t).unwrap();
            for j in even_quotients(&g) {
                assert!(Ring::is_zero(&q.eval(&j)), "D8 t={t}");
            }
            let t = Ring::pow(&r, 6);
            let g = family_sextic(Family::D12, &t).substitute(&r, &r, &int(-1), &int(1));
            let q = deg2_j_quadratic(Family::D12, &t).unwrap();
            for j in even_quotients(&g) {
                assert!(Ring::is_zero(&q.eval(&j)), "D12 t={t}");
            }
        }
    }

    #[test]
    fn j_quadratic_examples() {
        let q = deg2_j_quadratic(Family::D8, &rat(12, 49)).unwrap();
        assert_eq!(q.coeff(1), int(-2 * 76771008));
        let q = deg2_j_quadratic(Family::D12, &rat(4, 25)).unwrap();
        assert_eq!(q, QPoly::new(vec![int(0), int(12288000), int(1)]));
        assert!(deg2_j_quadratic(Family::D8, &rat(1, 4)).is_err());
    }
}

