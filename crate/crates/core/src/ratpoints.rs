//! Torsion of elliptic curves over Q, fibers of covering maps, and rational points of
//! genus 2 curves with a rank 0 elliptic subcover.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::poly::{Poly, QPoly};
use crate::algebra::rational::{from_bigint, int, is_rational_square, Rational};
use crate::algebra::roots::rational_roots;
use crate::error::{Error, Result};
use crate::igusa::BinarySextic;
use crate::split3::model::EllipticModel;
use crate::igusa::classical_invariants;
use crate::split3::{
    boundary_pairs, covering_maps, e3_fiber_moduli, nondegenerate_sextic, subcover_models, verify_cover_data,
    CoveringMap, UVParam,
};

type ZPoly = Poly<BigInt>;

/// `y^2 = x^3 + A x + B` with integral `A, B`, obtained from a source model
/// `V^2 = c3 U^3 + c2 U^2 + c1 U + c0` by `x = m^2 (c3 U + c2/3)`, `y = m^3 c3 V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortWeierstrass {
    #[serde(serialize_with = "ser_display")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub m: BigInt,
    #[serde(skip)]
    source: EllipticModel,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ShortWeierstrass {
    pub fn source(&self) -> &EllipticModel {
        &self.source
    }

    fn a_q(&self) -> Rational {
        from_bigint(self.a.clone())
    }

    fn b_q(&self) -> Rational {
        from_bigint(self.b.clone())
    }

    fn m_q(&self) -> Rational {
        from_bigint(self.m.clone())
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + self.a_q() * x + self.b_q()
    }

    /// `4A^3 + 27B^2`.
    pub fn discriminant_core(&self) -> BigInt {
        BigInt::from(4) * &self.a * &self.a * &self.a + BigInt::from(27) * &self.b * &self.b
    }

    pub fn j_invariant(&self) -> Rational {
        let a3 = from_bigint(BigInt::from(4) * &self.a * &self.a * &self.a);
        int(1728) * &a3 / from_bigint(self.discriminant_core())
    }

    pub fn to_short(&self, p: &EllipticPoint) -> EllipticPoint {
        match p {
            EllipticPoint::Infinity => EllipticPoint::Infinity,
            EllipticPoint::Affine { x, y } => {
                let m = self.m_q();
                let s = &self.source;
                let m2 = &m * &m;
                EllipticPoint::Affine {
                    x: &m2 * (&s.c3 * x + &s.c2 / int(3)),
                    y: &m2 * &m * &s.c3 * y,
                }
            }
        }
    }

    pub fn from_short(&self, p: &EllipticPoint) -> EllipticPoint {
        match p {
            EllipticPoint::Infinity => EllipticPoint::Infinity,
            EllipticPoint::Affine { x, y } => {
                let m = self.m_q();
                let s = &self.source;
                let m2 = &m * &m;
                EllipticPoint::Affine {
                    x: (x / &m2 - &s.c2 / int(3)) / &s.c3,
                    y: y / (&m2 * &m * &s.c3),
                }
            }
        }
    }

    pub fn contains(&self, p: &EllipticPoint) -> bool {
        match p {
            EllipticPoint::Infinity => true,
            EllipticPoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    pub fn neg(&self, p: &EllipticPoint) -> EllipticPoint {
        match p {
            EllipticPoint::Infinity => EllipticPoint::Infinity,
            EllipticPoint::Affine { x, y } => EllipticPoint::Affine { x: x.clone(), y: -y },
        }
    }

    pub fn add(&self, p: &EllipticPoint, q: &EllipticPoint) -> EllipticPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EllipticPoint::Infinity, _) => return q.clone(),
            (_, EllipticPoint::Infinity) => return p.clone(),
            (EllipticPoint::Affine { x: x1, y: y1 }, EllipticPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == y2 && !y1.is_zero() {
            (int(3) * x1 * x1 + self.a_q()) / (int(2) * y1)
        } else {
            return EllipticPoint::Infinity;
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = &lambda * (x1 - &x3) - y1;
        EllipticPoint::Affine { x: x3, y: y3 }
    }

    /// Order of `p` if it is at most `limit`.
    pub fn order(&self, p: &EllipticPoint, limit: usize) -> Option<usize> {
        let mut acc = p.clone();
        for n in 1..=limit {
            if acc == EllipticPoint::Infinity {
                return Some(n);
            }
            acc = self.add(&acc, p);
        }
        None
    }
}

/// Integral short model of `e`. For an input already of the form `y^2 = x^3 + Ax + B`
/// with integral `A, B` the transform is the identity.
pub fn to_short_weierstrass(e: &EllipticModel) -> Result<ShortWeierstrass> {
    let e = EllipticModel::new(e.c3.clone(), e.c2.clone(), e.c1.clone(), e.c0.clone())?;
    let (c3, c2, c1, c0) = (&e.c3, &e.c2, &e.c1, &e.c0);
    // X = c3 U, Y = c3 V: Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2, then X = X' - c2/3.
    let a1 = c1 * c3 - c2 * c2 / int(3);
    let b1 = c0 * c3 * c3 - c1 * c3 * c2 / int(3) + int(2) * c2 * c2 * c2 / int(27);
    let m = scaling_factor(&a1, &b1);
    let mq = from_bigint(m.clone());
    let m4 = crate::algebra::ring::Ring::pow(&mq, 4);
    let m6 = crate::algebra::ring::Ring::pow(&mq, 6);
    let a = (&a1 * &m4).to_integer();
    let b = (&b1 * &m6).to_integer();
    debug_assert!(&a1 * &m4 == from_bigint(a.clone()) && &b1 * &m6 == from_bigint(b.clone()));
    Ok(ShortWeierstrass { a, b, m, source: e })
}

/// Least `m` (up to primes above the trial division range) with `m^4 a` and `m^6 b` integral.
fn scaling_factor(a: &Rational, b: &Rational) -> BigInt {
    let mut rest = a.denom().lcm(b.denom());
    let mut m = BigInt::one();
    let mut p = 2u64;
    while p < 100_000 && rest > BigInt::one() {
        let bp = BigInt::from(p);
        if (&rest % &bp).is_zero() {
            let va = valuation(a.denom(), &bp);
            let vb = valuation(b.denom(), &bp);
            let e = va.div_ceil(4).max(vb.div_ceil(6));
            m *= num_traits::pow(bp.clone(), e as usize);
            while (&rest % &bp).is_zero() {
                rest /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // Any cofactor left has only large prime factors; including it once suffices.
    m * rest
}

fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// A point of an elliptic curve; `Infinity` is the identity `O`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EllipticPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EllipticPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EllipticPoint::Affine { x, y }
    }
}

impl fmt::Display for EllipticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticPoint::Infinity => write!(f, "O"),
            EllipticPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Serialize for EllipticPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionGroup {
    /// `O` first, then affine points in increasing order, in the source model's coordinates.
    pub points: Vec<EllipticPoint>,
    pub order: usize,
    pub structure: String,
    pub generators: Vec<EllipticPoint>,
}

impl TorsionGroup {
    pub fn contains(&self, p: &EllipticPoint) -> bool {
        self.points.contains(p)
    }

    /// The distinct `U`-coordinates, `None` standing for `O`.
    pub fn u_values(&self) -> Vec<Option<Rational>> {
        let mut out: Vec<Option<Rational>> = Vec::new();
        for p in &self.points {
            let u = match p {
                EllipticPoint::Infinity => None,
                EllipticPoint::Affine { x, .. } => Some(x.clone()),
            };
            if !out.contains(&u) {
                out.push(u);
            }
        }
        out
    }
}

/// Complete rational torsion subgroup of `e`.
///
/// The order divides `#E(F_p)` for every good prime `p >= 5`; the 2-torsion comes from the
/// rational roots of the cubic and every other torsion point has an `x`-coordinate that is
/// a rational root of the division polynomial `f_n` for some admissible `n` dividing that gcd.
pub fn torsion_subgroup(e: &EllipticModel) -> Result<TorsionGroup> {
    let sw = to_short_weierstrass(e)?;
    let bound = torsion_order_bound(&sw);
    let mut found: BTreeSet<EllipticPoint> = BTreeSet::new();
    found.insert(EllipticPoint::Infinity);
    let cubic = QPoly::new(vec![sw.b_q(), sw.a_q(), int(0), int(1)]);
    for (x, _) in rational_roots(&cubic)? {
        found.insert(EllipticPoint::affine(x, int(0)));
    }
    let divs = division_polynomials(&sw.a, &sw.b, 12);
    for n in 3..=12usize {
        if n == 11 || bound % n as u64 != 0 {
            continue;
        }
        let fq = divs[n].map(|c| from_bigint(c.clone()));
        for (x, _) in rational_roots(&fq)? {
            let Some(y) = is_rational_square(&sw.rhs(&x)) else { continue };
            if y.is_zero() {
                continue;
            }
            for y in [y.clone(), -y] {
                let p = EllipticPoint::affine(x.clone(), y);
                if sw.order(&p, 12).is_some() {
                    found.insert(p);
                }
            }
        }
    }
    let pts: Vec<EllipticPoint> = found.into_iter().collect();
    let order = pts.len();
    let two = pts.iter().filter(|p| matches!(p, EllipticPoint::Affine { y, .. } if y.is_zero())).count();
    let orders: Vec<usize> = pts.iter().map(|p| sw.order(p, 12).expect("torsion")).collect();
    let max_i = (0..pts.len()).max_by_key(|&i| (orders[i], std::cmp::Reverse(i))).unwrap();
    let mut gens_short = Vec::new();
    let structure;
    if two == 3 {
        structure = format!("Z/2 x Z/{}", order / 2);
        let g = pts[max_i].clone();
        let mut multiples = vec![EllipticPoint::Infinity];
        let mut acc = g.clone();
        while acc != EllipticPoint::Infinity {
            multiples.push(acc.clone());
            acc = sw.add(&acc, &g);
        }
        let h = pts
            .iter()
            .find(|p| matches!(p, EllipticPoint::Affine { y, .. } if y.is_zero()) && !multiples.contains(p))
            .expect("full 2-torsion")
            .clone();
        gens_short.push(g);
        gens_short.push(h);
    } else {
        structure = if order == 1 { "trivial".to_string() } else { format!("Z/{order}") };
        if order > 1 {
            gens_short.push(pts[max_i].clone());
        }
    }
    let mut points: Vec<EllipticPoint> = pts.iter().map(|p| sw.from_short(p)).collect();
    points.sort();
    let generators = gens_short.iter().map(|p| sw.from_short(p)).collect();
    Ok(TorsionGroup { points, order, structure, generators })
}

/// gcd of `#E(F_p)` over good primes `5 <= p < 200`.
fn torsion_order_bound(sw: &ShortWeierstrass) -> u64 {
    let disc = sw.discriminant_core();
    let mut g = 0u64;
    let mut count = 0;
    for p in 5u64..200 {
        if !crate::algebra::modular::is_prime(p) {
            continue;
        }
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let a = sw.a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let b = sw.b.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        g = g.gcd(&points_mod_p(a, b, p));
        count += 1;
        if count >= 12 {
            break;
        }
    }
    if g == 0 {
        // No good prime in range: fall back to the lcm of admissible orders.
        27720
    } else {
        g
    }
}

fn points_mod_p(a: u64, b: u64, p: u64) -> u64 {
    let mut squares = vec![0u64; p as usize];
    for y in 0..p {
        squares[(y * y % p) as usize] += 1;
    }
    let mut n = 1;
    for x in 0..p {
        let r = (x * x % p * x + a * x + b) % p;
        n += squares[r as usize];
    }
    n
}

/// `f_0, ..., f_max` with `psi_n = f_n` for odd `n` and `psi_n = 2y f_n` for even `n`.
pub fn division_polynomials(a: &BigInt, b: &BigInt, max: usize) -> Vec<ZPoly> {
    let z = |cs: Vec<BigInt>| ZPoly::new(cs);
    let a2 = a * a;
    let a3 = &a2 * a;
    let mut f: Vec<ZPoly> = vec![
        ZPoly::zero(),
        ZPoly::one(),
        ZPoly::one(),
        z(vec![-&a2, BigInt::from(12) * b, BigInt::from(6) * a, BigInt::zero(), BigInt::from(3)]),
        z(vec![
            BigInt::from(-2) * (BigInt::from(8) * b * b + &a3),
            BigInt::from(-8) * a * b,
            BigInt::from(-10) * &a2,
            BigInt::from(40) * b,
            BigInt::from(10) * a,
            BigInt::zero(),
            BigInt::from(2),
        ]),
    ];
    let ff = z(vec![BigInt::from(4) * b, BigInt::from(4) * a, BigInt::zero(), BigInt::from(4)]);
    let ff2 = &ff * &ff;
    let cube = |p: &ZPoly| &(p * p) * p;
    let sq = |p: &ZPoly| p * p;
    for n in 5..=max {
        let m = n / 2;
        let next = if n % 2 == 1 {
            let t1 = &f[m + 2] * &cube(&f[m]);
            let t2 = &f[m - 1] * &cube(&f[m + 1]);
            if m % 2 == 0 {
                &(&ff2 * &t1) - &t2
            } else {
                &t1 - &(&ff2 * &t2)
            }
        } else {
            let inner = &(&f[m + 2] * &sq(&f[m - 1])) - &(&f[m - 2] * &sq(&f[m + 1]));
            &f[m] * &inner
        };
        f.push(next);
    }
    f
}

/// Branch at infinity of `Y^2 = f(X)`. With `deg f = 6` and `a6 = s^2` the two points
/// have `Y/X^3 -> s` (`Plus`) and `-s` (`Minus`); with `deg f = 5` there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "single")]
    Single,
}

/// A rational point of a genus 2 curve `Y^2 = f(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Affine { x: Rational, y: Rational },
    Infinity(Branch),
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, CurvePoint::Infinity(_))
    }

    pub fn lies_on(&self, f: &BinarySextic) -> bool {
        match self {
            CurvePoint::Affine { x, y } => y * y == f.to_poly().eval(x),
            CurvePoint::Infinity(b) => infinite_points(f).contains(&CurvePoint::Infinity(*b)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
            CurvePoint::Infinity(Branch::Plus) => write!(f, "inf+"),
            CurvePoint::Infinity(Branch::Minus) => write!(f, "inf-"),
            CurvePoint::Infinity(Branch::Single) => write!(f, "inf"),
        }
    }
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        match self {
            CurvePoint::Affine { x, y } => {
                map.serialize_entry("x", &x.to_string())?;
                map.serialize_entry("y", &y.to_string())?;
            }
            CurvePoint::Infinity(b) => map.serialize_entry("infinity", b)?,
        }
        map.end()
    }
}

/// Rational points of `Y^2 = f(X)` over `X = infinity`.
pub fn infinite_points(f: &BinarySextic) -> Vec<CurvePoint> {
    let a6 = f.coeff(6);
    if a6.is_zero() {
        return vec![CurvePoint::Infinity(Branch::Single)];
    }
    match is_rational_square(a6) {
        Some(_) => vec![CurvePoint::Infinity(Branch::Plus), CurvePoint::Infinity(Branch::Minus)],
        None => Vec::new(),
    }
}

/// Rational points of `Y^2 = f(X)` with the given `X`.
pub fn affine_points_over(f: &BinarySextic, x: &Rational) -> Vec<CurvePoint> {
    match is_rational_square(&f.to_poly().eval(x)) {
        None => Vec::new(),
        Some(y) if y.is_zero() => vec![CurvePoint::affine(x.clone(), y)],
        Some(y) => vec![CurvePoint::affine(x.clone(), -&y), CurvePoint::affine(x.clone(), y)],
    }
}

/// Rational points of `Y^2 = f(X)` whose `X` satisfies `U(X) = q` (`q = None` is the pole).
pub fn fiber_preimage(u: &CoveringMap, q: Option<&Rational>, f: &BinarySextic) -> Result<Vec<CurvePoint>> {
    let (eq, at_inf) = match q {
        Some(q) => (&u.num - &u.den.scale(q), u.eval_infinity().as_ref() == Some(q)),
        None => (u.den.clone(), u.eval_infinity().is_none()),
    };
    let mut out = BTreeSet::new();
    if eq.deg0() > 0 {
        for (x, _) in rational_roots(&eq)? {
            out.extend(affine_points_over(f, &x));
        }
    } else if eq.is_zero() {
        return Err(Error::Invalid("constant covering map".into()));
    }
    if at_inf {
        out.extend(infinite_points(f));
    }
    Ok(out.into_iter().collect())
}

/// An externally supplied rank. Only `rank == 0` certificates are used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    #[serde(rename = "curve-id")]
    pub curve_id: String,
    pub rank: u32,
    pub provenance: String,
}

/// A covering `(X, Y) -> (U(X), V)` of `V^2 = model` with an identifier matched against certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub id: String,
    pub map: CoveringMap,
    pub model: EllipticModel,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverPoints {
    pub id: String,
    pub torsion: TorsionGroup,
    /// Preimages of the torsion points.
    pub points: Vec<CurvePoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalPointsReport {
    pub points: Vec<CurvePoint>,
    pub covers: Vec<CoverPoints>,
    /// Rational points that map to non-torsion points on a curve certified to have rank 0.
    pub conflicts: Vec<String>,
    /// True when every certified cover yields the same set and no conflict was found.
    pub complete: bool,
}

pub const SANITY_BOUND: u64 = 50;

/// Rational points of `Y^2 = f(X)` as preimages of the torsion of a rank 0 subcover.
///
/// Every cover with a rank 0 certificate is used. The points at infinity and the points of
/// height at most `SANITY_BOUND` are always added, and any point not lying over torsion of
/// a certified curve is reported as a conflict with that certificate.
pub fn rank0_rational_points(
    f: &BinarySextic,
    covers: &[Cover],
    certs: &[RankCertificate],
) -> Result<RationalPointsReport> {
    let certified: Vec<&Cover> = covers
        .iter()
        .filter(|c| certs.iter().any(|k| k.curve_id == c.id && k.rank == 0))
        .collect();
    if certified.is_empty() {
        return Err(Error::InsufficientCertificates);
    }
    let mut per = Vec::new();
    let mut all: BTreeSet<CurvePoint> = naive_point_search(f, SANITY_BOUND).into_iter().collect();
    for c in certified {
        if !verify_cover_data(f, &c.map, &c.model) {
            return Err(Error::Invalid(format!("cover {} does not map the curve onto its model", c.id)));
        }
        let torsion = torsion_subgroup(&c.model)?;
        let mut pts = BTreeSet::new();
        for q in torsion.u_values() {
            pts.extend(fiber_preimage(&c.map, q.as_ref(), f)?);
        }
        all.extend(pts.iter().cloned());
        per.push(CoverPoints { id: c.id.clone(), torsion, points: pts.into_iter().collect() });
    }
    let mut conflicts = Vec::new();
    for c in &per {
        for p in &all {
            if !c.points.contains(p) {
                conflicts.push(format!(
                    "{p} does not lie over a torsion point of {}, contradicting its rank 0 certificate",
                    c.id
                ));
            }
        }
    }
    Ok(RationalPointsReport {
        points: all.into_iter().collect(),
        covers: per,
        complete: conflicts.is_empty(),
        conflicts,
    })
}

/// `c` with `f = c g`, if the two sextics are proportional.
pub fn proportionality(f: &BinarySextic, g: &BinarySextic) -> Option<Rational> {
    let k = (0..=6).find(|&k| !g.coeff(k).is_zero())?;
    let c = f.coeff(k) / g.coeff(k);
    if c.is_zero() || (0..=6).any(|i| f.coeff(i) != &(&c * g.coeff(i))) {
        return None;
    }
    Some(c)
}

/// Degree 3 pairs outside the `(u, v)` chart with explicit maps: `(3X^2+4)(X^3+X)` and
/// the boundary curve `(X^3+1)(4X^3+1)`.
pub fn registered_pairs() -> Vec<(BinarySextic, [(CoveringMap, EllipticModel); 2])> {
    let f = BinarySextic::from_poly(&(&QPoly::from_i64s(&[4, 0, 3]) * &QPoly::from_i64s(&[0, 1, 0, 1]))).expect("degree 5");
    let u1 = CoveringMap::new(QPoly::from_i64s(&[0, 1, 0, 1]), QPoly::one());
    let u2 = CoveringMap::new(QPoly::from_i64s(&[0, 0, 0, 1]), QPoly::from_i64s(&[4, 0, 3]));
    let e = EllipticModel::from_i64s(27, 0, 4, 0).expect("nonsingular");
    let ep = EllipticModel::from_i64s(1, 0, 1, 0).expect("nonsingular");
    let mut out = vec![(f, [(u1, e), (u2, ep)])];
    for b in boundary_pairs() {
        out.push((b.curve, b.covers));
    }
    out
}

/// Elliptic covers of `Y^2 = f(X)` that can be written down directly: `U = X^2` and
/// `U = 1/X^2` for even sextics, the registered pairs, and the degree 3 pairs of the
/// rational `(u, v)` in the fiber whose sextic is proportional to `f` (twisted accordingly).
/// Only covers passing `verify_cover_data` are returned.
pub fn known_covers(f: &BinarySextic) -> Vec<Cover> {
    let mut out = Vec::new();
    let a = |k: usize| f.coeff(k).clone();
    if (1..=5).step_by(2).all(|k| f.coeff(k).is_zero()) {
        if let Ok(m) = EllipticModel::new(a(6), a(4), a(2), a(0)) {
            out.push(Cover { id: "E1".into(), map: CoveringMap::new(QPoly::from_i64s(&[0, 0, 1]), QPoly::one()), model: m });
        }
        if let Ok(m) = EllipticModel::new(a(0), a(2), a(4), a(6)) {
            out.push(Cover { id: "E2".into(), map: CoveringMap::new(QPoly::one(), QPoly::from_i64s(&[0, 0, 1])), model: m });
        }
    }
    let mut pairs: Vec<(Rational, [(CoveringMap, EllipticModel); 2])> = Vec::new();
    for (g, covers) in registered_pairs() {
        if let Some(c) = proportionality(f, &g) {
            pairs.push((c, covers));
        }
    }
    if let Ok(fiber) = e3_fiber_moduli(&classical_invariants(f).moduli_point()) {
        for s in fiber.rational_solutions {
            let Ok(p) = UVParam::new(s.uv.u.clone(), s.uv.v.clone()) else { continue };
            let Ok(g) = nondegenerate_sextic(&p) else { continue };
            let Some(c) = proportionality(f, &g) else { continue };
            if let (Ok((u1, u2)), Ok((e, ep))) = (covering_maps(&p), subcover_models(&p)) {
                pairs.push((c, [(u1, e), (u2, ep)]));
            }
        }
    }
    for (i, (c, covers)) in pairs.into_iter().enumerate() {
        for (name, (map, model)) in ["E", "E'"].iter().zip(covers) {
            let Ok(model) = model.twist(&c) else { continue };
            let id = if i == 0 { name.to_string() } else { format!("{name}#{}", i + 1) };
            out.push(Cover { id, map, model });
        }
    }
    out.retain(|c| verify_cover_data(f, &c.map, &c.model));
    out
}

/// All points with `X = p/q`, `max(|p|, |q|) <= bound`, plus the points at infinity.
pub fn naive_point_search(f: &BinarySextic, bound: u64) -> Vec<CurvePoint> {
    let d = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let dq = from_bigint(d.clone());
    let g: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &dq).to_integer()).collect();
    // f(p/q) is a square iff d * G(p, q) is, where G is the homogenization of d f.
    let h: Vec<BigInt> = g.iter().map(|c| c * &d).collect();
    let small: Option<Vec<i128>> = h.iter().map(|c| c.to_i128()).collect();
    let b = bound as i64;
    let mut pts: Vec<CurvePoint> = (1..=b)
        .into_par_iter()
        .flat_map_iter(|q| {
            let mut out = Vec::new();
            for p in -b..=b {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let val = small.as_ref().and_then(|s| eval_i128(s, p, q)).map(BigInt::from).unwrap_or_else(|| eval_big(&h, p, q));
                if val.is_negative() {
                    continue;
                }
                let r = val.sqrt();
                if &r * &r != val {
                    continue;
                }
                let x = Rational::new(BigInt::from(p), BigInt::from(q));
                let y = Rational::new(r, &d * BigInt::from(q).pow(3));
                if y.is_zero() {
                    out.push(CurvePoint::affine(x, y));
                } else {
                    out.push(CurvePoint::affine(x.clone(), -&y));
                    out.push(CurvePoint::affine(x, y));
                }
            }
            out
        })
        .collect();
    pts.extend(infinite_points(f));
    pts.sort();
    pts
}

fn eval_i128(h: &[i128], p: i64, q: i64) -> Option<i128> {
    let (p, q) = (p as i128, q as i128);
    let mut acc: i128 = 0;
    for (k, c) in h.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let t = c.checked_mul(p.checked_pow(k as u32)?)?.checked_mul(q.checked_pow((6 - k) as u32)?)?;
        acc = acc.checked_add(t)?;
    }
    Some(acc)
}

fn eval_big(h: &[BigInt], p: i64, q: i64) -> BigInt {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    h.iter()
        .enumerate()
        .map(|(k, c)| c * p.pow(k as u32) * q.pow((6 - k) as u32))
        .sum()
}
