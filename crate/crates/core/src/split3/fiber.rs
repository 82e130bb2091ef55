//! Fibers of theta: all `(u, v)` whose sextic has a given moduli point.
//!
//! The condition `(J2(u,v) : ... : J10(u,v)) = (P2 : ... : P10)` is written as
//! polynomial equations in `u, v`, the inner variable is eliminated by
//! resultants and the system is then solved over `Q[v]/(m(v))` by dynamic
//! evaluation. Solutions with `Delta(u, v) = 0` are discarded.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{boundary_match, degenerate_invariants, jacobian_det_locus, r_factor_poly, UVParam};
use crate::algebra::modular::{certify_coprime, primitive_part, primitive_z, resultant_z, to_q, ZBiPoly, ZPoly};
use crate::algebra::poly::{inner_degree, BiPoly, Poly, QPoly};
use crate::algebra::rational::{self, from_bigint, int, rat, Rational};
use crate::algebra::ring::Ring;
use crate::algebra::roots::rational_roots;
use crate::algebra::triangular::Decomposition;
use crate::error::{Error, Result};
use crate::igusa::{uv_invariants, AbsoluteInvariants, ModuliPoint, HALF_WEIGHTS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSolution {
    #[serde(flatten)]
    pub uv: UVParam,
    /// On the branch curve of theta (`jacobian_det_locus = 0`).
    pub on_x: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateReport {
    /// Monic polynomial whose roots are the matching `w = c^2`.
    #[serde(serialize_with = "ser_w")]
    pub w_poly: QPoly,
    #[serde(with = "rational::vec_as_string")]
    pub rational_w: Vec<Rational>,
    #[serde(with = "rational::vec_as_string")]
    pub rational_c: Vec<Rational>,
}

fn ser_w<S: serde::Serializer>(p: &QPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_expr("w"))
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub point: ModuliPoint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<AbsoluteInvariants>,
    pub rational_solutions: Vec<FiberSolution>,
    /// Number of `(u, v)` over the algebraic closure.
    pub count: usize,
    pub degenerate: Option<DegenerateReport>,
    pub boundary: Option<&'static str>,
    pub e3: usize,
    /// True when emptiness was certified by a single modular gcd.
    pub certified_mod_p: bool,
}

pub fn e3_fiber(p: &AbsoluteInvariants) -> Result<FiberReport> {
    let mut r = e3_fiber_moduli(&p.moduli_point())?;
    r.invariants = Some(p.clone());
    Ok(r)
}

pub fn e3_fiber_moduli(p: &ModuliPoint) -> Result<FiberReport> {
    if p.is_zero() {
        return Err(Error::Invalid("moduli point is zero".into()));
    }
    let solved = solve_fiber(&fiber_equations_z(p))?;
    let degenerate = degenerate_match(p);
    let boundary = boundary_match(p).map(|b| b.name);
    let e3 = if solved.count > 0 {
        solved.count
    } else if degenerate.is_some() || boundary.is_some() {
        1
    } else {
        0
    };
    let rational_solutions = solved
        .points
        .into_iter()
        .map(|(u, v)| FiberSolution { on_x: Ring::is_zero(&jacobian_det_locus(&u, &v)), uv: UVParam { u, v } })
        .collect();
    Ok(FiberReport {
        point: p.clone(),
        invariants: p.absolute().ok(),
        rational_solutions,
        count: solved.count,
        degenerate,
        boundary,
        e3,
        certified_mod_p: solved.certified_mod_p,
    })
}

/// Equations of `(J(u,v)) = P` in weighted projective space, integral and with
/// powers of `v` removed. With `a` the first index where `P_a != 0`, they are
/// `J_b = 0` for `b < a` and the pair relations among indices `>= a`.
pub fn fiber_equations(p: &ModuliPoint) -> Vec<BiPoly> {
    fiber_equations_z(p).iter().map(to_q).collect()
}

/// `J_k = Z_k / d_k` with `Z_k` integral, and the powers `Z_k^e` the pair relations use.
struct IntegralInvariants {
    den: [BigInt; 4],
    pows: Vec<Vec<ZBiPoly>>,
}

fn integral_invariants() -> &'static IntegralInvariants {
    static CELL: OnceLock<IntegralInvariants> = OnceLock::new();
    CELL.get_or_init(|| {
        let j = uv_invariants();
        let mut den: [BigInt; 4] = Default::default();
        let mut pows = Vec::new();
        for k in 0..4 {
            let mut l = <BigInt as One>::one();
            for c in j[k].coeffs() {
                for r in c.coeffs() {
                    l = l.lcm(r.denom());
                }
            }
            let z: ZBiPoly = j[k].map(|c| c.map(|r| r.numer() * (&l / r.denom())));
            // Highest power of Z_k occurring in a pair relation.
            let top = (0..4).filter(|&l| l != k).map(|l| HALF_WEIGHTS[l]).max().unwrap_or(1);
            let mut row = vec![ZBiPoly::one(), z.clone()];
            for e in 2..=top as usize {
                let next = &row[e - 1] * &z;
                row.push(next);
            }
            den[k] = l;
            pows.push(row);
        }
        IntegralInvariants { den, pows }
    })
}

fn fiber_equations_z(p: &ModuliPoint) -> Vec<ZBiPoly> {
    let inv = integral_invariants();
    let a = p.0.iter().position(|c| !Ring::is_zero(c)).expect("nonzero point");
    let mut out: Vec<ZBiPoly> = (0..a).map(|b| inv.pows[b][1].clone()).collect();
    for k in a..4 {
        for l in k + 1..4 {
            let (wk, wl) = (HALF_WEIGHTS[k], HALF_WEIGHTS[l]);
            // J_k^(w_l) P_l^(w_k) - J_l^(w_k) P_k^(w_l), cleared of denominators.
            let alpha = Ring::pow(&p.0[l], wk) / from_bigint(Ring::pow(&inv.den[k], wl));
            let beta = Ring::pow(&p.0[k], wl) / from_bigint(Ring::pow(&inv.den[l], wk));
            let m = alpha.denom().lcm(beta.denom());
            let ca = alpha.numer() * (&m / alpha.denom());
            let cb = beta.numer() * (&m / beta.denom());
            let lhs = inv.pows[k][wl as usize].map(|c| c.scale(&ca));
            let rhs = inv.pows[l][wk as usize].map(|c| c.scale(&cb));
            out.push(&lhs - &rhs);
        }
    }
    out.iter().map(|e| strip_v(&primitive_part(e))).filter(|e| !e.is_zero()).collect()
}

/// Scales to integer coefficients with content 1 and a positive leading term.
pub fn bi_primitive(p: &BiPoly) -> BiPoly {
    to_q(&primitive_z(p))
}

fn strip_v<R: Ring>(p: &Poly<Poly<R>>) -> Poly<Poly<R>> {
    let k = p.coeffs().iter().filter(|c| !c.is_zero()).map(|c| c.valuation()).min().unwrap_or(0);
    if k == 0 {
        p.clone()
    } else {
        p.map(|c| c.unshift(k))
    }
}

struct Solved {
    count: usize,
    points: Vec<(Rational, Rational)>,
    certified_mod_p: bool,
}

impl Solved {
    fn empty(certified_mod_p: bool) -> Self {
        Solved { count: 0, points: Vec::new(), certified_mod_p }
    }
}

/// Removes the factors `v` and `v - 27` (the ghost components `Delta = 0`).
fn strip_ghost_roots(a: &ZPoly) -> ZPoly {
    let mut a = a.unshift(a.valuation());
    while let Some(q) = div_linear(&a, 27) {
        a = q;
    }
    a
}

/// `a / (v - r)` if exact.
fn div_linear(a: &ZPoly, r: i64) -> Option<ZPoly> {
    let n = a.coeffs().len();
    if n < 2 {
        return None;
    }
    let r = BigInt::from(r);
    let mut q = vec![<BigInt as Zero>::zero(); n - 1];
    let mut acc = <BigInt as Zero>::zero();
    for i in (1..n).rev() {
        acc = &acc * &r + &a.coeffs()[i];
        q[i - 1] = acc.clone();
    }
    let rem = &acc * &r + &a.coeffs()[0];
    Zero::is_zero(&rem).then(|| Poly::new(q))
}

fn solve_fiber(eqs: &[ZBiPoly]) -> Result<Solved> {
    let mut eqs: Vec<ZBiPoly> = eqs.to_vec();
    // A nonzero constant equation has no solutions at all.
    if eqs.iter().any(|e| e.deg0() == 0 && e.lc().deg0() == 0) {
        return Ok(Solved::empty(false));
    }
    eqs.sort_by_key(|e| (e.deg0(), inner_degree(e)));
    let qeqs: Vec<BiPoly> = eqs.iter().map(to_q).collect();
    let e0 = &eqs[0];
    if e0.deg0() == 0 {
        // Equation in v alone: its roots bound the fiber directly.
        let m = strip_ghost_roots(&e0.lc());
        return solve_with_modulus(&qeqs, &m.map(|x| from_bigint(x.clone())), false);
    }
    // First nonzero eliminant against e0.
    let mut a = None;
    let mut used = 0;
    for (j, e) in eqs.iter().enumerate().skip(1) {
        let r = resultant_z(e0, e);
        if !r.is_zero() {
            a = Some(r);
            used = j;
            break;
        }
    }
    let Some(a) = a else {
        return Err(Error::PositiveDimensional);
    };
    let a = strip_ghost_roots(&a);
    if a.deg0() == 0 {
        return Ok(Solved::empty(false));
    }
    let rest: Vec<ZBiPoly> = eqs.iter().enumerate().filter(|&(j, _)| j != 0 && j != used).map(|(_, e)| e.clone()).collect();
    if certify_coprime(&a, e0, &rest) {
        return Ok(Solved::empty(true));
    }
    let mut m: QPoly = a.map(|x| from_bigint(x.clone()));
    for e in &rest {
        let b = resultant_z(e0, e);
        if !b.is_zero() {
            m = m.gcd(&b.map(|x| from_bigint(x.clone())));
        }
        if m.deg0() == 0 {
            return Ok(Solved::empty(false));
        }
    }
    solve_with_modulus(&qeqs, &m, false)
}

fn solve_with_modulus(eqs: &[BiPoly], m: &QPoly, certified_mod_p: bool) -> Result<Solved> {
    if m.deg0() == 0 {
        return Ok(Solved { count: 0, points: Vec::new(), certified_mod_p });
    }
    let ghosts = QPoly::from_i64s(&[0, -27, 1]);
    let d = Decomposition::solve(eqs, m).exclude_inner(&ghosts);
    if d.is_positive_dimensional() {
        return Err(Error::PositiveDimensional);
    }
    let d = d.exclude(&r_factor_poly());
    let count = d.count();
    if count > 4 {
        return Err(Error::FiberOverflow(count));
    }
    let points = d.rational_points();
    Ok(Solved { count, points, certified_mod_p })
}

/// Matches against the degenerate family `Y^2 = (3X^2 + 4)(X^3 + X + c)`, `w = c^2`.
pub fn degenerate_match(p: &ModuliPoint) -> Option<DegenerateReport> {
    let jw = degenerate_invariants();
    let a = p.0.iter().position(|c| !Ring::is_zero(c))?;
    let mut eqs: Vec<QPoly> = (0..a).map(|b| jw[b].clone()).collect();
    for k in a..4 {
        for l in k + 1..4 {
            let (wk, wl) = (HALF_WEIGHTS[k], HALF_WEIGHTS[l]);
            let lhs = jw[k].pow(wl).scale(&Ring::pow(&p.0[l], wk));
            let rhs = jw[l].pow(wk).scale(&Ring::pow(&p.0[k], wl));
            eqs.push(&lhs - &rhs);
        }
    }
    let mut g = QPoly::zero();
    for e in &eqs {
        g = g.gcd(e);
    }
    if g.is_zero() {
        return None;
    }
    // w = -4/27 is the singular member.
    let bad = QPoly::new(vec![rat(4, 27), int(1)]);
    while let Some(q) = g.div_exact_poly(&bad) {
        g = q;
    }
    if g.deg0() == 0 {
        return None;
    }
    let g = g.squarefree_monic();
    let rational_w: Vec<Rational> = rational_roots(&g).unwrap_or_default().into_iter().map(|(w, _)| w).collect();
    let mut rational_c = Vec::new();
    for w in &rational_w {
        if let Some(c) = rational::is_rational_square(w) {
            if !Ring::is_zero(&c) {
                rational_c.push(-c.clone());
            }
            rational_c.push(c);
        }
    }
    rational_c.sort();
    Some(DegenerateReport { w_poly: g, rational_w, rational_c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::igusa::{classical_invariants, curve_from_equation};

    fn fiber_of(curve: &str) -> FiberReport {
        let f = curve_from_equation(curve).unwrap();
        e3_fiber_moduli(&classical_invariants(&f).moduli_point()).unwrap()
    }

    #[test]
    fn p6_fiber() {
        let r = fiber_of("11x^6+11x^3-4");
        assert_eq!(r.count, 1);
        assert_eq!(r.e3, 1);
        assert_eq!(r.rational_solutions.len(), 1);
        assert_eq!(r.rational_solutions[0].uv, UVParam::from_i64(20, 16).unwrap());
        assert!(r.rational_solutions[0].on_x);
    }

    #[test]
    fn p2_is_degenerate() {
        let r = fiber_of("49x^5+49x^3+12x");
        assert_eq!(r.count, 0);
        assert_eq!(r.e3, 1);
        let d = r.degenerate.unwrap();
        assert_eq!(d.rational_w, vec![int(0)]);
    }

    #[test]
    fn generic_curve_has_empty_fiber() {
        let r = fiber_of("x^6 + 2x^5 - x^3 + 3x + 5");
        assert_eq!(r.e3, 0);
        assert!(r.certified_mod_p);
    }
}
