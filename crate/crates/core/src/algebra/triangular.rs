//! Zero-dimensional bivariate systems as unions of triangular components.
//!
//! A component is a pair `(m(y), G(x, y))` with `m` squarefree and `G` monic in
//! `x` over the product of fields `Q[y]/(m)`. Its solutions are the `(x, y)`
//! with `m(y) = 0` and `G(x, y) = 0`. Gcds over `Q[y]/(m)` are computed by
//! dynamic evaluation: whenever a leading coefficient turns out to be a zero
//! divisor, the modulus is split and both branches continue separately.

use super::modular::{certify_coprime, primitive_z, resultant_z, to_q, ZBiPoly};
use super::poly::{eval_inner, inner_degree, BiPoly, Poly, QPoly};
use super::rational::{from_bigint, Rational};
use super::roots::rational_roots;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    /// Monic squarefree polynomial in the inner variable.
    pub modulus: QPoly,
    /// Monic in the outer variable, coefficients reduced modulo `modulus`.
    pub factor: BiPoly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

fn reduce(p: &BiPoly, m: &QPoly) -> BiPoly {
    p.map(|c| c.rem(m))
}

/// Monic normalization of `p` over `Q[y]/(m)`, splitting `m` as needed.
/// Components on which `p` vanishes identically are returned with a zero factor.
fn make_monic(p: &BiPoly, m: &QPoly) -> Vec<(QPoly, BiPoly)> {
    let p = reduce(p, m);
    let Some(lc) = p.coeffs().last() else {
        return vec![(m.clone(), BiPoly::zero())];
    };
    let g = lc.gcd(m);
    if g.deg0() > 0 {
        let other = m.div_rem(&g).0.monic();
        let mut out = make_monic(&drop_lead(&p), &g);
        out.extend(make_monic(&p, &other));
        return out;
    }
    let inv = lc.inverse_mod(m).expect("coprime to the modulus");
    vec![(m.clone(), reduce(&p.scale(&inv), m))]
}

fn drop_lead(p: &BiPoly) -> BiPoly {
    let mut c = p.coeffs().to_vec();
    c.pop();
    Poly::new(c)
}

/// Remainder of `a` by a monic `b` over `Q[y]/(m)`.
fn rem_monic(a: &BiPoly, b: &BiPoly, m: &QPoly) -> BiPoly {
    let db = b.deg0();
    let mut r: Vec<QPoly> = a.coeffs().to_vec();
    while r.len() > db {
        let top = r.pop().unwrap().rem(m);
        if top.is_zero() {
            continue;
        }
        let k = r.len() - db;
        for j in 0..db {
            r[k + j] = (&r[k + j] - &(&top * &b.coeffs()[j])).rem(m);
        }
    }
    reduce(&Poly::new(r), m)
}

/// Monic gcd of `a` and `b` over `Q[y]/(m)`, as a list of split components.
pub fn gcd_split(a: &BiPoly, b: &BiPoly, m: &QPoly) -> Vec<(QPoly, BiPoly)> {
    let mut out = Vec::new();
    let mut stack = vec![(m.clone(), reduce(a, m), reduce(b, m))];
    while let Some((m, a, b)) = stack.pop() {
        if b.is_zero() {
            out.extend(make_monic(&a, &m));
            continue;
        }
        let parts = make_monic(&b, &m);
        if parts.len() > 1 {
            for (mi, _) in parts {
                stack.push((mi.clone(), reduce(&a, &mi), reduce(&b, &mi)));
            }
            continue;
        }
        let (m, bm) = parts.into_iter().next().unwrap();
        if bm.is_zero() {
            out.extend(make_monic(&a, &m));
            continue;
        }
        let r = rem_monic(&a, &bm, &m);
        stack.push((m, bm, r));
    }
    out
}

/// Exact quotient of `a` by a monic `b` over `Q[y]/(m)`.
fn div_monic(a: &BiPoly, b: &BiPoly, m: &QPoly) -> BiPoly {
    let db = b.deg0();
    let mut r: Vec<QPoly> = reduce(a, m).into_coeffs();
    if r.len() <= db {
        return BiPoly::zero();
    }
    let mut q = vec![QPoly::zero(); r.len() - db];
    while r.len() > db {
        let top = r.pop().unwrap().rem(m);
        let k = r.len() - db;
        if !top.is_zero() {
            for j in 0..db {
                r[k + j] = (&r[k + j] - &(&top * &b.coeffs()[j])).rem(m);
            }
        }
        q[k] = top;
    }
    Poly::new(q)
}

impl Decomposition {
    /// Common zeros of `eqs` with `modulus(y) = 0`.
    pub fn solve(eqs: &[BiPoly], modulus: &QPoly) -> Self {
        let m = modulus.squarefree_monic();
        if m.deg0() == 0 || eqs.is_empty() {
            return Decomposition::default();
        }
        let mut comps = vec![(m, eqs[0].clone())];
        for e in &eqs[1..] {
            let mut next = Vec::new();
            for (mi, gi) in comps {
                next.extend(gcd_split(&gi, e, &mi));
            }
            comps = next;
        }
        let mut d = Decomposition::default();
        for (mi, gi) in comps {
            d.push_squarefree(mi, gi);
        }
        d
    }

    fn push_squarefree(&mut self, m: QPoly, g: BiPoly) {
        if g.is_zero() {
            // The system is not zero-dimensional over this branch.
            self.components.push(Component { modulus: m, factor: g });
            return;
        }
        let dg = g.derivative();
        for (mi, h) in gcd_split(&g, &dg, &m) {
            let gi = div_monic(&g, &h, &mi);
            if gi.deg0() > 0 {
                self.components.push(Component { modulus: mi, factor: gi });
            }
        }
    }

    /// True when some branch leaves the outer variable unconstrained.
    pub fn is_positive_dimensional(&self) -> bool {
        self.components.iter().any(|c| c.factor.is_zero())
    }

    /// Removes the solutions where `h` vanishes.
    pub fn exclude(&self, h: &BiPoly) -> Self {
        let mut out = Decomposition::default();
        for c in &self.components {
            for (mi, g) in gcd_split(&c.factor, h, &c.modulus) {
                let f = reduce(&c.factor, &mi);
                let q = if g.is_zero() { BiPoly::zero() } else { div_monic(&f, &g, &mi) };
                if q.deg0() > 0 {
                    out.components.push(Component { modulus: mi, factor: q });
                }
            }
        }
        out
    }

    /// Keeps only the solutions where `h` vanishes.
    pub fn restrict(&self, h: &BiPoly) -> Self {
        let mut out = Decomposition::default();
        for c in &self.components {
            for (mi, g) in gcd_split(&c.factor, h, &c.modulus) {
                if g.deg0() > 0 {
                    out.components.push(Component { modulus: mi, factor: g });
                }
            }
        }
        out
    }

    /// Removes solutions whose inner coordinate is a root of `h(y)`.
    pub fn exclude_inner(&self, h: &QPoly) -> Self {
        let mut out = Decomposition::default();
        for c in &self.components {
            let g = c.modulus.gcd(h);
            let m = if g.deg0() > 0 { c.modulus.div_rem(&g).0.monic() } else { c.modulus.clone() };
            if m.deg0() > 0 {
                out.components.push(Component { modulus: m.clone(), factor: reduce(&c.factor, &m) });
            }
        }
        out
    }

    /// Number of distinct solutions over the algebraic closure.
    pub fn count(&self) -> usize {
        self.components.iter().map(|c| c.modulus.deg0() * c.factor.deg0()).sum()
    }

    /// All rational solutions `(x, y)`, sorted.
    pub fn rational_points(&self) -> Vec<(Rational, Rational)> {
        let mut pts = Vec::new();
        for c in &self.components {
            for (y, _) in rational_roots(&c.modulus).unwrap_or_default() {
                let gx = eval_inner(&c.factor, &y);
                for (x, _) in rational_roots(&gx).unwrap_or_default() {
                    pts.push((x, y.clone()));
                }
            }
        }
        pts.sort();
        pts.dedup();
        pts
    }
}

/// Solves a zero-dimensional system: the inner coordinate is bounded by the gcd
/// of the resultants against the simplest equation, then the system is
/// decomposed over that modulus. Fails if a curve of solutions appears.
pub fn solve_system(eqs: &[BiPoly]) -> Result<Decomposition> {
    let mut z: Vec<ZBiPoly> = eqs.iter().filter(|e| !e.is_zero()).map(primitive_z).collect();
    if z.iter().any(|e| e.deg0() == 0 && e.lc().deg0() == 0) {
        return Ok(Decomposition::default());
    }
    if z.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    z.sort_by_key(|e| (e.deg0(), inner_degree(e)));
    let qeqs: Vec<BiPoly> = z.iter().map(to_q).collect();
    let e0 = &z[0];
    let m = if e0.deg0() == 0 {
        e0.lc().map(|x| from_bigint(x.clone()))
    } else {
        let mut first = None;
        let mut m: Option<QPoly> = None;
        for (j, e) in z.iter().enumerate().skip(1) {
            let r = resultant_z(e0, e);
            if r.is_zero() {
                continue;
            }
            if first.is_none() {
                first = Some(j);
                let rest: Vec<ZBiPoly> = z.iter().skip(j + 1).cloned().collect();
                if certify_coprime(&r, e0, &rest) {
                    return Ok(Decomposition::default());
                }
            }
            let rq = r.map(|x| from_bigint(x.clone()));
            m = Some(match m {
                None => rq,
                Some(m) => m.gcd(&rq),
            });
        }
        m.ok_or(Error::PositiveDimensional)?
    };
    if m.deg0() == 0 {
        return Ok(Decomposition::default());
    }
    let d = Decomposition::solve(&qeqs, &m);
    if d.is_positive_dimensional() {
        return Err(Error::PositiveDimensional);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::bivar;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn system_solver() {
        // x^2 + y^2 = 5, xy = 2: four rational points.
        let c = bivar(&[(2, 0, int(1)), (0, 2, int(1)), (0, 0, int(-5))]);
        let h = bivar(&[(1, 1, int(1)), (0, 0, int(-2))]);
        let d = solve_system(&[c.clone(), h]).unwrap();
        assert_eq!(d.count(), 4);
        assert_eq!(d.rational_points().len(), 4);
        let far = bivar(&[(1, 1, int(1)), (0, 0, int(-7))]);
        assert_eq!(solve_system(&[c.clone(), far]).unwrap().count(), 4);
        let line = bivar(&[(1, 0, int(1)), (0, 0, int(-9))]);
        assert_eq!(solve_system(&[c.clone(), line.clone(), bivar(&[(0, 1, int(1))])]).unwrap().count(), 0);
        assert!(solve_system(&[c.clone(), c]).is_err());
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 - 1 = 0 and x - y = 0: two irrational points (±1/√2, ±1/√2).
        let c = bivar(&[(2, 0, int(1)), (0, 2, int(1)), (0, 0, int(-1))]);
        let l = bivar(&[(1, 0, int(1)), (0, 1, int(-1))]);
        let m = QPoly::new(vec![rat(-1, 2), int(0), int(1)]);
        let d = Decomposition::solve(&[c, l], &m);
        assert_eq!(d.count(), 2);
        assert!(d.rational_points().is_empty());
    }

    #[test]
    fn splitting_modulus() {
        // y (y - 1) as the modulus, equations x y - 1 and x^2 - 1.
        // At y = 0 the first equation has no solution, at y = 1 it forces x = 1.
        let e1 = bivar(&[(1, 1, int(1)), (0, 0, int(-1))]);
        let e2 = bivar(&[(2, 0, int(1)), (0, 0, int(-1))]);
        let m = QPoly::from_i64s(&[0, -1, 1]);
        let d = Decomposition::solve(&[e1, e2], &m);
        assert_eq!(d.count(), 1);
        assert_eq!(d.rational_points(), vec![(int(1), int(1))]);
    }

    #[test]
    fn exclusion() {
        // (x - 1)(x - 2) with y^2 - 2; exclude x = 2.
        let e = bivar(&[(2, 0, int(1)), (1, 0, int(-3)), (0, 0, int(2))]);
        let m = QPoly::from_i64s(&[-2, 0, 1]);
        let d = Decomposition::solve(&[e], &m);
        assert_eq!(d.count(), 4);
        let h = bivar(&[(1, 0, int(1)), (0, 0, int(-2))]);
        assert_eq!(d.exclude(&h).count(), 2);
        assert_eq!(d.restrict(&h).count(), 2);
    }
}
