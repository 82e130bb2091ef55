//! Squarefree parts, primitive normalization and complete rational root finding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{Poly, QPoly};
use super::rational::{from_bigint, Rational};
use crate::error::{Error, Result};

/// Integer polynomial with coprime coefficients and positive leading coefficient.
pub fn primitive_integer(p: &QPoly) -> Poly<BigInt> {
    if p.is_zero() {
        return Poly::zero();
    }
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let d = g * sign;
    Poly::new(ints.into_iter().map(|c| c / &d).collect())
}

/// `primitive_integer` viewed back over Q.
pub fn primitive(p: &QPoly) -> QPoly {
    primitive_integer(p).map(|c| from_bigint(c.clone()))
}

/// Product of the distinct irreducible factors, primitive with positive leading coefficient.
pub fn squarefree_part(p: &QPoly) -> Result<QPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(primitive(&p.squarefree_monic()))
}

/// Number of distinct roots over the algebraic closure.
pub fn distinct_root_count(p: &QPoly) -> Result<usize> {
    Ok(squarefree_part(p)?.deg0())
}

/// All rational roots with multiplicities, in increasing order.
///
/// Rational roots of `sum s_i x^i` correspond to integer roots `y = s_n x` of the
/// monic integer polynomial `s_n^(n-1) * S(y / s_n)`. Those are found by lifting
/// simple roots modulo a small prime of good reduction (Hensel/Newton) past
/// twice the bound `|Q(0)|`, then checked exactly.
pub fn rational_roots(p: &QPoly) -> Result<Vec<(Rational, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let full = primitive_integer(p);
    let mut out = Vec::new();
    let v = full.valuation();
    if v > 0 {
        out.push((Rational::zero(), v as u32));
    }
    let base = full.unshift(v);
    if base.deg0() == 0 {
        return Ok(out);
    }
    let s = primitive_integer(&base.map(|c| from_bigint(c.clone())).squarefree_monic());
    for y in integer_roots_of_monic_transform(&s) {
        let a = s.lc();
        let x = Rational::new(y, a);
        let lin = Poly::new(vec![-BigInt::from(x.numer().clone()), x.denom().clone()]);
        let mut m = 0u32;
        let mut rest = base.clone();
        while let Some(q) = rest.div_exact_poly(&lin) {
            rest = q;
            m += 1;
        }
        debug_assert!(m > 0);
        out.push((x, m));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Integer roots `y` of `Q(y) = a^(n-1) S(y/a)`, for squarefree `S` with `S(0) != 0`.
fn integer_roots_of_monic_transform(s: &Poly<BigInt>) -> Vec<BigInt> {
    let n = s.deg0();
    let a = s.lc();
    // Coefficients of Q: q_i = s_i a^(n-1-i), q_n = 1.
    let mut q: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..n {
        q.push(s.coeff(i) * num_traits::pow(a.clone(), n - 1 - i));
    }
    q.push(BigInt::one());
    let q = Poly::new(q);
    if n == 1 {
        return vec![-q.coeff(0)];
    }
    let bound = q.coeff(0).abs();
    let ell = good_prime(&q);
    let roots_mod = small_roots(&q, ell);
    let target = &bound * 2u32 + 1u32;
    let dq = q.derivative();
    let mut found = Vec::new();
    for r in roots_mod {
        let mut y = BigInt::from(r);
        let mut modulus = BigInt::from(ell);
        while modulus < target {
            modulus = &modulus * &modulus;
            let fy = q.eval(&y).mod_floor(&modulus);
            let dy = dq.eval(&y).mod_floor(&modulus);
            let inv = mod_inverse(&dy, &modulus).expect("simple root lifts");
            y = (&y - fy * inv).mod_floor(&modulus);
        }
        let half = &modulus / 2u32;
        if y > half {
            y -= &modulus;
        }
        if q.eval(&y).is_zero() {
            found.push(y);
        }
    }
    found
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// First odd prime modulo which `q` (monic, squarefree over Q) stays squarefree.
fn good_prime(q: &Poly<BigInt>) -> u64 {
    for ell in small_primes() {
        let qm = reduce_small(q, ell);
        let dm = derivative_small(&qm, ell);
        if degree_small(&gcd_small(qm, dm, ell)) == Some(0) {
            return ell;
        }
    }
    unreachable!("a squarefree polynomial has good primes")
}

fn small_roots(q: &Poly<BigInt>, ell: u64) -> Vec<u64> {
    let qm = reduce_small(q, ell);
    (0..ell).filter(|&r| eval_small(&qm, r, ell) == 0).collect()
}

fn reduce_small(q: &Poly<BigInt>, ell: u64) -> Vec<u64> {
    let m = BigInt::from(ell);
    q.coeffs().iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect()
}

fn eval_small(q: &[u64], x: u64, ell: u64) -> u64 {
    q.iter().rev().fold(0u64, |acc, &c| ((acc as u128 * x as u128 + c as u128) % ell as u128) as u64)
}

fn derivative_small(q: &[u64], ell: u64) -> Vec<u64> {
    q.iter().enumerate().skip(1).map(|(i, &c)| ((i as u128 * c as u128) % ell as u128) as u64).collect()
}

fn degree_small(q: &[u64]) -> Option<usize> {
    q.iter().rposition(|&c| c != 0)
}

fn pow_small(mut b: u64, mut e: u64, ell: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % ell as u128) as u64;
        }
        b = ((b as u128 * b as u128) % ell as u128) as u64;
        e >>= 1;
    }
    acc
}

fn gcd_small(mut a: Vec<u64>, mut b: Vec<u64>, ell: u64) -> Vec<u64> {
    loop {
        let Some(db) = degree_small(&b) else { return a };
        b.truncate(db + 1);
        let inv = pow_small(b[db], ell - 2, ell);
        while let Some(da) = degree_small(&a) {
            if da < db {
                break;
            }
            let c = ((a[da] as u128 * inv as u128) % ell as u128) as u64;
            for j in 0..=db {
                let t = ((c as u128 * b[j] as u128) % ell as u128) as u64;
                a[da - db + j] = (a[da - db + j] + ell - t) % ell;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2)
        let p = &(&qp(&[-1, 1]) * &qp(&[-1, 1])) * &qp(&[2, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), &qp(&[-1, 1]) * &qp(&[2, 1]));
        assert_eq!(squarefree_part(&qp(&[1, 0, 1])).unwrap(), qp(&[1, 0, 1]));
        assert_eq!(squarefree_part(&qp(&[1, 0, 0, -2, 0, 0, 1])).unwrap(), qp(&[-1, 0, 0, 1]));
        assert!(squarefree_part(&qp(&[])).is_err());
    }

    #[test]
    fn root_examples() {
        assert!(rational_roots(&qp(&[2401, -136200, 490000])).unwrap().is_empty());
        let p = &qp(&[-81, 196]) * &qp(&[-12, 49]);
        assert_eq!(rational_roots(&p).unwrap(), vec![(rat(12, 49), 1), (rat(81, 196), 1)]);
        assert_eq!(rational_roots(&qp(&[0, 0, 0, 1])).unwrap(), vec![(int(0), 3)]);
    }

    #[test]
    fn roots_with_large_coefficients() {
        // (123456789 x - 987654321)^2 (x^2 + 1) (7x + 1000000007)
        let a = qp(&[-987654321, 123456789]);
        let p = &(&(&a * &a) * &qp(&[1, 0, 1])) * &qp(&[1000000007, 7]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r, vec![(rat(-1000000007, 7), 1), (rat(987654321, 123456789), 2)]);
    }
}
