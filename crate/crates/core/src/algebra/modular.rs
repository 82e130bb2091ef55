//! Word-size prime fields and Chinese remaindering, used to compute integer
//! resultants without rational arithmetic in the inner loop.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{BiPoly, Poly};
use super::rational::from_bigint;
use super::resultant::resultant_degree_bound;

pub type ZPoly = Poly<BigInt>;
pub type ZBiPoly = Poly<ZPoly>;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in BASES {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut n = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

pub fn reduce(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn reduce_poly(c: &ZPoly, p: u64) -> Vec<u64> {
    c.coeffs().iter().map(|x| reduce(x, p)).collect()
}

fn eval(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| addm(mulm(acc, x, p), a, p))
}

fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut d = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            m.swap(piv, col);
            d = subm(0, d, p);
        }
        d = mulm(d, m[col][col], p);
        let inv = invm(m[col][col], p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let f = mulm(m[r][col], inv, p);
            for k in col..n {
                let t = mulm(f, m[col][k], p);
                m[r][k] = subm(m[r][k], t, p);
            }
        }
    }
    d
}

/// Sylvester determinant of `a` and `b`, coefficient lists from degree 0 up.
fn sylvester_det(a: &[u64], b: &[u64], p: u64) -> u64 {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return 1;
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![0; size];
        for (j, &c) in a.iter().rev().enumerate() {
            r[i + j] = c;
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![0; size];
        for (j, &c) in b.iter().rev().enumerate() {
            r[i + j] = c;
        }
        rows.push(r);
    }
    det(rows, p)
}

/// Newton interpolation at the nodes `0, 1, ..., ys.len() - 1`.
fn interpolate(ys: &[u64], p: u64) -> Vec<u64> {
    let n = ys.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        let inv = invm(j as u64 % p, p);
        for i in (j..n).rev() {
            c[i] = mulm(subm(c[i], c[i - 1], p), inv, p);
        }
    }
    let mut acc: Vec<u64> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        // acc = acc * (x - i) + c[i]
        let mut next = vec![0u64; acc.len() + 1];
        for (k, &a) in acc.iter().enumerate() {
            next[k + 1] = addm(next[k + 1], a, p);
            next[k] = subm(next[k], mulm(a, i as u64 % p, p), p);
        }
        next[0] = addm(next[0], c[i], p);
        acc = next;
    }
    acc
}

/// `Res_outer(a, b)` modulo `p`, with the formal outer degrees of `a` and `b`
/// over Z, so the result is the reduction of the integer resultant.
pub fn resultant_mod(a: &ZBiPoly, b: &ZBiPoly, p: u64) -> Vec<u64> {
    let bound = resultant_degree_bound(a, b);
    let ar: Vec<Vec<u64>> = a.coeffs().iter().map(|c| reduce_poly(c, p)).collect();
    let br: Vec<Vec<u64>> = b.coeffs().iter().map(|c| reduce_poly(c, p)).collect();
    let ys: Vec<u64> = (0..=bound as u64)
        .map(|x| {
            let ax: Vec<u64> = ar.iter().map(|c| eval(c, x, p)).collect();
            let bx: Vec<u64> = br.iter().map(|c| eval(c, x, p)).collect();
            sylvester_det(&ax, &bx, p)
        })
        .collect();
    interpolate(&ys, p)
}

fn l1_bits(a: &ZBiPoly) -> u64 {
    let s: BigInt = a.coeffs().iter().flat_map(|c| c.coeffs().iter()).map(|x| x.abs()).sum();
    s.bits()
}

/// Exact integer resultant eliminating the outer variable, by Chinese remaindering
/// past the bound `|Res| <= L1(a)^deg(b) L1(b)^deg(a)` on every coefficient.
pub fn resultant_z(a: &ZBiPoly, b: &ZBiPoly) -> ZPoly {
    let need = a.deg0() as u64 * l1_bits(b) + b.deg0() as u64 * l1_bits(a) + 2;
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    for &p in primes() {
        if modulus.bits() > need {
            break;
        }
        let r = resultant_mod(a, b, p);
        if acc.len() < r.len() {
            acc.resize(r.len(), BigInt::zero());
        }
        let minv = invm(reduce(&modulus, p), p);
        for (i, x) in acc.iter_mut().enumerate() {
            let ri = r.get(i).copied().unwrap_or(0);
            let t = mulm(subm(ri, reduce(x, p), p), minv, p);
            *x += &modulus * t;
        }
        modulus *= p;
    }
    assert!(modulus.bits() > need, "prime table exhausted");
    let half = &modulus >> 1;
    Poly::new(acc.into_iter().map(|x| if x > half { x - &modulus } else { x }).collect())
}

/// Integer multiple of `p` with content 1 and positive leading coefficient.
pub fn primitive_z(p: &BiPoly) -> ZBiPoly {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        for r in c.coeffs() {
            l = l.lcm(r.denom());
        }
    }
    let z: ZBiPoly = p.map(|c| c.map(|r| r.numer() * (&l / r.denom())));
    primitive_part(&z)
}

pub fn primitive_part(p: &ZBiPoly) -> ZBiPoly {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        for r in c.coeffs() {
            g = g.gcd(r);
        }
    }
    if g.is_zero() {
        return ZBiPoly::zero();
    }
    if p.lc().lc().is_negative() {
        g = -g;
    }
    p.map(|c| c.map(|r| r / &g))
}

pub fn to_q(p: &ZBiPoly) -> BiPoly {
    p.map(|c| c.map(|x| from_bigint(x.clone())))
}

/// True if `gcd(a, Res_outer(e0, e)) = 1` modulo a prime not dividing `lc(a)`, for
/// some `e` in `rest`. When `a` is itself a multiple of an eliminant of the
/// system, any common zero has a minimal polynomial in the inner variable that
/// divides `a` and every such resultant; its reduction keeps its degree, so a
/// trivial gcd proves the system has no zeros with `a(y) = 0`.
pub fn certify_coprime(a: &ZPoly, e0: &ZBiPoly, rest: &[ZBiPoly]) -> bool {
    for &p in &primes()[..2] {
        if reduce(&a.lc(), p) == 0 {
            continue;
        }
        let ap = ModPoly::from_z(a, p);
        for e in rest {
            let bp = ModPoly::new(p, resultant_mod(e0, e, p));
            if !bp.is_zero() && ap.gcd(&bp).degree() == Some(0) {
                return true;
            }
        }
    }
    false
}

/// Coefficients of a polynomial over F_p, for gcd tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_z(a: &ZPoly, p: u64) -> Self {
        Self::new(p, reduce_poly(a, p))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn rem(&self, d: &ModPoly) -> ModPoly {
        let p = self.p;
        let mut r = self.c.clone();
        let dl = d.c.len();
        let inv = invm(*d.c.last().expect("nonzero divisor"), p);
        while r.len() >= dl {
            let f = mulm(*r.last().unwrap(), inv, p);
            let off = r.len() - dl;
            for (k, &dc) in d.c.iter().enumerate() {
                r[off + k] = subm(r[off + k], mulm(f, dc, p), p);
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        ModPoly::new(p, r)
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::bivar;
    use crate::algebra::resultant::{poly_resultant, Var};
    use crate::algebra::rational::from_bigint;

    #[test]
    fn primality() {
        assert!(is_prime(2305843009213693951));
        assert!(!is_prime(2305843009213693953));
        assert!(!is_prime(3215031751));
        assert_eq!(primes()[0] % 2, 1);
        assert!(primes().windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn crt_resultant_matches_rational() {
        let z = |t: &[(usize, usize, i64)]| -> ZBiPoly {
            bivar(&t.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))).collect::<Vec<_>>())
        };
        let a = z(&[(2, 3, 123456789), (1, 1, -7), (0, 0, 99999), (0, 4, 3)]);
        let b = z(&[(3, 0, 5), (2, 2, -314159265), (1, 5, 11), (0, 1, 2718281828)]);
        let exact = resultant_z(&a, &b);
        let q = |p: &ZBiPoly| p.map(|c| c.map(|x| from_bigint(x.clone())));
        let r = poly_resultant(&q(&a), &q(&b), Var::Outer).unwrap();
        assert_eq!(exact.map(|x| from_bigint(x.clone())), r);
    }

    #[test]
    fn gcd_mod_p() {
        let p = primes()[0];
        let f = ModPoly::new(p, vec![p - 1, 0, 1]);
        let g = ModPoly::new(p, vec![1, 1]);
        assert_eq!(f.gcd(&g).degree(), Some(1));
        let h = ModPoly::new(p, vec![2, 1]);
        assert_eq!(f.gcd(&h).degree(), Some(0));
    }
}
