use proptest::prelude::*;

use g2split::algebra::poly::QPoly;
use g2split::algebra::rational::{int, rat, Rational};
use g2split::algebra::resultant::resultant_q;
use g2split::aut::{classify, family_invariants, family_sextic, t_from_invariants, Family};
use g2split::igusa::{classical_invariants, moduli_equal, BinarySextic};
use g2split::ratpoints::{
    fiber_preimage, naive_point_search, rank0_rational_points, to_short_weierstrass, torsion_subgroup, Cover,
    CurvePoint, EllipticPoint, RankCertificate,
};
use g2split::split3::{beta, covering_maps, subcover_models, theta, verify_cover, CoveringMap, EllipticModel, UVParam};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|cs| QPoly::from_i64s(&cs))
}

fn sextic() -> impl Strategy<Value = BinarySextic> {
    (prop::collection::vec(-9i64..=9, 6), 1i64..=9)
        .prop_map(|(mut cs, lead)| {
            cs.push(lead);
            BinarySextic::from_i64s(cs.try_into().unwrap())
        })
        .prop_filter("squarefree", |f| f.is_squarefree())
}

fn mobius() -> impl Strategy<Value = [Rational; 4]> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter("invertible", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| [int(a), int(b), int(c), int(d)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resultant_antisymmetry(p in int_poly(4), q in int_poly(4)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let sign = if p.deg0() * q.deg0() % 2 == 1 { int(-1) } else { int(1) };
        prop_assert_eq!(resultant_q(&p, &q).unwrap(), sign * resultant_q(&q, &p).unwrap());
    }

    #[test]
    fn resultant_vanishes_on_common_root(p in int_poly(3), q in int_poly(3), r in -5i64..=5) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let lin = QPoly::from_i64s(&[-r, 1]);
        prop_assert_eq!(resultant_q(&(&p * &lin), &(&q * &lin)).unwrap(), int(0));
    }

    #[test]
    fn invariants_are_gl2_invariant(f in sextic(), m in mobius()) {
        let g = f.substitute(&m[0], &m[1], &m[2], &m[3]);
        prop_assert!(moduli_equal(&classical_invariants(&f).moduli_point(), &classical_invariants(&g).moduli_point()));
    }

    #[test]
    fn family_round_trip(t in small_rat(), d12 in any::<bool>()) {
        let fam = if d12 { Family::D12 } else { Family::D8 };
        if let Ok(p) = family_invariants(fam, &t) {
            prop_assert_eq!(t_from_invariants(fam, &p).unwrap(), t.clone());
            prop_assert_eq!(g2split::igusa::invariants_of(&family_sextic(fam, &t)).unwrap(), p);
        }
    }

    #[test]
    fn beta_is_an_involution_preserving_theta(u in small_rat(), v in small_rat()) {
        let Ok(p) = UVParam::new(u, v) else { return Ok(()) };
        let Ok(b) = beta(&p) else { return Ok(()) };
        if let Ok(bb) = beta(&b) {
            prop_assert_eq!(bb, p.clone());
        }
        if let (Ok(t1), Ok(t2)) = (theta(&p), theta(&b)) {
            prop_assert_eq!(t1, t2);
        }
    }

    #[test]
    fn covers_verify(u in small_rat(), v in small_rat()) {
        let Ok(p) = UVParam::new(u, v) else { return Ok(()) };
        if covering_maps(&p).is_ok() && subcover_models(&p).is_ok() {
            prop_assert!(verify_cover(&p).unwrap());
        }
    }

    #[test]
    fn fiber_preimages_map_back(q in small_rat()) {
        let f = BinarySextic::from_i64s([1, 0, 0, 5, 0, 0, 4]);
        let u = CoveringMap::new(QPoly::from_i64s(&[0, 0, 1]), QPoly::from_i64s(&[1, 0, 0, 1]));
        for p in fiber_preimage(&u, Some(&q), &f).unwrap() {
            prop_assert!(p.lies_on(&f));
            match p {
                CurvePoint::Affine { x, .. } => prop_assert_eq!(u.eval(&x), Some(q.clone())),
                CurvePoint::Infinity(_) => prop_assert_eq!(u.eval_infinity(), Some(q.clone())),
            }
        }
    }

    #[test]
    fn short_weierstrass_round_trip(c3 in small_rat(), c2 in small_rat(), c1 in small_rat(), c0 in small_rat(), x in small_rat()) {
        let Ok(e) = EllipticModel::new(c3, c2, c1, c0) else { return Ok(()) };
        let sw = to_short_weierstrass(&e).unwrap();
        prop_assert_eq!(sw.j_invariant(), g2split::split3::j_invariant(&e).unwrap());
        let y = int(7);
        let p = EllipticPoint::affine(x, y);
        prop_assert_eq!(sw.from_short(&sw.to_short(&p)), p);
    }

    #[test]
    fn torsion_is_a_group(a in -30i64..=30, b in -30i64..=30) {
        let Ok(e) = EllipticModel::from_i64s(1, 0, a, b) else { return Ok(()) };
        let t = torsion_subgroup(&e).unwrap();
        prop_assert!([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16].contains(&t.order));
        let sw = to_short_weierstrass(&e).unwrap();
        for p in &t.points {
            if let EllipticPoint::Affine { x, y } = p {
                prop_assert!(e.contains(x, y));
            }
            prop_assert!(t.contains(&sw.neg(p)));
            for q in &t.points {
                prop_assert!(t.contains(&sw.add(p, q)));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn classification_is_gl2_invariant(t in small_rat(), d12 in any::<bool>(), m in mobius()) {
        let fam = if d12 { Family::D12 } else { Family::D8 };
        let f = family_sextic(fam, &t);
        prop_assume!(f.is_squarefree());
        let g = f.substitute(&m[0], &m[1], &m[2], &m[3]);
        prop_assert_eq!(classify(&f).unwrap(), classify(&g).unwrap());
    }

    #[test]
    fn certified_points_contain_small_points(c in 1i64..=6) {
        // Y^2 = c (X^3 + 1)(4X^3 + 1) twisted covers of the boundary pair.
        let f = BinarySextic::from_i64s([c, 0, 0, 5 * c, 0, 0, 4 * c]);
        let covers = g2split::ratpoints::known_covers(&f);
        let certs: Vec<RankCertificate> = covers
            .iter()
            .map(|cv: &Cover| RankCertificate { curve_id: cv.id.clone(), rank: 0, provenance: "assumed".into() })
            .collect();
        let r = rank0_rational_points(&f, &covers, &certs).unwrap();
        for p in naive_point_search(&f, 30) {
            prop_assert!(r.points.contains(&p));
        }
    }
}
