use g2split::algebra::poly::QPoly;
use g2split::algebra::rational::{int, rat};
use g2split::aut::{classify, AutGroupLabel};
use g2split::igusa::{classical_invariants, curve_from_equation, moduli_equal, AbsoluteInvariants, BinarySextic};
use g2split::ratpoints::{known_covers, naive_point_search, rank0_rational_points, Branch, CurvePoint, RankCertificate};
use g2split::split3::{e3_fiber, nondegenerate_sextic, theta, UVParam};
use g2split::Error;

#[test]
fn example_six_fiber_and_invariants() {
    let p = UVParam::from_i64(20, 16).unwrap();
    let i = AbsoluteInvariants::parse("576/361", "60480/6859", "243/2476099").unwrap();
    assert_eq!(theta(&p).unwrap(), i);
    let r = e3_fiber(&i).unwrap();
    assert_eq!(r.e3, 1);
    assert_eq!(r.rational_solutions.len(), 1);
    assert_eq!(r.rational_solutions[0].uv, p);
    let printed = curve_from_equation("(256x^3+320x^2+16x+1)(1024x^3+256x^2+32x+1)").unwrap();
    let f = nondegenerate_sextic(&p).unwrap();
    assert!(moduli_equal(&classical_invariants(&f).moduli_point(), &classical_invariants(&printed).moduli_point()));
}

#[test]
fn example_four_curve_matches_printed_form() {
    let p = UVParam::new(rat(25, 2), rat(250, 9)).unwrap();
    let printed = curve_from_equation("(100x+9)(2500x^2+400x+9)(25x+9)(2500x^2+225x+9)").unwrap();
    let f = nondegenerate_sextic(&p).unwrap();
    assert_eq!(f, printed.scale(&rat(1, 6561)));
}

#[test]
fn example_two_classifies_as_d8() {
    let f = curve_from_equation("y^2 = (3x^2+4)(x^3+x)").unwrap();
    assert_eq!(classify(&f).unwrap(), AutGroupLabel::D8);
}

#[test]
fn rational_points_through_discovered_covers() {
    let f = curve_from_equation("x^6+3x^4-6x^2-8").unwrap();
    let covers = known_covers(&f);
    let certs = vec![RankCertificate { curve_id: "E1".into(), rank: 0, provenance: "example 1".into() }];
    let r = rank0_rational_points(&f, &covers, &certs).unwrap();
    assert_eq!(r.points, vec![CurvePoint::Infinity(Branch::Plus), CurvePoint::Infinity(Branch::Minus)]);
    assert!(r.complete);
    assert_eq!(naive_point_search(&f, 200), r.points);

    let f = curve_from_equation("(x^3+1)(4x^3+1)").unwrap();
    let covers = known_covers(&f);
    let certs: Vec<RankCertificate> = ["E", "E'"]
        .iter()
        .map(|id| RankCertificate { curve_id: id.to_string(), rank: 0, provenance: "example 5".into() })
        .collect();
    let r = rank0_rational_points(&f, &covers, &certs).unwrap();
    let affine: Vec<_> = r.points.iter().filter(|p| !p.is_infinite()).cloned().collect();
    assert_eq!(
        affine,
        vec![CurvePoint::affine(int(-1), int(0)), CurvePoint::affine(int(0), int(-1)), CurvePoint::affine(int(0), int(1))]
    );
    assert_eq!(r.points.len(), 5);
}

#[test]
fn naive_search_example_four() {
    let f = nondegenerate_sextic(&UVParam::new(rat(25, 2), rat(250, 9)).unwrap()).unwrap();
    let pts = naive_point_search(&f, 1000);
    for x in [rat(-9, 100), rat(-9, 25)] {
        assert!(pts.contains(&CurvePoint::affine(x, int(0))));
    }
}

#[test]
fn rank_one_certificates_are_refused() {
    let f = BinarySextic::from_poly(&QPoly::from_i64s(&[1, 0, 0, 5, 0, 0, 4])).unwrap();
    let covers = known_covers(&f);
    let certs = vec![RankCertificate { curve_id: "E".into(), rank: 1, provenance: "x".into() }];
    assert_eq!(rank0_rational_points(&f, &covers, &certs).unwrap_err(), Error::InsufficientCertificates);
}
