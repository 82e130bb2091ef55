//! Shared inputs for the benchmarks.
use g2split::algebra::rational::rat;
use g2split::igusa::{AbsoluteInvariants, BinarySextic};
use g2split::split3::{EllipticModel, UVParam};

pub fn example_six_point() -> UVParam {
    UVParam::from_i64(20, 16).unwrap()
}

pub fn example_six_invariants() -> AbsoluteInvariants {
    AbsoluteInvariants::parse("576/361", "60480/6859", "243/2476099").unwrap()
}

pub fn example_four_point() -> UVParam {
    UVParam::new(rat(25, 2), rat(250, 9)).unwrap()
}

pub fn boundary_sextic() -> BinarySextic {
    BinarySextic::from_i64s([1, 0, 0, 5, 0, 0, 4])
}

pub fn z6_curve() -> EllipticModel {
    // y^2 = x^3 + 1
    EllipticModel::from_i64s(1, 0, 0, 1).unwrap()
}
