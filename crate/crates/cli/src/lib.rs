//! Command implementations behind the `g2split` binary. Every command returns JSON built
//! from library results.

use serde::Serialize;
use serde_json::{json, Value};

use g2split::algebra::poly::QPoly;
use g2split::algebra::rational::{int, parse_rational, rat, squarefree_kernel, Rational};
use g2split::algebra::roots::rational_roots;
use g2split::aut::{classify, deg2_j_quadratic, t_from_invariants, AutGroupLabel, Family};
use g2split::igusa::{absolute_invariants, classical_invariants, curve_from_equation, AbsoluteInvariants, BinarySextic};
use g2split::ratpoints::{
    known_covers, naive_point_search, rank0_rational_points, registered_pairs, torsion_subgroup, Branch, Cover,
    CurvePoint, RankCertificate,
};
use g2split::split3::{
    covering_maps, e3_fiber, e3_fiber_moduli, j_invariant, nondegenerate_sextic, subcover_models, verify_cover,
    EllipticModel, UVParam,
};
use g2split::{Error, Result};

fn s(r: &Rational) -> String {
    r.to_string()
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": e.code(), "message": e.to_string() })
}

pub fn cmd_invariants(curve: &str) -> Result<Value> {
    let f = curve_from_equation(curve)?;
    let j = classical_invariants(&f);
    let abs = absolute_invariants(&j).ok();
    Ok(json!({ "curve": f.to_string(), "classical": j, "absolute": abs }))
}

pub fn cmd_classify(curve: &str) -> Result<Value> {
    let f = curve_from_equation(curve)?;
    let g = classify(&f)?;
    Ok(json!({ "curve": f.to_string(), "aut": g, "order": g.order() }))
}

pub fn cmd_reconstruct(family: &str, i1: &str, i2: &str, i3: &str) -> Result<Value> {
    let fam = Family::parse(family)?;
    let p = AbsoluteInvariants::parse(i1, i2, i3)?;
    let t = t_from_invariants(fam, &p)?;
    Ok(json!({ "family": fam, "t": s(&t), "curve": g2split::aut::family_sextic(fam, &t).to_string() }))
}

pub fn cmd_subcovers(u: &str, v: &str) -> Result<Value> {
    let p = UVParam::new(parse_rational(u)?, parse_rational(v)?)?;
    let f = nondegenerate_sextic(&p)?;
    let (u1, u2) = covering_maps(&p)?;
    let (e, ep) = subcover_models(&p)?;
    Ok(json!({
        "u": s(&p.u), "v": s(&p.v),
        "curve": f.to_string(),
        "U1": u1, "U2": u2,
        "E": e.to_expr(), "E'": ep.to_expr(),
        "j": s(&j_invariant(&e)?), "j'": s(&j_invariant(&ep)?),
        "verified": verify_cover(&p)?,
    }))
}

pub fn cmd_fiber(i1: &str, i2: &str, i3: &str) -> Result<Value> {
    let p = AbsoluteInvariants::parse(i1, i2, i3)?;
    Ok(serde_json::to_value(e3_fiber(&p)?).expect("serializable"))
}

#[derive(Clone, Debug, Serialize)]
pub struct JQuadratic {
    pub family: Family,
    #[serde(serialize_with = "ser_r")]
    pub t: Rational,
    pub quadratic: String,
    #[serde(serialize_with = "ser_r")]
    pub discriminant: Rational,
    /// Squarefree `k` with the roots in `Q(sqrt(k))`.
    pub field_kernel: String,
    pub rational_roots: Vec<String>,
}

fn ser_r<S: serde::Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(r)
}

pub fn j_quadratic(family: Family, t: &Rational) -> Result<JQuadratic> {
    let q = deg2_j_quadratic(family, t)?;
    let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
    let disc = &b * &b - int(4) * &a * &c;
    let roots = rational_roots(&q)?.into_iter().map(|(r, _)| s(&r)).collect();
    Ok(JQuadratic {
        family,
        t: t.clone(),
        quadratic: q.to_expr("j"),
        field_kernel: squarefree_kernel(&disc).to_string(),
        discriminant: disc,
        rational_roots: roots,
    })
}

pub fn cmd_deg2_j(family: &str, t: &str) -> Result<Value> {
    let fam = Family::parse(family)?;
    Ok(serde_json::to_value(j_quadratic(fam, &parse_rational(t)?)?).expect("serializable"))
}

pub fn cmd_rational_points(curve: &str, certs: &[RankCertificate], bound: Option<u64>) -> Result<Value> {
    let f = curve_from_equation(curve)?;
    let covers = known_covers(&f);
    let report = rank0_rational_points(&f, &covers, certs)?;
    let mut out = json!({
        "curve": f.to_string(),
        "covers": covers.iter().map(cover_json).collect::<Vec<_>>(),
        "report": report,
    });
    if let Some(b) = bound {
        let naive = naive_point_search(&f, b);
        out["naive"] = json!({ "bound": b, "points": naive, "agrees": naive == report.points });
    }
    Ok(out)
}

fn cover_json(c: &Cover) -> Value {
    json!({
        "id": c.id,
        "map": c.map,
        "model": c.model.to_expr(),
        "j": j_invariant(&c.model).ok().map(|j| s(&j)),
    })
}

/// A cell of Table 1 compared against its printed value.
#[derive(Clone, Debug, Serialize)]
pub struct CellCheck {
    pub row: String,
    pub cell: String,
    pub printed: String,
    pub computed: String,
    pub pass: bool,
}

/// A known misprint: the same quantity printed differently in two places.
#[derive(Clone, Debug, Serialize)]
pub struct Erratum {
    pub row: &'static str,
    pub cell: &'static str,
    pub printings: Vec<Printing>,
    pub computed: String,
    /// Fires when the computed value matches some printings but not all.
    pub fires: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Printing {
    pub source: &'static str,
    pub value: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Record {
    pub label: String,
    pub curve: BinarySextic,
    pub invariants: AbsoluteInvariants,
    pub e3: usize,
    pub aut: AutGroupLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Report {
    pub records: Vec<Table1Record>,
    pub cells: Vec<CellCheck>,
    pub errata: Vec<Erratum>,
}

struct PrintedRow {
    label: &'static str,
    curve: [i64; 7],
    i: [(i64, i64); 3],
    e3: usize,
    aut: AutGroupLabel,
}

const TABLE1: [PrintedRow; 7] = [
    PrintedRow { label: "p1", curve: [0, 81, 0, 196, 0, 196, 0], i: [(729, 2116), (1240029, 97336), (531441, 13181630464)], e3: 2, aut: AutGroupLabel::D8 },
    PrintedRow { label: "p2", curve: [0, 12, 0, 49, 0, 49, 0], i: [(4288, 1849), (243712, 79507), (64, 1323075987)], e3: 1, aut: AutGroupLabel::D8 },
    PrintedRow { label: "p3", curve: [0, 1, 0, 5, 0, 5, 0], i: [(144, 49), (3456, 8575), (243, 52521875)], e3: 2, aut: AutGroupLabel::D8 },
    PrintedRow { label: "p4", curve: [0, -81, 0, 700, 0, 700, 0], i: [(-8019, 20), (-1240029, 200), (-531441, 10000)], e3: 2, aut: AutGroupLabel::D8 },
    PrintedRow { label: "p5", curve: [4, 0, 0, 25, 0, 0, 25], i: [(64, 5), (-1088, 25), (-1, 84375)], e3: 1, aut: AutGroupLabel::D12 },
    PrintedRow { label: "p6", curve: [-4, 0, 0, 11, 0, 0, 11], i: [(576, 361), (60480, 6859), (243, 2476099)], e3: 1, aut: AutGroupLabel::D12 },
    PrintedRow { label: "p7", curve: [1, 0, 0, 20, 0, 0, 20], i: [(81, 1), (-5103, 25), (-729, 12500)], e3: 2, aut: AutGroupLabel::D12 },
];

/// Each entry: row, cell, and the printings `(source, numerator, denominator)`.
const ERRATA: [(&str, &str, [(&str, i64, i64); 2]); 3] = [
    ("p4", "i3", [("table", -531441, 10000), ("exceptional point list", -531441, 100000)]),
    ("p5", "i2", [("table", -1088, 25), ("family evaluation list", 1088, 25)]),
    ("p5", "i3", [("table", -1, 84375), ("family evaluation list", 1, 84375)]),
];

pub fn table1_curves() -> Vec<(&'static str, BinarySextic)> {
    TABLE1.iter().map(|r| (r.label, BinarySextic::from_i64s(r.curve))).collect()
}

/// Recomputes every row from its curve and compares each cell with the printed table.
pub fn cmd_table1() -> Result<Table1Report> {
    let mut records = Vec::new();
    let mut cells = Vec::new();
    let mut computed_i = Vec::new();
    for row in TABLE1.iter() {
        let f = BinarySextic::from_i64s(row.curve);
        let inv = absolute_invariants(&classical_invariants(&f))?;
        let e3 = e3_fiber_moduli(&classical_invariants(&f).moduli_point())?.e3;
        let aut = classify(&f)?;
        let vals = [&inv.i1, &inv.i2, &inv.i3];
        for (k, (n, d)) in row.i.iter().enumerate() {
            let printed = rat(*n, *d);
            cells.push(CellCheck {
                row: row.label.into(),
                cell: format!("i{}", k + 1),
                printed: s(&printed),
                computed: s(vals[k]),
                pass: &printed == vals[k],
            });
        }
        cells.push(CellCheck {
            row: row.label.into(),
            cell: "e3".into(),
            printed: row.e3.to_string(),
            computed: e3.to_string(),
            pass: row.e3 == e3,
        });
        cells.push(CellCheck {
            row: row.label.into(),
            cell: "aut".into(),
            printed: row.aut.to_string(),
            computed: aut.to_string(),
            pass: row.aut == aut,
        });
        computed_i.push((row.label, inv.clone()));
        records.push(Table1Record { label: row.label.into(), curve: f, invariants: inv, e3, aut });
    }
    let errata = ERRATA
        .iter()
        .map(|(row, cell, printings)| {
            let inv = &computed_i.iter().find(|(l, _)| l == row).expect("row").1;
            let value = match *cell {
                "i1" => &inv.i1,
                "i2" => &inv.i2,
                _ => &inv.i3,
            };
            let printings: Vec<Printing> = printings
                .iter()
                .map(|(src, n, d)| Printing { source: src, value: s(&rat(*n, *d)), pass: &rat(*n, *d) == value })
                .collect();
            let hits = printings.iter().filter(|p| p.pass).count();
            Erratum { row, cell, fires: hits > 0 && hits < printings.len(), printings, computed: s(value) }
        })
        .collect();
    Ok(Table1Report { records, cells, errata })
}

fn certs(ids: &[(&str, u32)], text: &str) -> Vec<RankCertificate> {
    ids.iter()
        .map(|(id, r)| RankCertificate { curve_id: id.to_string(), rank: *r, provenance: text.to_string() })
        .collect()
}

fn points_json(p: &[CurvePoint]) -> Value {
    serde_json::to_value(p).expect("serializable")
}

/// Runs the certificate pipeline and the naive search, and compares with the printed set.
fn rational_points_section(
    f: &BinarySextic,
    covers: &[Cover],
    certs: &[RankCertificate],
    printed: Option<Vec<CurvePoint>>,
    bound: u64,
) -> Value {
    match rank0_rational_points(f, covers, certs) {
        Err(e) => json!({ "status": "undetermined", "error": e.code(), "certificates": certs }),
        Ok(r) => {
            let naive = naive_point_search(f, bound);
            let mut v = json!({
                "status": if r.complete { "complete" } else { "certificate-conflict" },
                "certificates": certs,
                "points": r.points,
                "conflicts": r.conflicts,
                "naive": { "bound": bound, "points": naive, "agrees": naive == r.points },
            });
            if let Some(p) = printed {
                v["printed"] = points_json(&p);
                v["matches_printed"] = json!(p == r.points);
            }
            v
        }
    }
}

fn torsion_json(e: &EllipticModel) -> Value {
    match torsion_subgroup(e) {
        Ok(t) => serde_json::to_value(t).expect("serializable"),
        Err(e) => error_json(&e),
    }
}

fn models_json(covers: &[Cover]) -> Value {
    Value::Array(
        covers
            .iter()
            .map(|c| {
                let mut v = cover_json(c);
                v["torsion"] = torsion_json(&c.model);
                v
            })
            .collect(),
    )
}

fn aff(x: Rational, y: i64) -> CurvePoint {
    CurvePoint::affine(x, int(y))
}

fn uv_covers(p: &UVParam) -> Result<Vec<Cover>> {
    let (u1, u2) = covering_maps(p)?;
    let (e, ep) = subcover_models(p)?;
    Ok(vec![Cover { id: "E".into(), map: u1, model: e }, Cover { id: "E'".into(), map: u2, model: ep }])
}

/// Height bound for the naive search in the example reports.
pub const EXAMPLE_BOUND: u64 = 1000;

/// Reruns one of the seven worked examples (points p1..p7 of Table 1).
pub fn cmd_examples(which: u32) -> Result<Value> {
    match which {
        1 => {
            let f = BinarySextic::from_i64s([-8, 0, -6, 0, 3, 0, 1]);
            let covers = known_covers(&f);
            let c = certs(&[("E1", 0)], "example 1: E1 has rank 0");
            let printed = vec![CurvePoint::Infinity(Branch::Plus), CurvePoint::Infinity(Branch::Minus)];
            Ok(json!({
                "example": 1,
                "curve": f.to_string(),
                "covers": models_json(&covers),
                "rational_points": rational_points_section(&f, &covers, &c, Some(printed), EXAMPLE_BOUND),
                "note": "the printed 'point at infinity' is read as both branches at infinity",
            }))
        }
        2 => {
            let (f, pair) = registered_pairs().into_iter().next().expect("registered");
            let covers: Vec<Cover> = ["E", "E'"]
                .iter()
                .zip(pair)
                .map(|(id, (map, model))| Cover { id: id.to_string(), map, model })
                .collect();
            let c = certs(&[("E", 0), ("E'", 0)], "example 2: E and E' have rank 0");
            let printed = vec![aff(int(0), 0), CurvePoint::Infinity(Branch::Single)];
            Ok(json!({
                "example": 2,
                "curve": f.to_string(),
                "aut": classify(&f)?,
                "covers": models_json(&covers),
                "deg2_j": j_quadratic(Family::D8, &rat(12, 49))?,
                "rational_points": rational_points_section(&f, &covers, &c, Some(printed), EXAMPLE_BOUND),
            }))
        }
        3 | 7 => {
            let (fam, t, label) = if which == 3 { (Family::D8, rat(1, 5), "p3") } else { (Family::D12, rat(1, 20), "p7") };
            let f = table1_curves().into_iter().find(|(l, _)| *l == label).expect("row").1;
            let fiber = e3_fiber_moduli(&classical_invariants(&f).moduli_point())?;
            let q = j_quadratic(fam, &t)?;
            Ok(json!({
                "example": which,
                "curve": f.to_string(),
                "deg2_j": q,
                "deg2_irrational": q.rational_roots.is_empty(),
                "deg3_fiber": { "e3": fiber.e3, "count": fiber.count, "rational_solutions": fiber.rational_solutions },
                "subcovers_over": format!("Q(sqrt({}))", q.field_kernel),
            }))
        }
        4 => {
            let p = UVParam::new(rat(25, 2), rat(250, 9))?;
            let f = nondegenerate_sextic(&p)?;
            let covers = uv_covers(&p)?;
            let c = certs(&[("E'", 0)], "example 4: E' has rank 0");
            let printed = vec![aff(rat(-9, 25), 0), aff(rat(-9, 100), 0)];
            let printed_ep = printed_example4_ep();
            Ok(json!({
                "example": 4,
                "uv": [s(&p.u), s(&p.v)],
                "curve": f.to_string(),
                "covers": models_json(&covers),
                "printed_E'": { "model": printed_ep.to_expr(), "torsion": torsion_json(&printed_ep) },
                "deg2_j": j_quadratic(Family::D8, &rat(-81, 700))?,
                "rational_points": rational_points_section(&f, &covers, &c, Some(printed), EXAMPLE_BOUND),
            }))
        }
        5 => {
            let (f, pair) = registered_pairs().into_iter().nth(1).expect("boundary pair");
            let covers: Vec<Cover> = ["E", "E'"]
                .iter()
                .zip(pair)
                .map(|(id, (map, model))| Cover { id: id.to_string(), map, model })
                .collect();
            let c = certs(&[("E", 0), ("E'", 0)], "example 5: E and E' have rank 0");
            let printed = vec![aff(int(-1), 0), aff(int(0), -1), aff(int(0), 1)];
            Ok(json!({
                "example": 5,
                "curve": f.to_string(),
                "covers": models_json(&covers),
                "deg2_j": j_quadratic(Family::D12, &rat(4, 25))?,
                "rational_points": rational_points_section(&f, &covers, &c, Some(printed), EXAMPLE_BOUND),
            }))
        }
        6 => {
            let p = UVParam::from_i64(20, 16)?;
            let f = nondegenerate_sextic(&p)?;
            let covers = uv_covers(&p)?;
            let c = certs(&[("E", 1), ("E'", 1)], "example 6: rank > 0");
            Ok(json!({
                "example": 6,
                "uv": [s(&p.u), s(&p.v)],
                "curve": f.to_string(),
                "covers": models_json(&covers),
                "rational_points": rational_points_section(&f, &covers, &c, None, EXAMPLE_BOUND),
            }))
        }
        n => Err(Error::Invalid(format!("no example {n}; expected 1 to 7"))),
    }
}

/// `V^2 = -(686/59049)(1700U - 441)(1445000U^2 - 696150U + 83853)` as printed.
pub fn printed_example4_ep() -> EllipticModel {
    let c = QPoly::from_i64s(&[-441, 1700]);
    let q = QPoly::from_i64s(&[83853, -696150, 1445000]);
    EllipticModel::from_cubic(&(&c * &q).scale(&rat(-686, 59049))).expect("nonsingular")
}
