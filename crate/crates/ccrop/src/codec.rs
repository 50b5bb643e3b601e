//! JSON encodings of toolkit values. Points and rationals travel as strings;
//! vector entries are `[point, re, im]`.

use ccrop_core::certificate::AsymmetryCertificate;
use ccrop_core::lattice::Point;
use ccrop_core::module::{ContinuousSet, Decision, ExtremeCertificate, ExtremeReport, NoCertificate};
use ccrop_core::opposite_rep::OppositeClass;
use ccrop_core::rational::RatVec;
use ccrop_core::sparse::SparseVector;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::{point_strings, rational_strings};
use crate::error::{CliError, CliResult};

pub fn point(p: &Point) -> Value {
    json!(point_strings(p))
}

pub fn points(ps: &[Point]) -> Value {
    Value::Array(ps.iter().map(point).collect())
}

pub fn ratvec(v: &RatVec) -> Value {
    json!(rational_strings(v))
}

pub fn vector(v: &SparseVector) -> Value {
    Value::Array(v.iter().map(|(p, c)| json!([point(p), c.re, c.im])).collect())
}

pub fn parse_vector(value: &Value) -> CliResult<SparseVector> {
    let bad = || CliError::Input(format!("not a vector entry list: {value}"));
    let entries = value.as_array().ok_or_else(bad)?;
    let mut items = Vec::with_capacity(entries.len());
    for e in entries {
        let [p, re, im] = e.as_array().map(Vec::as_slice).ok_or_else(bad)? else {
            return Err(bad());
        };
        let coords = p
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|c| c.as_str().and_then(|s| s.parse::<i64>().ok()).ok_or_else(bad))
            .collect::<CliResult<Vec<i64>>>()?;
        let c = Complex64::new(re.as_f64().ok_or_else(bad)?, im.as_f64().ok_or_else(bad)?);
        items.push((Point(coords), c));
    }
    Ok(SparseVector::from_entries(items))
}

/// A class travels as its normal form together with the representative's index.
pub fn class(c: &OppositeClass) -> Value {
    json!({ "index": point(c.index()), "normal": vector(c.normal()) })
}

pub fn extreme_report(r: &ExtremeReport) -> Value {
    let set = match &r.set {
        ContinuousSet::TranslatedCone { apex } => json!({ "kind": "translated-cone", "apex": point(apex) }),
        ContinuousSet::OppositeOfTranslatedCone { apex } => {
            json!({ "kind": "opposite-of-translated-cone", "apex": point(apex) })
        }
    };
    let certificate = match &r.certificate {
        ExtremeCertificate::PointedApex { apex, normal_basis } => json!({
            "kind": "pointed-apex",
            "apex": ratvec(apex),
            "normal_basis": normal_basis.iter().map(ratvec).collect::<Vec<_>>(),
        }),
        ExtremeCertificate::Midpoint { center, direction } => json!({
            "kind": "midpoint",
            "center": ratvec(center),
            "direction": ratvec(direction),
        }),
    };
    json!({
        "set": set,
        "extreme_points": r.extreme_points.iter().map(ratvec).collect::<Vec<_>>(),
        "certificate": certificate,
    })
}

pub fn decision(d: &Decision) -> Value {
    match d {
        Decision::Yes { shift } => json!({ "answer": "YES", "shift": point(shift) }),
        Decision::No(cert) => {
            let certificate = match cert {
                NoCertificate::Antichains { left, right } => {
                    json!({ "kind": "antichains", "left": points(left), "right": points(right) })
                }
                NoCertificate::ExtremePoints { left, right } => json!({
                    "kind": "extreme-points",
                    "left": extreme_report(left),
                    "right": extreme_report(right),
                }),
                NoCertificate::MinimalElements { cone_module_minimal, cone_module_is_left } => json!({
                    "kind": "minimal-elements",
                    "cone_module_minimal": points(cone_module_minimal),
                    "cone_module_is_left": cone_module_is_left,
                }),
            };
            json!({ "answer": "NO", "certificate": certificate })
        }
        Decision::Inconclusive(ev) => json!({
            "answer": "INCONCLUSIVE",
            "evidence": {
                "window": ev.window.radius(),
                "left_minimal": points(&ev.left_minimal),
                "right_minimal": points(&ev.right_minimal),
                "candidate_shift": ev.candidate_shift.as_ref().map(point),
            },
        }),
    }
}

pub fn certificate(c: &AsymmetryCertificate) -> Value {
    json!({
        "witness": ratvec(&c.witness),
        "cone": extreme_report(&c.cone_report),
        "opposite": extreme_report(&c.opposite_report),
        "decision": decision(&c.decision),
        "chain": c.chain,
        "verdict": "ASYMMETRIC",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_round_trip() {
        let v = SparseVector::from_entries([
            (Point(vec![0, 1]), Complex64::new(0.5, -0.25)),
            (Point(vec![-3, 2]), Complex64::new(1e-3, 2.0)),
        ]);
        let encoded = vector(&v);
        assert_eq!(encoded[0][0], json!(["-3", "2"]));
        assert_eq!(parse_vector(&encoded).unwrap(), v);
        assert!(parse_vector(&json!([[["1"], 1.0]])).is_err());
        assert!(parse_vector(&json!([[["x"], 1.0, 0.0]])).is_err());
    }

    #[test]
    fn decisions_encode() {
        let yes = decision(&Decision::Yes { shift: Point(vec![1]) });
        assert_eq!(yes, json!({ "answer": "YES", "shift": ["1"] }));
    }
}
