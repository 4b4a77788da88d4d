//! Built-in example algebras with pinned orders and expected reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{build_algebra, dual_extension, is_symmetric, Algebra, Quiver, RelationElement};
use crate::derived::serre_duality_check;
use crate::error::{Error, Result};
use crate::homological::{global_dimension, is_selfinjective};
use crate::module::{is_isomorphic, Module};
use crate::serre::{
    basic_projective, check_double_centraliser, check_serrecoapprox_equivalence, is_good,
    projective_injective_vertices,
};
use crate::strat::{StratOrder, Stratified};
use crate::tilting::{cartan_equivalent, dc_tilting, ringel_dual, tilting_data};

pub const ZOO_NAMES: [&str; 9] = [
    "point",
    "dual-numbers",
    "a2-path",
    "tri3-natural",
    "tri3-reversed",
    "sl2-block",
    "dualext-a3",
    "hc-toy",
    "nongood",
];

const REPORT_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub order: StratOrder,
    /// Head vertices of the projective `Q` used by the Serre checks.
    pub q_vertices: Vec<usize>,
    pub expected: Value,
}

pub fn zoo_list() -> Vec<&'static str> {
    ZOO_NAMES.to_vec()
}

fn alg(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[&str]]) -> Arc<Algebra> {
    let rels: Vec<RelationElement> = rels.iter().map(|r| RelationElement::monomial(r)).collect();
    build_algebra(&Quiver::new(vertices, arrows), &rels, 12).expect("zoo algebras are admissible")
}

fn order(a: &Algebra, pairs: &[(&str, &str)]) -> StratOrder {
    StratOrder::from_str_pairs(a.vertex_labels(), pairs).expect("zoo orders use known labels")
}

pub fn zoo_get(name: &str) -> Result<ZooEntry> {
    let (a, o, q, expected) = match name {
        "point" => {
            let a = alg(&["1"], &[], &[]);
            let o = StratOrder::discrete(a.vertex_labels());
            (a, o, None, expected_point())
        }
        "dual-numbers" => {
            let a = alg(&["1"], &[("x", "1", "1")], &[&["x", "x"]]);
            let o = StratOrder::discrete(a.vertex_labels());
            (a, o, None, expected_dual_numbers())
        }
        "a2-path" => {
            let a = alg(&["1", "2"], &[("a", "1", "2")], &[]);
            let o = order(&a, &[("1", "2")]);
            (a, o, None, expected_a2())
        }
        "tri3-natural" | "tri3-reversed" => {
            let a = alg(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")], &[]);
            if name == "tri3-natural" {
                let o = order(&a, &[("1", "2"), ("2", "3")]);
                (a, o, None, expected_tri3_natural())
            } else {
                let o = order(&a, &[("2", "1"), ("3", "2")]);
                (a, o, None, expected_tri3_reversed())
            }
        }
        "sl2-block" => {
            let a = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"]]);
            let o = order(&a, &[("2", "1")]);
            (a, o, None, expected_sl2())
        }
        "dualext-a3" => {
            let a = dual_extension(&Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]))
                .expect("directed quiver");
            let o = order(&a, &[("1", "2"), ("2", "3")]);
            (a, o, None, expected_dualext())
        }
        "hc-toy" => {
            let a = alg(&["1", "2"], &[("x", "2", "2"), ("a", "2", "1")], &[&["x", "x"]]);
            let o = order(&a, &[("1", "2")]);
            (a, o, None, expected_hc_toy())
        }
        "nongood" => {
            let a = alg(
                &["1", "2", "3"],
                &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
                &[&["a", "b"], &["b", "c"], &["c", "a"]],
            );
            let o = StratOrder::discrete(a.vertex_labels());
            (a, o, Some(vec![0]), expected_nongood())
        }
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    let q_vertices = q.unwrap_or_else(|| projective_injective_vertices(&a));
    Ok(ZooEntry {
        name: name.to_string(),
        algebra: a,
        order: o,
        q_vertices,
        expected,
    })
}

fn by_label<T: Into<Value>>(a: &Algebra, xs: impl IntoIterator<Item = T>) -> Value {
    let m: BTreeMap<String, Value> = a.vertex_labels().iter().cloned().zip(xs.into_iter().map(Into::into)).collect();
    json!(m)
}

fn err_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

pub fn zoo_report(entry: &ZooEntry) -> Result<Value> {
    analyze(&entry.algebra, &entry.order, &entry.q_vertices)
}

/// Runs stratification, tilting, Ringel duality, the double centraliser
/// search, the Serre checks and the derived Serre table.
pub fn analyze(a: &Arc<Algebra>, order: &StratOrder, q_vertices: &[usize]) -> Result<Value> {
    let mut r = serde_json::Map::new();
    r.insert("dim".into(), json!(a.dim()));
    r.insert("cartan".into(), json!(a.cartan_matrix()));
    let gd = global_dimension(a, REPORT_CAP).finite();
    r.insert("globalDimension".into(), json!(gd));
    r.insert("symmetric".into(), json!(is_symmetric(a).symmetric));
    r.insert("selfInjective".into(), json!(is_selfinjective(a)?.is_some()));
    r.insert("centreDim".into(), json!(a.centre().dim()));

    let s = Stratified::new(a, order.clone())?;
    let ss = s.is_standardly_stratified();
    r.insert("standardlyStratified".into(), json!(ss));
    r.insert("quasiHereditary".into(), json!(s.is_quasi_hereditary()?));
    r.insert("properlyStratified".into(), json!(s.is_properly_stratified()?));
    let n = a.num_vertices();
    r.insert("deltaDims".into(), by_label(a, (0..n).map(|v| s.standard(v).total_dim())));
    r.insert("deltaBarDims".into(), by_label(a, (0..n).map(|v| s.proper_standard(v).total_dim())));

    if ss {
        let td = tilting_data(&s)?;
        r.insert("tiltingDims".into(), by_label(a, td.modules.iter().map(Module::total_dim)));
        let rd = ringel_dual(&td)?;
        r.insert("ringelDualDim".into(), json!(rd.presented.algebra.dim()));
        r.insert(
            "ringelCartanEquivalent".into(),
            json!(cartan_equivalent(a, &rd.presented.algebra).is_some()),
        );
        r.insert("ringelDualStandardlyStratified".into(), json!(rd.strat.is_standardly_stratified()));
        let dc = dc_tilting(&td)?;
        r.insert(
            "dc".into(),
            json!({
                "doubleCentraliser": dc.double_centraliser,
                "XequalsCharacteristicTilting": dc.x_is_characteristic,
                "XinAddQ": dc.x_in_add_q,
                "XsummandDims": dc.x_summands.iter().map(Module::total_dim).collect::<Vec<_>>(),
            }),
        );
    }

    let qm = basic_projective(a, q_vertices);
    r.insert(
        "qVertices".into(),
        json!(q_vertices.iter().map(|&v| a.vertex_label(v)).collect::<Vec<_>>()),
    );
    r.insert(
        "good".into(),
        match is_good(&qm) {
            Ok(g) => json!(g),
            Err(_) => Value::Null,
        },
    );
    r.insert("doubleCentraliserWithQ".into(), json!(check_double_centraliser(a, &qm).holds));
    r.insert(
        "serre".into(),
        match check_serrecoapprox_equivalence(a, &qm) {
            Ok(x) => json!({ "i": x.cond_i, "ii": x.cond_ii, "iii": x.cond_iii, "allEqual": x.all_equal }),
            Err(e) => err_value(&e),
        },
    );
    if gd.is_some() {
        let mut all = true;
        for l in 0..n {
            for mu in 0..n {
                let rows = serre_duality_check(&Module::simple(a, l), &Module::simple(a, mu), -3, 3, REPORT_CAP)?;
                all &= rows.iter().all(|x| x.equal);
            }
        }
        r.insert("serreTableEqual".into(), json!(all));
    }
    let proj_inj = projective_injective_vertices(a);
    let mut iso_classes = 0;
    for (i, &v) in proj_inj.iter().enumerate() {
        let p = Module::projective(a, v);
        let mut new = true;
        for &w in &proj_inj[..i] {
            if is_isomorphic(&p, &Module::projective(a, w))? {
                new = false;
            }
        }
        iso_classes += usize::from(new);
    }
    r.insert("projectiveInjectiveCount".into(), json!(iso_classes));
    Ok(Value::Object(r))
}

/// Compares every expected field with the computed report.
pub fn zoo_verify(name: &str) -> Result<Value> {
    let entry = zoo_get(name)?;
    let report = zoo_report(&entry)?;
    compare(&entry.expected, &report)?;
    Ok(report)
}

fn compare(expected: &Value, report: &Value) -> Result<()> {
    if let Value::Object(exp) = expected {
        for (k, v) in exp {
            let got = report.get(k).cloned().unwrap_or(Value::Null);
            if got != *v {
                return Err(Error::Mismatch {
                    field: k.clone(),
                    expected: v.to_string(),
                    actual: got.to_string(),
                });
            }
        }
    }
    Ok(())
}

fn expected_point() -> Value {
    json!({
        "dim": 1,
        "cartan": [[1]],
        "globalDimension": 0,
        "symmetric": true,
        "selfInjective": true,
        "centreDim": 1,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 1},
        "deltaBarDims": {"1": 1},
        "tiltingDims": {"1": 1},
        "ringelDualDim": 1,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": true, "XsummandDims": [1], "doubleCentraliser": true},
        "good": true,
        "doubleCentraliserWithQ": true,
        "serre": {"allEqual": true, "i": true, "ii": true, "iii": true},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 1
    })
}

fn expected_dual_numbers() -> Value {
    json!({
        "dim": 2,
        "cartan": [[2]],
        "globalDimension": null,
        "symmetric": true,
        "selfInjective": true,
        "centreDim": 2,
        "standardlyStratified": true,
        "quasiHereditary": false,
        "properlyStratified": true,
        "deltaDims": {"1": 2},
        "deltaBarDims": {"1": 1},
        "tiltingDims": {"1": 2},
        "ringelDualDim": 2,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": true, "XsummandDims": [2], "doubleCentraliser": true},
        "good": true,
        "doubleCentraliserWithQ": true,
        "serre": {"error": "precondition failed: finite global dimension"},
        "projectiveInjectiveCount": 1
    })
}

fn expected_a2() -> Value {
    json!({
        "dim": 3,
        "cartan": [[1, 0], [1, 1]],
        "globalDimension": 1,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 1,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 1, "2": 1},
        "deltaBarDims": {"1": 1, "2": 1},
        "tiltingDims": {"1": 1, "2": 2},
        "ringelDualDim": 3,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": false, "XsummandDims": [2, 1], "doubleCentraliser": true},
        "good": false,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: Q good"},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 1
    })
}

fn expected_tri3_natural() -> Value {
    json!({
        "dim": 6,
        "cartan": [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
        "globalDimension": 1,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 1,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 1, "2": 2, "3": 3},
        "deltaBarDims": {"1": 1, "2": 2, "3": 3},
        "tiltingDims": {"1": 1, "2": 2, "3": 3},
        "ringelDualDim": 6,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": true, "XsummandDims": [1, 2, 3], "doubleCentraliser": true},
        "good": false,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: Q good"},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 1
    })
}

fn expected_tri3_reversed() -> Value {
    json!({
        "dim": 6,
        "cartan": [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
        "globalDimension": 1,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 1,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 1, "2": 1, "3": 1},
        "deltaBarDims": {"1": 1, "2": 1, "3": 1},
        "tiltingDims": {"1": 3, "2": 2, "3": 1},
        "ringelDualDim": 6,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": false, "XsummandDims": [3, 2, 1], "doubleCentraliser": true},
        "good": false,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: Q good"},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 1
    })
}

fn expected_sl2() -> Value {
    json!({
        "dim": 5,
        "cartan": [[1, 1], [1, 2]],
        "globalDimension": 2,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 2,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 2, "2": 1},
        "deltaBarDims": {"1": 2, "2": 1},
        "tiltingDims": {"1": 3, "2": 1},
        "ringelDualDim": 5,
        "ringelCartanEquivalent": true,
        "dc": {"XequalsCharacteristicTilting": false, "XinAddQ": true, "XsummandDims": [3], "doubleCentraliser": true},
        "good": true,
        "doubleCentraliserWithQ": true,
        "serre": {"allEqual": true, "i": true, "ii": true, "iii": true},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 1
    })
}

fn expected_dualext() -> Value {
    json!({
        "dim": 14,
        "cartan": [[3, 2, 1], [2, 2, 1], [1, 1, 1]],
        "globalDimension": 2,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 3,
        "standardlyStratified": true,
        "quasiHereditary": true,
        "properlyStratified": true,
        "deltaDims": {"1": 1, "2": 2, "3": 3},
        "deltaBarDims": {"1": 1, "2": 2, "3": 3},
        "tiltingDims": {"1": 1, "2": 3, "3": 7},
        "ringelDualDim": 21,
        "ringelCartanEquivalent": false,
        "dc": {"XequalsCharacteristicTilting": false, "XinAddQ": true, "XsummandDims": [7], "doubleCentraliser": true},
        "good": true,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: double centraliser for Q"},
        "serreTableEqual": true,
        "projectiveInjectiveCount": 0
    })
}

fn expected_hc_toy() -> Value {
    json!({
        "dim": 5,
        "cartan": [[1, 2], [0, 2]],
        "globalDimension": null,
        "symmetric": false,
        "selfInjective": false,
        "centreDim": 1,
        "standardlyStratified": true,
        "quasiHereditary": false,
        "properlyStratified": true,
        "deltaDims": {"1": 1, "2": 4},
        "deltaBarDims": {"1": 1, "2": 2},
        "tiltingDims": {"1": 1, "2": 4},
        "ringelDualDim": 5,
        "ringelCartanEquivalent": false,
        "dc": {"XequalsCharacteristicTilting": true, "XinAddQ": true, "XsummandDims": [1, 4], "doubleCentraliser": true},
        "good": true,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: finite global dimension"},
        "projectiveInjectiveCount": 0
    })
}

fn expected_nongood() -> Value {
    json!({
        "dim": 6,
        "cartan": [[1, 0, 1], [1, 1, 0], [0, 1, 1]],
        "globalDimension": null,
        "symmetric": false,
        "selfInjective": true,
        "centreDim": 1,
        "standardlyStratified": false,
        "quasiHereditary": false,
        "properlyStratified": false,
        "deltaDims": {"1": 2, "2": 2, "3": 2},
        "deltaBarDims": {"1": 2, "2": 2, "3": 2},
        "good": false,
        "doubleCentraliserWithQ": false,
        "serre": {"error": "precondition failed: finite global dimension"},
        "projectiveInjectiveCount": 3
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_by_hand() {
        assert_eq!(zoo_get("dual-numbers").unwrap().algebra.dim(), 2);
        assert_eq!(zoo_get("sl2-block").unwrap().algebra.dim(), 5);
        assert_eq!(zoo_get("tri3-natural").unwrap().algebra.dim(), 6);
        // Σ_k (number of paths ending at k)² = 9 + 4 + 1
        assert_eq!(zoo_get("dualext-a3").unwrap().algebra.dim(), 14);
    }

    #[test]
    fn every_entry_verifies() {
        for name in zoo_list() {
            zoo_verify(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(zoo_get("nope"), Err(Error::UnknownEntry(_))));
    }

    #[test]
    fn tampered_expectation_reports_field() {
        let mut e = zoo_get("point").unwrap();
        e.expected["dim"] = json!(2);
        let report = zoo_report(&e).unwrap();
        assert_eq!(report["dim"], json!(1));
        assert!(matches!(compare(&e.expected, &report), Err(Error::Mismatch { field, .. }) if field == "dim"));
    }
}
