//! JSON forms of algebras, orders and modules.
//!
//! Rationals are strings `"p/q"` or `"p"`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{build_algebra, Algebra, Arrow, Quiver, RelationElement, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix};
use crate::module::Module;
use crate::strat::StratOrder;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
    #[serde(rename = "lengthCap", default, skip_serializing_if = "Option::is_none")]
    pub length_cap: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderJson {
    pub pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: AlgebraJson,
    pub dims: BTreeMap<String, usize>,
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn algebra_json(alg: &Algebra) -> AlgebraJson {
    let quiver = alg.quiver();
    AlgebraJson {
        vertices: quiver.vertices.clone(),
        arrows: quiver
            .arrows
            .iter()
            .map(|a| ArrowJson {
                name: a.name.clone(),
                from: a.source.clone(),
                to: a.target.clone(),
            })
            .collect(),
        relations: alg
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| TermJson {
                        coef: format_rational(c),
                        path: p.clone(),
                    })
                    .collect()
            })
            .collect(),
        length_cap: Some(alg.length_cap()),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Arc<Algebra>> {
    let quiver = Quiver {
        vertices: j.vertices.clone(),
        arrows: j
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                source: a.from.clone(),
                target: a.to.clone(),
            })
            .collect(),
    };
    let mut rels = Vec::with_capacity(j.relations.len());
    for r in &j.relations {
        let mut terms = Vec::with_capacity(r.len());
        for t in r {
            terms.push((parse_rational(&t.coef)?, t.path.clone()));
        }
        rels.push(RelationElement { terms });
    }
    build_algebra(&quiver, &rels, j.length_cap.unwrap_or(DEFAULT_LENGTH_CAP))
}

pub fn parse_algebra(text: &str) -> Result<Arc<Algebra>> {
    algebra_from_json(&serde_json::from_str(text).map_err(parse_err)?)
}

pub fn algebra_to_string(alg: &Algebra) -> String {
    serde_json::to_string_pretty(&algebra_json(alg)).expect("serializable")
}

pub fn order_json(o: &StratOrder) -> OrderJson {
    OrderJson {
        pairs: o.generator_pairs().to_vec(),
    }
}

pub fn parse_order(text: &str, alg: &Algebra) -> Result<StratOrder> {
    let j: OrderJson = serde_json::from_str(text).map_err(parse_err)?;
    StratOrder::from_pairs(alg.vertex_labels(), &j.pairs)
}

fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rational(m.get(r, c))).collect())
        .collect()
}

fn matrix_from_json(rows: &[Vec<String>], nrows: usize, ncols: usize) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch(format!(
            "expected a {nrows}×{ncols} matrix"
        )));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, parse_rational(x)?);
        }
    }
    Ok(m)
}

pub fn module_json(m: &Module) -> ModuleJson {
    let alg = m.algebra();
    ModuleJson {
        algebra: algebra_json(alg),
        dims: alg
            .vertex_labels()
            .iter()
            .zip(m.dims())
            .map(|(l, d)| (l.clone(), *d))
            .collect(),
        arrows: (0..alg.num_arrows())
            .map(|a| (alg.arrow_name(a).to_string(), matrix_json(m.arrow(a))))
            .collect(),
    }
}

pub fn module_from_json(j: &ModuleJson) -> Result<Module> {
    let alg = algebra_from_json(&j.algebra)?;
    let mut dims = Vec::with_capacity(alg.num_vertices());
    for l in alg.vertex_labels() {
        dims.push(*j.dims.get(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?);
    }
    if let Some(extra) = j.dims.keys().find(|k| alg.vertex(k).is_err()) {
        return Err(Error::UnknownLabel(extra.clone()));
    }
    let mut arrows = Vec::with_capacity(alg.num_arrows());
    for a in 0..alg.num_arrows() {
        let name = alg.arrow_name(a);
        let rows = j
            .arrows
            .get(name)
            .ok_or_else(|| Error::Parse(format!("missing matrix for arrow {name:?}")))?;
        arrows.push(matrix_from_json(
            rows,
            dims[alg.arrow_target(a)],
            dims[alg.arrow_source(a)],
        )?);
    }
    Module::new(&alg, dims, arrows)
}

pub fn parse_module(text: &str) -> Result<Module> {
    module_from_json(&serde_json::from_str(text).map_err(parse_err)?)
}

pub fn module_to_string(m: &Module) -> String {
    serde_json::to_string_pretty(&module_json(m)).expect("serializable")
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}
