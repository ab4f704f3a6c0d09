//! The two model families, their pure models and ellipticity certificates,
//! the constructive cocycle-to-coboundary factorization, and the odd-dimensional
//! extension by a fundamental cocycle.

mod coboundary;
mod elliptic;
mod mk;
mod mng;
mod tilde;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{DegreeScheme, Family};
use crate::cdga::{CdgaJson, Cdga};
use crate::graphs::SimpleGraph;
use crate::{Error, Result};

pub use coboundary::{coboundary_by_factorization, cocycle_to_coboundary, Factorization};
pub use elliptic::{
    ellipticity_certificates, nilpotency_exponent, pure_model, ElliptiCert, IdentityCheck, NilWitness, Nilpotency,
};
pub use mk::{build_mk, ModelMk};
pub use mng::{build_mng, formal_dimension_closed_form, ModelMnG};
pub use tilde::{chirality_dimension_closed_form, monomial_cocycle, tilde, TildeModel, TILDE_GENERATOR};

/// Positions of the named generators inside a model's generator space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenIndex {
    pub x1: usize,
    pub x2: usize,
    pub y: [usize; 3],
    pub z: usize,
    /// `x[v]` for each vertex, in graph order.
    pub xv: Vec<usize>,
    /// `z[v]` for each vertex, in graph order.
    pub zv: Vec<usize>,
}

impl GenIndex {
    fn locate(alg: &Cdga, labels: &[String]) -> Result<Self> {
        let s = alg.space();
        Ok(GenIndex {
            x1: s.index_of("x1")?,
            x2: s.index_of("x2")?,
            y: [s.index_of("y1")?, s.index_of("y2")?, s.index_of("y3")?],
            z: s.index_of("z")?,
            xv: labels.iter().map(|l| s.index_of(&vertex_x(l))).collect::<Result<_>>()?,
            zv: labels.iter().map(|l| s.index_of(&vertex_z(l))).collect::<Result<_>>()?,
        })
    }

    /// Generators of the rigid part `x1, x2, y1, y2, y3, z`.
    pub fn rigid(&self) -> [usize; 6] {
        [self.x1, self.x2, self.y[0], self.y[1], self.y[2], self.z]
    }
}

pub fn vertex_x(label: &str) -> String {
    format!("x[{label}]")
}

pub fn vertex_z(label: &str) -> String {
    format!("z[{label}]")
}

/// Common view of the two families.
pub trait SullivanModel {
    fn algebra(&self) -> &Cdga;
    fn scheme(&self) -> &DegreeScheme;
    fn index(&self) -> &GenIndex;
    fn graph(&self) -> Option<&SimpleGraph>;
}

/// Either family, as read from or written to a model file.
#[derive(Clone, Debug)]
pub enum Model {
    Mk(ModelMk),
    Mng(ModelMnG),
}

impl SullivanModel for Model {
    fn algebra(&self) -> &Cdga {
        match self {
            Model::Mk(m) => m.algebra(),
            Model::Mng(m) => m.algebra(),
        }
    }
    fn scheme(&self) -> &DegreeScheme {
        match self {
            Model::Mk(m) => m.scheme(),
            Model::Mng(m) => m.scheme(),
        }
    }
    fn index(&self) -> &GenIndex {
        match self {
            Model::Mk(m) => m.index(),
            Model::Mng(m) => m.index(),
        }
    }
    fn graph(&self) -> Option<&SimpleGraph> {
        match self {
            Model::Mk(_) => None,
            Model::Mng(m) => m.graph(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<serde_json::Value>,
    cdga: CdgaJson,
}

impl Model {
    pub fn to_json_string(&self) -> String {
        let file = match self {
            Model::Mk(m) => ModelFile { family: "mk".into(), k: Some(m.k), n: None, graph: None, cdga: m.algebra.to_json() },
            Model::Mng(m) => ModelFile {
                family: "mng".into(),
                k: None,
                n: Some(m.n),
                graph: Some(m.graph.to_json_value()),
                cdga: m.algebra.to_json(),
            },
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    /// Parses a model file and rebuilds the model from its parameters; the
    /// stored algebra must match the rebuilt one exactly.
    pub fn from_json_str(s: &str) -> Result<Model> {
        let file: ModelFile = serde_json::from_str(s)?;
        let stored = Cdga::from_json(&file.cdga)?;
        let model = match file.family.as_str() {
            "mk" => {
                let k = file.k.ok_or_else(|| Error::Parse("mk model file needs `k`".into()))?;
                Model::Mk(build_mk(k)?)
            }
            "mng" => {
                let n = file.n.ok_or_else(|| Error::Parse("mng model file needs `n`".into()))?;
                let g = file.graph.as_ref().ok_or_else(|| Error::Parse("mng model file needs `graph`".into()))?;
                Model::Mng(build_mng(n, &SimpleGraph::from_json_value(g)?)?)
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        if model.algebra().to_json_string() != stored.to_json_string() {
            return Err(Error::Verification("stored algebra differs from the family definition".into()));
        }
        Ok(model)
    }

    pub fn family(&self) -> Family {
        self.scheme().family
    }
}

impl From<ModelMk> for Model {
    fn from(m: ModelMk) -> Self {
        Model::Mk(m)
    }
}

impl From<ModelMnG> for Model {
    fn from(m: ModelMnG) -> Self {
        Model::Mng(m)
    }
}

pub(crate) fn deg(d: i64) -> u32 {
    u32::try_from(d).expect("generator degree fits in u32")
}
