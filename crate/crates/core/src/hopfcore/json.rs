//! Hopf algebra JSON: sparse structure constants or a built-in constructor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    add_to, build_group_algebra, build_small_quantum_group, HopfAlgebraData, HopfParts, Sparse,
    SubalgebraEmbedding, Tensor2,
};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar, Vector};
use crate::permgroup::GroupInput;

/// `[i, j, k, "c"]`: coefficient `c` of `b_k` in `b_i b_j`, or of `b_j ⊗ b_k` in `Δ(b_i)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Triplet(pub usize, pub usize, pub usize, pub Scalar);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Builtin {
    SmallQuantumGroup { n: usize },
    GroupAlgebra { group: GroupInput },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct HopfInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<Builtin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_order: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mult: Vec<Triplet>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comult: Vec<Triplet>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counit: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub antipode: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    /// Named Hopf subalgebras by spanning row vectors, or by the name of a
    /// built-in subalgebra (`R1`, `R2`, `B`) or a subgroup of the built-in group.
    #[serde(default)]
    pub subalgebras: BTreeMap<String, SubalgebraSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubalgebraSpec {
    Rows(Vec<Vec<Scalar>>),
    Named(String),
}

/// A parsed Hopf algebra with its named subalgebras.
#[derive(Clone, Debug)]
pub struct HopfBundle {
    pub hopf: HopfAlgebraData,
    pub subalgebras: BTreeMap<String, SubalgebraEmbedding>,
}

fn field_err(field: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        location: field.to_string(),
        message: message.into(),
    }
}

impl HopfInput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn build(&self) -> Result<HopfBundle> {
        let mut subalgebras = BTreeMap::new();
        let hopf = match &self.builtin {
            Some(Builtin::SmallQuantumGroup { n }) => {
                let sq = build_small_quantum_group(*n)?;
                for name in ["R1", "R2", "B"] {
                    let mut s = sq.subalgebra(name).expect("built in").clone();
                    s.name = name.to_string();
                    subalgebras.insert(name.to_string(), s);
                }
                sq.hopf
            }
            Some(Builtin::GroupAlgebra { group }) => {
                let g = group.build(usize::MAX)?;
                let kg = build_group_algebra(&g);
                for name in group.subgroups.keys() {
                    let h = group.subgroup(&g, name)?.expect("listed");
                    let mut s = super::group_subalgebra(&kg, &h);
                    s.name = name.clone();
                    subalgebras.insert(name.clone(), s);
                }
                kg
            }
            None => self.build_tables()?,
        };
        for (name, spec) in &self.subalgebras {
            let emb = match spec {
                SubalgebraSpec::Rows(rows) => SubalgebraEmbedding::new(&hopf, name, rows.clone())?,
                SubalgebraSpec::Named(other) => {
                    let mut s = subalgebras.get(other).cloned().ok_or_else(|| {
                        field_err(
                            &format!("subalgebras.{name}"),
                            format!("unknown subalgebra {other:?}"),
                        )
                    })?;
                    s.name = name.clone();
                    s
                }
            };
            subalgebras.insert(name.clone(), emb);
        }
        Ok(HopfBundle { hopf, subalgebras })
    }

    fn build_tables(&self) -> Result<HopfAlgebraData> {
        let dim = self
            .dim
            .ok_or_else(|| field_err("dim", "missing (and no builtin given)"))?;
        let labels = if self.labels.is_empty() {
            (0..dim).map(|i| format!("b{i}")).collect()
        } else if self.labels.len() == dim {
            self.labels.clone()
        } else {
            return Err(field_err("labels", format!("expected {dim} labels")));
        };
        let mut mult = vec![vec![Sparse::new(); dim]; dim];
        for (n, Triplet(i, j, k, c)) in self.mult.iter().enumerate() {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(field_err(&format!("mult[{n}]"), "index out of range"));
            }
            add_to(&mut mult[*i][*j], *k, c.clone());
        }
        let mut comult = vec![Tensor2::new(); dim];
        for (n, Triplet(i, j, k, c)) in self.comult.iter().enumerate() {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(field_err(&format!("comult[{n}]"), "index out of range"));
            }
            add_to(&mut comult[*i], (*j, *k), c.clone());
        }
        if self.counit.len() != dim {
            return Err(field_err("counit", format!("expected {dim} entries")));
        }
        if self.antipode.len() != dim || self.antipode.iter().any(|r| r.len() != dim) {
            return Err(field_err(
                "antipode",
                format!("expected a {dim}×{dim} matrix"),
            ));
        }
        let unit: Vector = match &self.unit {
            Some(u) if u.len() == dim => u.clone(),
            Some(_) => return Err(field_err("unit", format!("expected {dim} entries"))),
            None => {
                let mut u = vec![Scalar::zero(); dim];
                u[0] = Scalar::one();
                u
            }
        };
        let mut field_order = self.field_order.unwrap_or(1);
        for c in self.mult.iter().chain(&self.comult).map(|t| &t.3) {
            field_order = lcm(field_order, c.order());
        }
        HopfAlgebraData::new(HopfParts {
            field_order,
            labels,
            mult,
            unit,
            comult,
            counit: self.counit.clone(),
            antipode: ExactMatrix::from_rows(self.antipode.clone()),
            generators: self.generators.clone(),
        })
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl HopfAlgebraData {
    /// Explicit structure-constant form of this algebra.
    pub fn to_input(&self) -> HopfInput {
        let d = self.dim();
        let mut mult = Vec::new();
        let mut comult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (&k, c) in self.mult_basis(i, j) {
                    mult.push(Triplet(i, j, k, c.clone()));
                }
            }
            for (&(j, k), c) in self.comult_basis(i) {
                comult.push(Triplet(i, j, k, c.clone()));
            }
        }
        HopfInput {
            builtin: None,
            dim: Some(d),
            field_order: Some(self.field_order()),
            labels: self.labels().to_vec(),
            mult,
            comult,
            counit: self.counit_vector().to_vec(),
            antipode: self.antipode().to_rows(),
            unit: Some(self.unit().to_vec()),
            generators: Some(self.generators().to_vec()),
            subalgebras: BTreeMap::new(),
        }
    }
}
