//! JSON model documents.
//!
//! ```json
//! {
//!   "name": "bar",
//!   "material": {"elastic_modulus": 10000.0, "weight_density": 0.1},
//!   "nodes": [{"id": 0, "x": 0.0, "y": 0.0, "z": 0.0}, {"id": 1, "x": 100.0, "y": 0.0}],
//!   "supports": [{"node": 0, "fixed": ["x", "y", "z"]}],
//!   "groups": [{"id": 0, "area_min": 0.1, "area_max": 10.0,
//!               "stress_tension": 25.0, "stress_compression": 25.0}],
//!   "elements": [{"id": 0, "a": 0, "b": 1, "group": 0}],
//!   "load_cases": [{"id": 0, "loads": [{"node": 1, "fx": 10.0}]}],
//!   "displacement_limits": [{"nodes": [1], "dofs": ["x"], "limit": 2.0}]
//! }
//! ```
//!
//! Omitted `z`, `fx`, `fy`, `fz` default to zero, and an omitted
//! `displacement_limits` to an empty list. Unknown keys are errors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::model::*;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub name: String,
    pub material: MaterialDoc,
    pub nodes: Vec<NodeDoc>,
    pub supports: Vec<SupportDoc>,
    pub groups: Vec<GroupDoc>,
    pub elements: Vec<ElementDoc>,
    pub load_cases: Vec<LoadCaseDoc>,
    #[serde(default)]
    pub displacement_limits: Vec<DisplacementLimitDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialDoc {
    pub elastic_modulus: f64,
    pub weight_density: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub id: usize,
    pub x: f64,
    pub y: f64,
    #[serde(default)]
    pub z: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportDoc {
    pub node: usize,
    pub fixed: BTreeSet<Dof>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub id: usize,
    pub area_min: f64,
    pub area_max: f64,
    pub stress_tension: f64,
    pub stress_compression: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buckling_k: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    pub id: usize,
    pub a: usize,
    pub b: usize,
    pub group: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadCaseDoc {
    pub id: usize,
    pub loads: Vec<LoadDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadDoc {
    pub node: usize,
    #[serde(default)]
    pub fx: f64,
    #[serde(default)]
    pub fy: f64,
    #[serde(default)]
    pub fz: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisplacementLimitDoc {
    pub nodes: Vec<usize>,
    pub dofs: BTreeSet<Dof>,
    pub limit: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        /// Key the error is about, when serde names one.
        field: Option<String>,
        message: String,
    },
    #[error(transparent)]
    Validation(#[from] ValidationReport),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde quotes field names in backticks.
        let field = message.split('`').nth(1).map(str::to_owned);
        let message = message
            .rsplit_once(" at line ")
            .map_or(message.clone(), |(head, _)| head.to_owned());
        DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            field,
            message,
        }
    }
}

impl From<&TrussModel> for ModelDocument {
    fn from(m: &TrussModel) -> Self {
        ModelDocument {
            name: m.name.clone(),
            material: MaterialDoc {
                elastic_modulus: m.material.elastic_modulus,
                weight_density: m.material.weight_density,
            },
            nodes: m
                .nodes
                .iter()
                .map(|n| NodeDoc {
                    id: n.id,
                    x: n.coords[0],
                    y: n.coords[1],
                    z: n.coords[2],
                })
                .collect(),
            supports: m
                .supports
                .iter()
                .map(|s| SupportDoc {
                    node: s.node,
                    fixed: s.fixed_dofs.clone(),
                })
                .collect(),
            groups: m
                .groups
                .iter()
                .map(|g| GroupDoc {
                    id: g.id,
                    area_min: g.area_min,
                    area_max: g.area_max,
                    stress_tension: g.stress_tension_limit,
                    stress_compression: g.stress_compression_limit,
                    buckling_k: g.buckling.map(|b| b.k),
                })
                .collect(),
            elements: m
                .elements
                .iter()
                .map(|e| ElementDoc {
                    id: e.id,
                    a: e.node_a,
                    b: e.node_b,
                    group: e.group,
                })
                .collect(),
            load_cases: m
                .load_cases
                .iter()
                .map(|c| LoadCaseDoc {
                    id: c.id,
                    loads: c
                        .point_loads
                        .iter()
                        .map(|p| LoadDoc {
                            node: p.node,
                            fx: p.force[0],
                            fy: p.force[1],
                            fz: p.force[2],
                        })
                        .collect(),
                })
                .collect(),
            displacement_limits: m
                .displacement_limits
                .iter()
                .map(|d| DisplacementLimitDoc {
                    nodes: d.nodes.clone(),
                    dofs: d.dofs.clone(),
                    limit: d.limit,
                })
                .collect(),
        }
    }
}

impl From<ModelDocument> for TrussModel {
    fn from(d: ModelDocument) -> Self {
        TrussModel {
            name: d.name,
            material: Material {
                elastic_modulus: d.material.elastic_modulus,
                weight_density: d.material.weight_density,
            },
            nodes: d
                .nodes
                .into_iter()
                .map(|n| Node {
                    id: n.id,
                    coords: [n.x, n.y, n.z],
                })
                .collect(),
            supports: d
                .supports
                .into_iter()
                .map(|s| SupportSpec {
                    node: s.node,
                    fixed_dofs: s.fixed,
                })
                .collect(),
            groups: d
                .groups
                .into_iter()
                .map(|g| MemberGroup {
                    id: g.id,
                    area_min: g.area_min,
                    area_max: g.area_max,
                    stress_tension_limit: g.stress_tension,
                    stress_compression_limit: g.stress_compression,
                    buckling: g.buckling_k.map(|k| Buckling { k }),
                })
                .collect(),
            elements: d
                .elements
                .into_iter()
                .map(|e| Element {
                    id: e.id,
                    node_a: e.a,
                    node_b: e.b,
                    group: e.group,
                })
                .collect(),
            load_cases: d
                .load_cases
                .into_iter()
                .map(|c| LoadCase {
                    id: c.id,
                    point_loads: c
                        .loads
                        .into_iter()
                        .map(|l| PointLoad {
                            node: l.node,
                            force: [l.fx, l.fy, l.fz],
                        })
                        .collect(),
                })
                .collect(),
            displacement_limits: d
                .displacement_limits
                .into_iter()
                .map(|l| DisplacementLimit {
                    nodes: l.nodes,
                    dofs: l.dofs,
                    limit: l.limit,
                })
                .collect(),
        }
    }
}

/// Parses and validates a model document.
pub fn parse_model(text: &str) -> Result<TrussModel, DocumentError> {
    let doc: ModelDocument = serde_json::from_str(text)?;
    Ok(validate(doc.into())?)
}

/// Pretty-printed JSON for `model`.
pub fn serialize_model(model: &TrussModel) -> String {
    serde_json::to_string_pretty(&ModelDocument::from(model)).expect("model documents always serialize")
}
