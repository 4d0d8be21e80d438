//! Problem definition for pin-jointed truss sizing.
//!
//! Units are imperial throughout: inches, square inches, kips, ksi and
//! pounds. A [`TrussModel`] is built once, checked with [`validate`], and then
//! shared read-only by every evaluator.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Translational degree of freedom at a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dof {
    X,
    Y,
    Z,
}

impl Dof {
    pub const ALL: [Dof; 3] = [Dof::X, Dof::Y, Dof::Z];

    pub fn index(self) -> usize {
        match self {
            Dof::X => 0,
            Dof::Y => 1,
            Dof::Z => 2,
        }
    }
}

impl fmt::Display for Dof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dof::X => "x",
            Dof::Y => "y",
            Dof::Z => "z",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub id: usize,
    /// Coordinates in inches. Planar models keep `z = 0`.
    pub coords: [f64; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub id: usize,
    pub node_a: usize,
    pub node_b: usize,
    pub group: usize,
}

/// Euler buckling data for a member group.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Buckling {
    /// Dimensionless buckling constant in `-K E A / L^2`.
    pub k: f64,
}

/// A set of elements that share one sizing variable.
#[derive(Clone, Debug, PartialEq)]
pub struct MemberGroup {
    pub id: usize,
    pub area_min: f64,
    pub area_max: f64,
    /// Allowable tensile stress magnitude, ksi.
    pub stress_tension_limit: f64,
    /// Allowable compressive stress magnitude, ksi.
    pub stress_compression_limit: f64,
    pub buckling: Option<Buckling>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Material {
    /// Young's modulus, ksi.
    pub elastic_modulus: f64,
    /// Weight per unit volume, lb/in^3.
    pub weight_density: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SupportSpec {
    pub node: usize,
    pub fixed_dofs: BTreeSet<Dof>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointLoad {
    pub node: usize,
    /// Force components in kips.
    pub force: [f64; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoadCase {
    pub id: usize,
    pub point_loads: Vec<PointLoad>,
}

/// Symmetric bound `|u| <= limit` on the listed node/dof pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementLimit {
    pub nodes: Vec<usize>,
    pub dofs: BTreeSet<Dof>,
    pub limit: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrussModel {
    pub name: String,
    pub nodes: Vec<Node>,
    pub elements: Vec<Element>,
    pub groups: Vec<MemberGroup>,
    pub material: Material,
    pub supports: Vec<SupportSpec>,
    pub load_cases: Vec<LoadCase>,
    pub displacement_limits: Vec<DisplacementLimit>,
}

/// One candidate design: a cross-sectional area per member group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DesignVector {
    pub areas: Vec<f64>,
}

impl DesignVector {
    pub fn new(areas: Vec<f64>) -> Self {
        Self { areas }
    }

    pub fn len(&self) -> usize {
        self.areas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.areas.is_empty()
    }
}

impl From<Vec<f64>> for DesignVector {
    fn from(areas: Vec<f64>) -> Self {
        Self { areas }
    }
}

/// Per-variable box bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len(), "bound dimensions differ");
        Self { lower, upper }
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn range(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }

    #[inline]
    pub fn clamp_one(&self, i: usize, v: f64) -> f64 {
        if v.is_nan() {
            self.lower[i]
        } else {
            v.clamp(self.lower[i], self.upper[i])
        }
    }

    pub fn contains(&self, design: &DesignVector) -> bool {
        design
            .areas
            .iter()
            .enumerate()
            .all(|(i, &a)| a >= self.lower[i] && a <= self.upper[i])
    }
}

/// A single violated model invariant.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ModelIssue {
    #[error("{what} {id} references missing {target} {missing}")]
    DanglingReference {
        what: &'static str,
        id: usize,
        target: &'static str,
        missing: usize,
    },
    #[error("group {group} has no elements")]
    EmptyGroup { group: usize },
    #[error("element {element} has zero length")]
    ZeroLengthElement { element: usize },
    #[error("element {element} connects node {node} to itself")]
    SelfLoop { element: usize, node: usize },
    #[error("model has no free degrees of freedom")]
    NoFreeDofs,
    #[error("{what} must be positive, got {value}")]
    NonPositiveLimit { what: String, value: f64 },
    #[error("{what} ids must be contiguous from 0: found {found} at position {position}")]
    NonContiguousId {
        what: &'static str,
        position: usize,
        found: usize,
    },
    #[error("node {node} has non-finite coordinates")]
    NonFiniteCoordinate { node: usize },
    #[error("group {group}: area_min {area_min} exceeds area_max {area_max}")]
    InvertedAreaBounds { group: usize, area_min: f64, area_max: f64 },
    #[error("load case {case} applies no nonzero load")]
    EmptyLoadCase { case: usize },
    #[error("model has no load cases")]
    NoLoadCases,
}

/// Every invariant violation found by [`validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub model: String,
    pub issues: Vec<ModelIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "model '{}' failed validation:", self.model)?;
        for issue in &self.issues {
            write!(f, "\n  - {issue}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

const MIN_LENGTH: f64 = 1e-12;

fn check_ids<I: Iterator<Item = usize>>(what: &'static str, ids: I, issues: &mut Vec<ModelIssue>) {
    for (position, found) in ids.enumerate() {
        if position != found {
            issues.push(ModelIssue::NonContiguousId { what, position, found });
        }
    }
}

fn positive(what: String, value: f64, issues: &mut Vec<ModelIssue>) {
    if !(value > 0.0 && value.is_finite()) {
        issues.push(ModelIssue::NonPositiveLimit { what, value });
    }
}

/// Checks every structural invariant and returns the model unchanged when all
/// of them hold.
pub fn validate(model: TrussModel) -> Result<TrussModel, ValidationReport> {
    let issues = collect_issues(&model);
    if issues.is_empty() {
        Ok(model)
    } else {
        Err(ValidationReport {
            model: model.name.clone(),
            issues,
        })
    }
}

/// Like [`validate`] but borrows the model.
pub fn collect_issues(model: &TrussModel) -> Vec<ModelIssue> {
    let mut issues = Vec::new();
    let n_nodes = model.nodes.len();
    let n_groups = model.groups.len();

    check_ids("node", model.nodes.iter().map(|n| n.id), &mut issues);
    check_ids("element", model.elements.iter().map(|e| e.id), &mut issues);
    check_ids("group", model.groups.iter().map(|g| g.id), &mut issues);
    check_ids("load case", model.load_cases.iter().map(|c| c.id), &mut issues);

    for node in &model.nodes {
        if node.coords.iter().any(|c| !c.is_finite()) {
            issues.push(ModelIssue::NonFiniteCoordinate { node: node.id });
        }
    }

    positive("elastic_modulus".into(), model.material.elastic_modulus, &mut issues);
    positive("weight_density".into(), model.material.weight_density, &mut issues);

    for g in &model.groups {
        positive(format!("group {} area_min", g.id), g.area_min, &mut issues);
        positive(format!("group {} area_max", g.id), g.area_max, &mut issues);
        if g.area_min > g.area_max {
            issues.push(ModelIssue::InvertedAreaBounds {
                group: g.id,
                area_min: g.area_min,
                area_max: g.area_max,
            });
        }
        positive(
            format!("group {} stress_tension_limit", g.id),
            g.stress_tension_limit,
            &mut issues,
        );
        positive(
            format!("group {} stress_compression_limit", g.id),
            g.stress_compression_limit,
            &mut issues,
        );
        if let Some(b) = g.buckling {
            positive(format!("group {} buckling k", g.id), b.k, &mut issues);
        }
    }

    let mut group_used = vec![false; n_groups];
    for e in &model.elements {
        let mut endpoints_ok = true;
        for node in [e.node_a, e.node_b] {
            if node >= n_nodes {
                endpoints_ok = false;
                issues.push(ModelIssue::DanglingReference {
                    what: "element",
                    id: e.id,
                    target: "node",
                    missing: node,
                });
            }
        }
        if e.group >= n_groups {
            issues.push(ModelIssue::DanglingReference {
                what: "element",
                id: e.id,
                target: "group",
                missing: e.group,
            });
        } else {
            group_used[e.group] = true;
        }
        if e.node_a == e.node_b {
            issues.push(ModelIssue::SelfLoop {
                element: e.id,
                node: e.node_a,
            });
        }
        if endpoints_ok {
            let a = model.nodes[e.node_a].coords;
            let b = model.nodes[e.node_b].coords;
            let len = distance(a, b);
            if !(len >= MIN_LENGTH) {
                issues.push(ModelIssue::ZeroLengthElement { element: e.id });
            }
        }
    }
    for (group, used) in group_used.iter().enumerate() {
        if !used {
            issues.push(ModelIssue::EmptyGroup { group });
        }
    }

    for s in &model.supports {
        if s.node >= n_nodes {
            issues.push(ModelIssue::DanglingReference {
                what: "support",
                id: s.node,
                target: "node",
                missing: s.node,
            });
        }
    }

    if model.load_cases.is_empty() {
        issues.push(ModelIssue::NoLoadCases);
    }
    for case in &model.load_cases {
        let mut any = false;
        for load in &case.point_loads {
            if load.node >= n_nodes {
                issues.push(ModelIssue::DanglingReference {
                    what: "load case",
                    id: case.id,
                    target: "node",
                    missing: load.node,
                });
            }
            any |= load.force.iter().any(|f| *f != 0.0);
        }
        if !any {
            issues.push(ModelIssue::EmptyLoadCase { case: case.id });
        }
    }

    for (i, lim) in model.displacement_limits.iter().enumerate() {
        positive(format!("displacement limit {i}"), lim.limit, &mut issues);
        for &node in &lim.nodes {
            if node >= n_nodes {
                issues.push(ModelIssue::DanglingReference {
                    what: "displacement limit",
                    id: i,
                    target: "node",
                    missing: node,
                });
            }
        }
    }

    let dangling = issues.iter().any(|i| matches!(i, ModelIssue::DanglingReference { .. }));
    if !dangling && model.free_dofs().is_empty() {
        issues.push(ModelIssue::NoFreeDofs);
    }

    issues
}

pub(crate) fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    let dx = b[0] - a[0];
    let dy = b[1] - a[1];
    let dz = b[2] - a[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

impl TrussModel {
    pub fn n_variables(&self) -> usize {
        self.groups.len()
    }

    pub fn is_fixed(&self, node: usize, dof: Dof) -> bool {
        self.supports
            .iter()
            .any(|s| s.node == node && s.fixed_dofs.contains(&dof))
    }

    /// Global dof indices (`3 * node + dof`) that are unrestrained and
    /// touched by at least one element with a nonzero direction component.
    ///
    /// Dofs no element can stiffen (the out-of-plane direction of a planar
    /// model, for instance) are dropped here instead of being declared as
    /// supports.
    pub fn free_dofs(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut connected = vec![false; 3 * n];
        for e in &self.elements {
            if e.node_a >= n || e.node_b >= n {
                continue;
            }
            let a = self.nodes[e.node_a].coords;
            let b = self.nodes[e.node_b].coords;
            for k in 0..3 {
                if b[k] - a[k] != 0.0 {
                    connected[3 * e.node_a + k] = true;
                    connected[3 * e.node_b + k] = true;
                }
            }
        }
        let mut fixed = vec![false; 3 * n];
        for s in &self.supports {
            if s.node < n {
                for d in &s.fixed_dofs {
                    fixed[3 * s.node + d.index()] = true;
                }
            }
        }
        (0..3 * n).filter(|&i| connected[i] && !fixed[i]).collect()
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::new(self.lower_bounds(), self.upper_bounds())
    }

    /// Per-group lower bounds.
    pub fn lower_bounds(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.area_min).collect()
    }

    pub fn upper_bounds(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.area_max).collect()
    }

    /// Clamps each area into its group bounds. Non-finite entries go to the
    /// lower bound.
    pub fn clamp(&self, design: &DesignVector) -> DesignVector {
        let areas = design
            .areas
            .iter()
            .zip(&self.groups)
            .map(|(&a, g)| {
                if a.is_finite() {
                    a.clamp(g.area_min, g.area_max)
                } else {
                    g.area_min
                }
            })
            .collect();
        DesignVector { areas }
    }

    /// Expands a per-group design into one area per element.
    pub fn element_areas(&self, design: &DesignVector) -> Vec<f64> {
        self.elements.iter().map(|e| design.areas[e.group]).collect()
    }

    /// Design with every group at its upper bound.
    pub fn max_design(&self) -> DesignVector {
        DesignVector::new(self.upper_bounds())
    }

    /// Members of each group, indexed by group id.
    pub fn group_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.groups.len()];
        for e in &self.elements {
            members[e.group].push(e.id);
        }
        members
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn two_bar() -> TrussModel {
        TrussModel {
            name: "two-bar".into(),
            nodes: vec![
                Node {
                    id: 0,
                    coords: [0.0, 0.0, 0.0],
                },
                Node {
                    id: 1,
                    coords: [100.0, 0.0, 0.0],
                },
                Node {
                    id: 2,
                    coords: [50.0, 50.0, 0.0],
                },
            ],
            elements: vec![
                Element {
                    id: 0,
                    node_a: 0,
                    node_b: 2,
                    group: 0,
                },
                Element {
                    id: 1,
                    node_a: 1,
                    node_b: 2,
                    group: 0,
                },
            ],
            groups: vec![MemberGroup {
                id: 0,
                area_min: 0.1,
                area_max: 10.0,
                stress_tension_limit: 25.0,
                stress_compression_limit: 25.0,
                buckling: None,
            }],
            material: Material {
                elastic_modulus: 10_000.0,
                weight_density: 0.1,
            },
            supports: vec![
                SupportSpec {
                    node: 0,
                    fixed_dofs: Dof::ALL.into_iter().collect(),
                },
                SupportSpec {
                    node: 1,
                    fixed_dofs: Dof::ALL.into_iter().collect(),
                },
            ],
            load_cases: vec![LoadCase {
                id: 0,
                point_loads: vec![PointLoad {
                    node: 2,
                    force: [0.0, -10.0, 0.0],
                }],
            }],
            displacement_limits: vec![],
        }
    }

    #[test]
    fn builtin_ten_bar_is_valid() {
        let model = builtin::ten_bar_case1();
        assert!(validate(model).is_ok());
    }

    #[test]
    fn self_loop_reports_zero_length_and_self_loop() {
        let mut m = two_bar();
        m.elements[0].node_b = 0;
        let report = validate(m).unwrap_err();
        assert!(report.issues.contains(&ModelIssue::ZeroLengthElement { element: 0 }));
        assert!(report.issues.contains(&ModelIssue::SelfLoop { element: 0, node: 0 }));
    }

    #[test]
    fn dangling_node_reference() {
        let mut m = builtin::ten_bar_case1();
        m.elements[3].node_b = 99;
        let report = validate(m).unwrap_err();
        assert!(report.issues.iter().any(|i| matches!(
            i,
            ModelIssue::DanglingReference {
                what: "element",
                id: 3,
                missing: 99,
                ..
            }
        )));
    }

    #[test]
    fn empty_group_and_bad_limits() {
        let mut m = two_bar();
        m.groups.push(MemberGroup {
            id: 1,
            area_min: -1.0,
            area_max: 1.0,
            stress_tension_limit: 0.0,
            stress_compression_limit: 25.0,
            buckling: None,
        });
        let report = validate(m).unwrap_err();
        assert!(report.issues.contains(&ModelIssue::EmptyGroup { group: 1 }));
        let non_positive = report
            .issues
            .iter()
            .filter(|i| matches!(i, ModelIssue::NonPositiveLimit { .. }))
            .count();
        assert_eq!(non_positive, 2);
    }

    #[test]
    fn fully_supported_model_has_no_free_dofs() {
        let mut m = two_bar();
        m.supports.push(SupportSpec {
            node: 2,
            fixed_dofs: Dof::ALL.into_iter().collect(),
        });
        let report = validate(m).unwrap_err();
        assert!(report.issues.contains(&ModelIssue::NoFreeDofs));
    }

    #[test]
    fn validate_is_idempotent_on_builtins() {
        for entry in builtin::catalog() {
            let once = validate(entry.model.clone()).expect("builtin valid");
            let twice = validate(once.clone()).expect("still valid");
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn planar_model_drops_out_of_plane_dofs() {
        let m = two_bar();
        assert_eq!(m.free_dofs(), vec![6, 7]);
    }

    #[test]
    fn group_expansion_assigns_group_area() {
        let m = builtin::seventy_two_bar();
        let design = DesignVector::new((0..m.n_variables()).map(|g| 1.0 + g as f64).collect());
        let areas = m.element_areas(&design);
        for (e, a) in m.elements.iter().zip(&areas) {
            assert_eq!(*a, design.areas[e.group]);
        }
    }

    #[test]
    fn clamp_respects_bounds_and_non_finite() {
        let m = two_bar();
        let d = m.clamp(&DesignVector::new(vec![f64::NAN]));
        assert_eq!(d.areas, vec![0.1]);
        let d = m.clamp(&DesignVector::new(vec![50.0]));
        assert_eq!(d.areas, vec![10.0]);
    }
}
