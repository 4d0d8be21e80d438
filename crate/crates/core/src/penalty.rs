//! Constraint evaluation and the iteration-dependent exterior penalty.
//!
//! Every constraint is normalized to `g = value / limit - 1` so stress,
//! displacement and buckling violations share a scale. The violation of a
//! constraint is `S = max(g, 0)` and the penalized objective is
//! `F = W + alpha * iteration^beta * sum(S)`.

use serde::{Deserialize, Serialize};

use crate::fem::{buckling_stress_limit, AnalysisResult};
use crate::model::{Dof, TrussModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    Tension,
    Compression,
    Buckling,
    Displacement,
}

/// One evaluated constraint instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstraintMargin {
    pub kind: ConstraintKind,
    pub load_case: usize,
    /// Element id for member constraints, node id for displacements.
    pub target: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dof: Option<Dof>,
    /// Magnitude being limited (ksi or in).
    pub value: f64,
    pub limit: f64,
    /// Normalized constraint `value / limit - 1`; positive means violated.
    pub g: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintReport {
    /// `max(g, 0)` per constraint instance.
    pub violations: Vec<f64>,
    pub total: f64,
    pub feasible: bool,
}

impl ConstraintReport {
    pub fn from_violations(violations: Vec<f64>) -> Self {
        let total: f64 = violations.iter().sum();
        let feasible = violations.iter().all(|s| *s == 0.0);
        Self {
            violations,
            total,
            feasible,
        }
    }

    pub fn max_violation(&self) -> f64 {
        self.violations.iter().copied().fold(0.0, f64::max)
    }

    /// Feasible once every normalized violation is at most `slack`.
    pub fn feasible_within(&self, slack: f64) -> bool {
        self.max_violation() <= slack
    }
}

/// Penalty scale `alpha` and iteration exponent of `alpha * it^exp * sum(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PenaltyParams {
    pub alpha: f64,
    pub beta_exp: f64,
}

impl PenaltyParams {
    pub fn new(alpha: f64, beta_exp: f64) -> Self {
        assert!(alpha > 0.0, "penalty alpha must be positive");
        assert!(beta_exp >= 0.0, "penalty exponent must be non-negative");
        Self { alpha, beta_exp }
    }

    /// Scale set to the weight of the all-upper-bound design, exponent 1.
    pub fn for_model(model: &TrussModel) -> Self {
        let alpha = crate::fem::structure_weight(model, &model.max_design());
        Self::new(alpha, 1.0)
    }
}

fn visit_constraints(
    model: &TrussModel,
    result: &AnalysisResult,
    mut visit: impl FnMut(ConstraintKind, usize, usize, Option<Dof>, f64, f64),
) {
    for (case_idx, case) in result.cases.iter().enumerate() {
        for (idx, e) in model.elements.iter().enumerate() {
            let group = &model.groups[e.group];
            let sigma = case.stresses[idx];
            if sigma > 0.0 {
                visit(
                    ConstraintKind::Tension,
                    case_idx,
                    e.id,
                    None,
                    sigma,
                    group.stress_tension_limit,
                );
            } else {
                visit(
                    ConstraintKind::Compression,
                    case_idx,
                    e.id,
                    None,
                    -sigma,
                    group.stress_compression_limit,
                );
                if group.buckling.is_some() {
                    if let Ok(bound) = buckling_stress_limit(model, e, result.design.areas[e.group]) {
                        visit(ConstraintKind::Buckling, case_idx, e.id, None, -sigma, -bound);
                    }
                }
            }
        }
        for lim in &model.displacement_limits {
            for &node in &lim.nodes {
                for &dof in &lim.dofs {
                    let u = case.displacements[node][dof.index()];
                    visit(
                        ConstraintKind::Displacement,
                        case_idx,
                        node,
                        Some(dof),
                        u.abs(),
                        lim.limit,
                    );
                }
            }
        }
    }
}

/// Normalized violations of every stress, buckling and displacement
/// constraint.
pub fn evaluate_constraints(model: &TrussModel, result: &AnalysisResult) -> ConstraintReport {
    let mut violations = Vec::new();
    visit_constraints(model, result, |_, _, _, _, value, limit| {
        violations.push((value / limit - 1.0).max(0.0));
    });
    ConstraintReport::from_violations(violations)
}

/// Every constraint with its value, limit and normalized margin.
pub fn constraint_margins(model: &TrussModel, result: &AnalysisResult) -> Vec<ConstraintMargin> {
    let mut out = Vec::new();
    visit_constraints(model, result, |kind, load_case, target, dof, value, limit| {
        out.push(ConstraintMargin {
            kind,
            load_case,
            target,
            dof,
            value,
            limit,
            g: value / limit - 1.0,
        });
    });
    out
}

pub fn penalty(report: &ConstraintReport, params: &PenaltyParams, iteration: u64) -> f64 {
    debug_assert!(iteration >= 1);
    if report.feasible {
        return 0.0;
    }
    params.alpha * (iteration as f64).powf(params.beta_exp) * report.total
}

pub fn penalized_objective(weight: f64, report: &ConstraintReport, params: &PenaltyParams, iteration: u64) -> f64 {
    weight + penalty(report, params, iteration)
}
