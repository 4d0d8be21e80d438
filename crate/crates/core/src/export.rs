//! Convergence tables and result documents.

use std::fmt::Write as _;

use serde::Serialize;

use crate::fem::{analyze, AnalysisError};
use crate::hybrid::RunRecord;
use crate::model::{DesignVector, TrussModel};
use crate::penalty::{constraint_margins, evaluate_constraints, ConstraintMargin};

pub const CONVERGENCE_HEADER: &str = "generation,best_F,mean_F,best_feasible_weight,evaluations,sa_ran";

/// Slack under which a design counts as feasible in reports.
pub const FEASIBILITY_SLACK: f64 = 0.005;

/// One CSV row per recorded generation. The weight column is empty until a
/// feasible design has been found.
pub fn convergence_csv(record: &RunRecord) -> String {
    let mut out = String::from(CONVERGENCE_HEADER);
    out.push('\n');
    for r in &record.rows {
        let feasible = r.best_feasible_weight.map(|w| w.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.generation, r.best_f, r.mean_f, feasible, r.evaluations, r.sa_ran
        );
    }
    out
}

/// Checked design with every constraint margin.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DesignReport {
    pub model: String,
    pub areas: DesignVector,
    pub weight: f64,
    /// No constraint violated at all.
    pub feasible: bool,
    /// No normalized violation above [`FEASIBILITY_SLACK`].
    pub feasible_within_slack: bool,
    pub max_violation: f64,
    pub total_violation: f64,
    pub margins: Vec<ConstraintMargin>,
}

/// Analyzes `design` (clamped to bounds) from scratch.
pub fn design_report(model: &TrussModel, design: &DesignVector) -> Result<DesignReport, AnalysisError> {
    let design = model.clamp(design);
    let result = analyze(model, &design)?;
    let report = evaluate_constraints(model, &result);
    Ok(DesignReport {
        model: model.name.clone(),
        weight: result.weight,
        feasible: report.feasible,
        feasible_within_slack: report.feasible_within(FEASIBILITY_SLACK),
        max_violation: report.max_violation(),
        total_violation: report.total,
        margins: constraint_margins(model, &result),
        areas: design,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    pub seed: u64,
    pub generations: u64,
    pub evaluations: u64,
    pub wall_time_seconds: f64,
    /// Lightest feasible design found, re-analyzed.
    pub best_feasible: Option<DesignReport>,
    /// Best individual of the final population by penalized objective.
    pub best_penalized: DesignReport,
}

pub fn run_summary(model: &TrussModel, record: &RunRecord) -> Result<RunSummary, AnalysisError> {
    let best_feasible = record
        .best_feasible
        .as_ref()
        .map(|i| design_report(model, &i.design))
        .transpose()?;
    Ok(RunSummary {
        seed: record.seed,
        generations: record.rows.last().map_or(0, |r| r.generation),
        evaluations: record.total_evaluations,
        wall_time_seconds: record.wall_time.as_secs_f64(),
        best_feasible,
        best_penalized: design_report(model, &record.best.design)?,
    })
}
