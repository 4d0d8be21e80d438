//! Truss sizing optimization with a hybrid genetic algorithm / simulated
//! annealing search.
//!
//! [`fem`] analyzes a [`model::TrussModel`] for a given design,
//! [`penalty`] turns constraint violations into a penalized weight, and
//! [`hybrid::run`] drives [`ga`] generations with periodic [`sa`] local
//! searches. [`builtin`] holds the classic benchmarks and [`document`] the
//! JSON model format.

pub mod builtin;
pub mod document;
pub mod export;
pub mod fem;
pub mod ga;
pub mod hybrid;
pub mod linalg;
pub mod model;
pub mod penalty;
pub mod sa;

pub use fem::{analyze, structure_weight, AnalysisError, AnalysisResult};
pub use hybrid::{run, HybridParams, RunRecord};
pub use model::{validate, DesignVector, TrussModel};
