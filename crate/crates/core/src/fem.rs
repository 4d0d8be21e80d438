//! Linear-elastic truss analysis by the direct stiffness method.
//!
//! Each element contributes `(E A / L) d d^T` on the six translational dofs of
//! its end nodes, `d` being the unit vector from `node_a` to `node_b`. Rows and
//! columns of restrained or unconnected dofs are dropped, the reduced system is
//! factored once per design and reused across load cases. Stresses are tension
//! positive.

use crate::linalg::{Cholesky, SymMatrix};
use crate::model::{distance, DesignVector, Dof, Element, LoadCase, TrussModel};

/// Pivots smaller than this fraction of the largest diagonal entry mark the
/// structure as a mechanism.
pub const SINGULAR_PIVOT_TOL: f64 = 1e-10;

const MIN_LENGTH: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("element {element} has zero length")]
    ZeroLengthElement { element: usize },
    #[error("structure is singular (pivot {pivot:e} at reduced dof {row})")]
    SingularStructure { row: usize, pivot: f64 },
    #[error("load on node {node} direction {dof} acts on a dof no member can resist")]
    UnresistedLoad { node: usize, dof: Dof },
    #[error("group {group} has no buckling constant")]
    BucklingNotEnabled { group: usize },
}

/// Response to one load case.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadCaseResult {
    /// Nodal displacements in inches; restrained dofs are exactly zero.
    pub displacements: Vec<[f64; 3]>,
    /// Axial stress per element in ksi, tension positive.
    pub stresses: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisResult {
    pub cases: Vec<LoadCaseResult>,
    /// Structure weight in pounds.
    pub weight: f64,
    /// The design that was analyzed.
    pub design: DesignVector,
}

/// Stiffness restricted to the free dofs.
#[derive(Clone, Debug)]
pub struct ReducedStiffness {
    pub matrix: SymMatrix,
    /// Global dof index (`3 * node + direction`) of each reduced row.
    pub free_dofs: Vec<usize>,
}

pub fn element_length(model: &TrussModel, element: &Element) -> Result<f64, AnalysisError> {
    let a = model.nodes[element.node_a].coords;
    let b = model.nodes[element.node_b].coords;
    let len = distance(a, b);
    if len < MIN_LENGTH {
        return Err(AnalysisError::ZeroLengthElement { element: element.id });
    }
    Ok(len)
}

/// `sum_j density * A_group(j) * L_j`.
pub fn structure_weight(model: &TrussModel, design: &DesignVector) -> f64 {
    let rho = model.material.weight_density;
    model
        .elements
        .iter()
        .map(|e| {
            let a = model.nodes[e.node_a].coords;
            let b = model.nodes[e.node_b].coords;
            rho * design.areas[e.group] * distance(a, b)
        })
        .sum()
}

/// Negative compressive bound `-K E A / L^2` for an element of a buckling
/// group.
pub fn buckling_stress_limit(model: &TrussModel, element: &Element, area: f64) -> Result<f64, AnalysisError> {
    let group = &model.groups[element.group];
    let k = group
        .buckling
        .ok_or(AnalysisError::BucklingNotEnabled { group: group.id })?
        .k;
    let len = element_length(model, element)?;
    Ok(-k * model.material.elastic_modulus * area / (len * len))
}

struct Geometry {
    lengths: Vec<f64>,
    directions: Vec<[f64; 3]>,
}

fn geometry(model: &TrussModel) -> Result<Geometry, AnalysisError> {
    let mut lengths = Vec::with_capacity(model.elements.len());
    let mut directions = Vec::with_capacity(model.elements.len());
    for e in &model.elements {
        let len = element_length(model, e)?;
        let a = model.nodes[e.node_a].coords;
        let b = model.nodes[e.node_b].coords;
        lengths.push(len);
        directions.push([(b[0] - a[0]) / len, (b[1] - a[1]) / len, (b[2] - a[2]) / len]);
    }
    Ok(Geometry { lengths, directions })
}

fn assemble(model: &TrussModel, design: &DesignVector, geo: &Geometry) -> ReducedStiffness {
    let free_dofs = model.free_dofs();
    let mut position = vec![usize::MAX; 3 * model.nodes.len()];
    for (i, &g) in free_dofs.iter().enumerate() {
        position[g] = i;
    }
    let e_mod = model.material.elastic_modulus;
    let mut k = SymMatrix::zeros(free_dofs.len());
    for (idx, e) in model.elements.iter().enumerate() {
        let axial = e_mod * design.areas[e.group] / geo.lengths[idx];
        let d = geo.directions[idx];
        // Element dofs with the sign of their end: -d at node_a, +d at node_b.
        let mut dofs = [(usize::MAX, 0.0); 6];
        for c in 0..3 {
            dofs[c] = (position[3 * e.node_a + c], -d[c]);
            dofs[3 + c] = (position[3 * e.node_b + c], d[c]);
        }
        // Each off-diagonal value is computed once and mirrored so the
        // matrix is exactly symmetric.
        for p in 0..6 {
            let (r, sr) = dofs[p];
            if r == usize::MAX || sr == 0.0 {
                continue;
            }
            for &(c, sc) in &dofs[p..] {
                if c == usize::MAX || sc == 0.0 {
                    continue;
                }
                let v = axial * sr * sc;
                k.add(r, c, v);
                if c != r {
                    k.add(c, r, v);
                }
            }
        }
    }
    ReducedStiffness { matrix: k, free_dofs }
}

/// Assembles the reduced global stiffness for `design`.
pub fn assemble_global_stiffness(model: &TrussModel, design: &DesignVector) -> Result<ReducedStiffness, AnalysisError> {
    let geo = geometry(model)?;
    Ok(assemble(model, design, &geo))
}

/// Reusable factorization for one design.
struct Solver<'m> {
    model: &'m TrussModel,
    geo: Geometry,
    stiffness: ReducedStiffness,
    chol: Cholesky,
}

impl<'m> Solver<'m> {
    fn new(model: &'m TrussModel, design: &DesignVector) -> Result<Self, AnalysisError> {
        let geo = geometry(model)?;
        let stiffness = assemble(model, design, &geo);
        let chol =
            Cholesky::factor(&stiffness.matrix, SINGULAR_PIVOT_TOL).map_err(|e| AnalysisError::SingularStructure {
                row: e.row,
                pivot: e.pivot,
            })?;
        Ok(Self {
            model,
            geo,
            stiffness,
            chol,
        })
    }

    fn load_vector(&self, case: &LoadCase) -> Result<Vec<f64>, AnalysisError> {
        let mut global = vec![0.0; 3 * self.model.nodes.len()];
        for load in &case.point_loads {
            for c in 0..3 {
                global[3 * load.node + c] += load.force[c];
            }
        }
        let mut free = vec![false; global.len()];
        for &g in &self.stiffness.free_dofs {
            free[g] = true;
        }
        for (g, &f) in global.iter().enumerate() {
            if f != 0.0 && !free[g] && !self.model.is_fixed(g / 3, Dof::ALL[g % 3]) {
                return Err(AnalysisError::UnresistedLoad {
                    node: g / 3,
                    dof: Dof::ALL[g % 3],
                });
            }
        }
        Ok(self.stiffness.free_dofs.iter().map(|&g| global[g]).collect())
    }

    fn solve(&self, case: &LoadCase) -> Result<LoadCaseResult, AnalysisError> {
        let rhs = self.load_vector(case)?;
        let reduced = self.chol.solve(&rhs);
        let mut displacements = vec![[0.0; 3]; self.model.nodes.len()];
        for (&g, &u) in self.stiffness.free_dofs.iter().zip(&reduced) {
            displacements[g / 3][g % 3] = u;
        }
        let e_mod = self.model.material.elastic_modulus;
        let stresses = self
            .model
            .elements
            .iter()
            .enumerate()
            .map(|(idx, e)| {
                let d = self.geo.directions[idx];
                let ua = displacements[e.node_a];
                let ub = displacements[e.node_b];
                let elongation: f64 = (0..3).map(|c| d[c] * (ub[c] - ua[c])).sum();
                e_mod * elongation / self.geo.lengths[idx]
            })
            .collect();
        Ok(LoadCaseResult {
            displacements,
            stresses,
        })
    }
}

pub fn solve_load_case(
    model: &TrussModel,
    design: &DesignVector,
    case: &LoadCase,
) -> Result<LoadCaseResult, AnalysisError> {
    Solver::new(model, design)?.solve(case)
}

/// Solves every load case and computes the weight.
pub fn analyze(model: &TrussModel, design: &DesignVector) -> Result<AnalysisResult, AnalysisError> {
    let solver = Solver::new(model, design)?;
    let cases = model
        .load_cases
        .iter()
        .map(|c| solver.solve(c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AnalysisResult {
        cases,
        weight: structure_weight(model, design),
        design: design.clone(),
    })
}
