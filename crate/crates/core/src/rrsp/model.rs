//! MILP formulations for the restricted shortest path problem.
//!
//! `build_i1` is the classical single-scenario model: unit flow from origin
//! to target plus one resource row. `build_h1` is the regret heuristic
//! model: it keeps the flow rows on the selection variables and embeds the
//! dual of the classical LP relaxation, so its optimum upper-bounds the
//! robust optimum (and matches it when the relaxation is integral, e.g.
//! with a slack resource row).

use crate::lp::{LinearProgram, MixedIntegerProgram, Relation, Sense};
use crate::regret::{RobustProblem, Scenario};
use crate::rrsp::IntervalDigraph;

/// Classical restricted shortest path as a MILP: min scenario cost over
/// unit-flow selections within the resource budget.
pub fn build_i1(g: &IntervalDigraph, scenario: &Scenario) -> MixedIntegerProgram {
    let n = g.arc_count();
    let lp = LinearProgram {
        sense: Sense::Minimize,
        objective: scenario.costs.clone(),
        constraints: g.feasibility_rows(),
        lower: vec![0.0; n],
        upper: vec![1.0; n],
    };
    MixedIntegerProgram {
        lp,
        binaries: (0..n).collect(),
    }
}

/// Heuristic regret model. Variable layout: one binary per arc, then one
/// free dual per vertex, then the nonnegative resource dual.
///
/// Objective: sum of selected upper bounds minus the dual bound
/// `lambda_t - lambda_o - beta*mu` on the induced-scenario optimum.
/// Coupling row per arc (i,j):
/// `lambda_j - lambda_i - d_ij*mu - (u_ij - l_ij)*y_ij <= l_ij`.
pub fn build_h1(g: &IntervalDigraph) -> MixedIntegerProgram {
    let n = g.arc_count();
    let v = g.vertex_count();
    let lambda = |k: usize| n + k;
    let mu = n + v;
    let total = n + v + 1;

    let mut objective = vec![0.0; total];
    for (idx, arc) in g.arcs().iter().enumerate() {
        objective[idx] = arc.upper as f64;
    }
    objective[lambda(g.target())] -= 1.0;
    objective[lambda(g.origin())] += 1.0;
    objective[mu] = g.beta() as f64;

    let mut lower = vec![0.0; total];
    let mut upper = vec![1.0; total];
    for k in 0..v {
        lower[lambda(k)] = f64::NEG_INFINITY;
        upper[lambda(k)] = f64::INFINITY;
    }
    upper[mu] = f64::INFINITY;

    let mut lp = LinearProgram {
        sense: Sense::Minimize,
        objective,
        constraints: Vec::new(),
        lower,
        upper,
    };
    for row in g.feasibility_rows() {
        let mut coeffs = row.coeffs;
        coeffs.resize(total, 0.0);
        lp.push_row(coeffs, row.relation, row.rhs);
    }
    for (idx, arc) in g.arcs().iter().enumerate() {
        let mut coeffs = vec![0.0; total];
        coeffs[lambda(arc.head)] += 1.0;
        coeffs[lambda(arc.tail)] -= 1.0;
        coeffs[mu] -= arc.resource as f64;
        coeffs[idx] -= (arc.upper - arc.lower) as f64;
        lp.push_row(coeffs, Relation::Le, arc.lower as f64);
    }
    MixedIntegerProgram {
        lp,
        binaries: (0..n).collect(),
    }
}
