//! Optimization models for set covering: the classical formulation and
//! the dual-embedding heuristic model.

use crate::lp::{Constraint, LinearProgram, MixedIntegerProgram, Relation, Sense};
use crate::regret::{RobustProblem, Scenario};
use crate::rsc::IntervalCoverProblem;

/// Classical set covering under a fixed scenario: binary column choices,
/// one covering row per matrix row.
pub fn build_i2(p: &IntervalCoverProblem, scenario: &Scenario) -> MixedIntegerProgram {
    let n = p.num_cols();
    let lp = LinearProgram {
        sense: Sense::Minimize,
        objective: scenario.costs.clone(),
        constraints: p.feasibility_rows(),
        lower: vec![0.0; n],
        upper: vec![1.0; n],
    };
    MixedIntegerProgram {
        lp,
        binaries: (0..n).collect(),
    }
}

/// Heuristic model embedding the dual of the covering LP relaxation.
///
/// Variables: one binary `y_j` per column, then one continuous `lambda_i`
/// per row with `lambda_i >= 0`. The objective `sum u_j y_j - sum
/// lambda_i` upper-bounds the robustness cost of the covering selected by
/// `y`; the dual rows cap each column's dual load at its cost in the
/// scenario induced by `y`:
///
/// ```text
/// sum_{i covered by j} lambda_i <= l_j + (u_j - l_j) y_j
/// ```
pub fn build_h2(p: &IntervalCoverProblem) -> MixedIntegerProgram {
    let n = p.num_cols();
    let m = p.num_rows();
    let nvars = n + m;
    let lambda = |i: usize| n + i;

    let mut objective = vec![0.0; nvars];
    for j in 0..n {
        objective[j] = p.intervals().upper()[j] as f64;
    }
    for i in 0..m {
        objective[lambda(i)] = -1.0;
    }

    let mut constraints: Vec<Constraint> = p.feasibility_rows();
    for row in &mut constraints {
        row.coeffs.resize(nvars, 0.0);
    }
    for j in 0..n {
        let mut coeffs = vec![0.0; nvars];
        for &i in p.matrix().col(j) {
            coeffs[lambda(i)] = 1.0;
        }
        coeffs[j] = -(p.intervals().width(j) as f64);
        constraints.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs: p.intervals().lower()[j] as f64,
        });
    }

    let mut upper = vec![f64::INFINITY; nvars];
    for u in upper.iter_mut().take(n) {
        *u = 1.0;
    }
    let lp = LinearProgram {
        sense: Sense::Minimize,
        objective,
        constraints,
        lower: vec![0.0; nvars],
        upper,
    };
    MixedIntegerProgram {
        lp,
        binaries: (0..n).collect(),
    }
}
