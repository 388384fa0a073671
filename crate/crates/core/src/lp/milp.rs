//! Best-first branch-and-bound for 0-1 mixed-integer programs.
//!
//! Nodes are ordered by parent relaxation bound (best bound first), ties
//! broken toward deeper nodes and then lower creation id, so runs are
//! deterministic. Branching picks the most fractional binary, ties toward
//! the lowest index. No cuts, no heuristics beyond an optional caller
//! warm start.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{solve_lp_bounded, LinearProgram, LpError, LpStatus, Sense};
use crate::budget::Budget;

/// Integrality tolerance for branching and incumbent acceptance.
pub const EPS_INT: f64 = 1e-6;
/// Relative slack when comparing a node's dual bound to the incumbent;
/// a node within this of the incumbent is pruned (and the search declared
/// Optimal when it is the best node left).
pub const EPS_GAP: f64 = 1e-9;

/// Safety valve; desk-scale models never get near it.
const NODE_CAP: u64 = 10_000_000;

/// A linear program plus the set of variables restricted to {0,1}.
#[derive(Debug, Clone)]
pub struct MixedIntegerProgram {
    pub lp: LinearProgram,
    pub binaries: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilpStatus {
    Optimal,
    /// Search stopped early (node cap) with a feasible incumbent.
    Feasible,
    Infeasible,
    TimedOut,
}

/// Outcome of a branch-and-bound run. `best_bound` is a valid dual bound
/// in the model's own sense (lower bound when minimizing). `nodes` counts
/// relaxations actually solved.
#[derive(Debug, Clone)]
pub struct MilpResult {
    pub status: MilpStatus,
    pub incumbent: Option<Vec<f64>>,
    pub objective: Option<f64>,
    pub best_bound: f64,
    pub nodes: u64,
}

struct Node {
    bound: f64,
    depth: usize,
    id: u64,
    fixings: Vec<(usize, bool)>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap pops the greatest element; make that the node with the
        // smallest bound, then the deepest, then the oldest.
        other
            .bound
            .total_cmp(&self.bound)
            .then_with(|| self.depth.cmp(&other.depth))
            .then_with(|| other.id.cmp(&self.id))
    }
}

pub fn solve_milp(mip: &MixedIntegerProgram, budget: &Budget) -> Result<MilpResult, LpError> {
    solve_milp_warm(mip, budget, None)
}

/// Like [`solve_milp`] but seeded with a known feasible point, which must
/// satisfy the rows, bounds, and integrality; it becomes the initial
/// incumbent and prunes from the first node on.
pub fn solve_milp_warm(
    mip: &MixedIntegerProgram,
    budget: &Budget,
    warm: Option<&[f64]>,
) -> Result<MilpResult, LpError> {
    mip.lp.validate()?;
    let n = mip.lp.num_vars();
    for &j in &mip.binaries {
        if j >= n {
            return Err(LpError::MalformedModel(format!(
                "binary index {j} out of range for {n} variables"
            )));
        }
    }

    // Work in minimize form; flip the reported numbers at the end.
    let maximize = mip.lp.sense == Sense::Maximize;
    let mut lp = mip.lp.clone();
    if maximize {
        lp.sense = Sense::Minimize;
        for c in &mut lp.objective {
            *c = -*c;
        }
    }
    // Clip binary bounds into [0,1] once.
    for &j in &mip.binaries {
        lp.lower[j] = lp.lower[j].max(0.0);
        lp.upper[j] = lp.upper[j].min(1.0);
    }

    let mut ub = f64::INFINITY;
    let mut incumbent: Option<Vec<f64>> = None;
    if let Some(w) = warm {
        let x = validate_warm(&lp, &mip.binaries, w)?;
        ub = objective_of(&lp, &x);
        incumbent = Some(x);
    }

    let mut heap: BinaryHeap<Node> = BinaryHeap::new();
    heap.push(Node {
        bound: f64::NEG_INFINITY,
        depth: 0,
        id: 0,
        fixings: Vec::new(),
    });
    let mut next_id = 1u64;
    let mut nodes = 0u64;

    let finish = |status: MilpStatus,
                  incumbent: Option<Vec<f64>>,
                  ub: f64,
                  bound: f64,
                  nodes: u64| {
        let sign = if maximize { -1.0 } else { 1.0 };
        MilpResult {
            status,
            objective: incumbent.as_ref().map(|_| sign * ub),
            incumbent,
            best_bound: sign * bound,
            nodes,
        }
    };

    while let Some(node) = heap.pop() {
        // The heap is ordered by bound, so this node's bound is the global
        // dual bound over everything still open.
        if node.bound >= ub - EPS_GAP * (1.0 + ub.abs()) {
            return Ok(finish(
                MilpStatus::Optimal,
                incumbent,
                ub,
                node.bound.min(ub),
                nodes,
            ));
        }
        if budget.expired() {
            return Ok(finish(MilpStatus::TimedOut, incumbent, ub, node.bound, nodes));
        }
        if nodes >= NODE_CAP {
            return Ok(finish(
                if incumbent.is_some() {
                    MilpStatus::Feasible
                } else {
                    MilpStatus::TimedOut
                },
                incumbent,
                ub,
                node.bound,
                nodes,
            ));
        }

        let mut lower = lp.lower.clone();
        let mut upper = lp.upper.clone();
        for &(j, one) in &node.fixings {
            if one {
                lower[j] = 1.0;
                upper[j] = 1.0;
            } else {
                lower[j] = 0.0;
                upper[j] = 0.0;
            }
        }
        let sol = solve_lp_bounded(&lp, &lower, &upper)?;
        nodes += 1;
        match sol.status {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => return Err(LpError::UnboundedModel),
            LpStatus::Optimal => {}
        }
        if sol.objective >= ub - EPS_GAP * (1.0 + ub.abs()) {
            continue;
        }

        // Most fractional binary, ties to the lowest index.
        let mut branch: Option<(usize, f64)> = None;
        for &j in &mip.binaries {
            let frac = (sol.primal[j] - sol.primal[j].round()).abs();
            if frac > EPS_INT && branch.map_or(true, |(_, best)| frac > best) {
                branch = Some((j, frac));
            }
        }

        match branch {
            None => {
                let mut x = sol.primal.clone();
                for &j in &mip.binaries {
                    x[j] = x[j].round();
                }
                let obj = objective_of(&lp, &x);
                if obj < ub {
                    ub = obj;
                    incumbent = Some(x);
                }
            }
            Some((j, _)) => {
                for one in [false, true] {
                    let mut fixings = node.fixings.clone();
                    fixings.push((j, one));
                    heap.push(Node {
                        bound: sol.objective,
                        depth: node.depth + 1,
                        id: next_id,
                        fixings,
                    });
                    next_id += 1;
                }
            }
        }
    }

    if incumbent.is_some() {
        Ok(finish(MilpStatus::Optimal, incumbent, ub, ub, nodes))
    } else {
        Ok(finish(
            MilpStatus::Infeasible,
            None,
            f64::INFINITY,
            f64::INFINITY,
            nodes,
        ))
    }
}

fn objective_of(lp: &LinearProgram, x: &[f64]) -> f64 {
    lp.objective.iter().zip(x).map(|(c, v)| c * v).sum()
}

fn validate_warm(
    lp: &LinearProgram,
    binaries: &[usize],
    w: &[f64],
) -> Result<Vec<f64>, LpError> {
    if w.len() != lp.num_vars() {
        return Err(LpError::MalformedModel(
            "warm start has the wrong number of variables".into(),
        ));
    }
    let mut x = w.to_vec();
    for &j in binaries {
        if (x[j] - x[j].round()).abs() > EPS_INT {
            return Err(LpError::MalformedModel(format!(
                "warm start is fractional on binary {j}"
            )));
        }
        x[j] = x[j].round();
    }
    for (j, &v) in x.iter().enumerate() {
        if v < lp.lower[j] - 1e-7 || v > lp.upper[j] + 1e-7 {
            return Err(LpError::MalformedModel(format!(
                "warm start violates bounds on variable {j}"
            )));
        }
    }
    for (i, row) in lp.constraints.iter().enumerate() {
        let lhs: f64 = row.coeffs.iter().zip(&x).map(|(a, v)| a * v).sum();
        let tol = 1e-6 * (1.0 + row.rhs.abs());
        let ok = match row.relation {
            super::Relation::Le => lhs <= row.rhs + tol,
            super::Relation::Ge => lhs >= row.rhs - tol,
            super::Relation::Eq => (lhs - row.rhs).abs() <= tol,
        };
        if !ok {
            return Err(LpError::MalformedModel(format!(
                "warm start violates row {i}"
            )));
        }
    }
    Ok(x)
}
