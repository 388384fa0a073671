//! Shared random-model builders for the oracle and acceptance suites.
//!
//! Everything here plants a known feasible point first and derives the
//! right-hand sides from it, so feasibility is guaranteed by construction
//! and never depends on the solver under test.
//!
//! Each integration test binary compiles this module independently and
//! uses a different subset of it, so unused-item lints are suppressed.
#![allow(dead_code)]

use regret_core::budget::Budget;
use regret_core::lp::{
    solve_lp, solve_milp, Constraint, LinearProgram, LpStatus, MilpStatus,
    MixedIntegerProgram, Relation, Sense,
};
use regret_core::rng::Rng;
use regret_core::rrsp::{compute_beta, Arc, IntervalDigraph};
use regret_core::rsc::{generate_synthetic_scp, IntervalCoverProblem};

const TOL: f64 = 1e-6;

fn feasible_point(lp: &LinearProgram, x: &[f64]) -> Result<(), String> {
    for (j, &v) in x.iter().enumerate() {
        if v < lp.lower[j] - TOL || v > lp.upper[j] + TOL {
            return Err(format!("x[{j}] = {v} violates its bounds"));
        }
    }
    for (i, row) in lp.constraints.iter().enumerate() {
        let lhs: f64 = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        let scale = TOL * (1.0 + row.rhs.abs());
        let ok = match row.relation {
            Relation::Le => lhs <= row.rhs + scale,
            Relation::Ge => lhs >= row.rhs - scale,
            Relation::Eq => (lhs - row.rhs).abs() <= scale,
        };
        if !ok {
            return Err(format!("row {i} violated: lhs {lhs} vs rhs {}", row.rhs));
        }
    }
    Ok(())
}

/// Solve one planted-feasible LP and verify optimality certificates:
/// primal feasibility, strong duality, dual sign conventions, and
/// complementary slackness on both rows and reduced costs.
pub fn check_lp_certificates(lp: &LinearProgram, planted: &[f64]) -> Result<(), String> {
    let sol = solve_lp(lp).map_err(|e| format!("solver error: {e}"))?;
    if sol.status != LpStatus::Optimal {
        return Err(format!("expected Optimal, got {:?}", sol.status));
    }
    feasible_point(lp, &sol.primal)?;

    let planted_cost: f64 = lp.objective.iter().zip(planted).map(|(c, x)| c * x).sum();
    if sol.objective > planted_cost + TOL * (1.0 + planted_cost.abs()) {
        return Err(format!(
            "objective {} worse than the planted point {planted_cost}",
            sol.objective
        ));
    }

    let gap = (sol.objective - sol.dual_objective).abs();
    if gap > TOL * (1.0 + sol.objective.abs()) {
        return Err(format!(
            "duality gap {gap}: primal {} vs dual {}",
            sol.objective, sol.dual_objective
        ));
    }

    // Sign conventions for a minimizing LP.
    for (i, row) in lp.constraints.iter().enumerate() {
        let y = sol.duals[i];
        let bad = match row.relation {
            Relation::Le => y > TOL,
            Relation::Ge => y < -TOL,
            Relation::Eq => false,
        };
        if bad {
            return Err(format!("dual {y} has the wrong sign on row {i}"));
        }
        let lhs: f64 = row.coeffs.iter().zip(&sol.primal).map(|(a, v)| a * v).sum();
        let slack = row.rhs - lhs;
        if (y * slack).abs() > TOL * (1.0 + y.abs()) * (1.0 + row.rhs.abs()) {
            return Err(format!(
                "complementary slackness broken on row {i}: y {y}, slack {slack}"
            ));
        }
    }

    // Reduced costs: nonnegative at optimality (variables sit at their
    // zero lower bounds when positive-priced) and orthogonal to x.
    for j in 0..lp.num_vars() {
        let reduced: f64 = lp.objective[j]
            - lp.constraints
                .iter()
                .zip(&sol.duals)
                .map(|(row, y)| row.coeffs[j] * y)
                .sum::<f64>();
        if reduced < -1e-5 {
            return Err(format!("reduced cost {reduced} negative on variable {j}"));
        }
        if (reduced * sol.primal[j]).abs() > 1e-5 * (1.0 + reduced.abs()) * (1.0 + sol.primal[j]) {
            return Err(format!(
                "reduced-cost slackness broken on variable {j}: r {reduced}, x {}",
                sol.primal[j]
            ));
        }
    }
    Ok(())
}

/// Solve one all-binary MILP and verify it against exhaustive enumeration
/// of the 2^n assignments.
pub fn check_milp_against_enumeration(mip: &MixedIntegerProgram) -> Result<(), String> {
    let res = solve_milp(mip, &Budget::unlimited()).map_err(|e| format!("solver error: {e}"))?;
    let oracle = enumerate_binary_optimum(mip);
    match (&oracle, res.status) {
        (None, MilpStatus::Infeasible) => Ok(()),
        (None, other) => Err(format!("oracle says infeasible, solver says {other:?}")),
        (Some((best, _)), MilpStatus::Optimal) => {
            let got = res.objective.ok_or("optimal result without objective")?;
            if (got - best).abs() > TOL * (1.0 + best.abs()) {
                return Err(format!("objective {got} vs enumerated optimum {best}"));
            }
            let x = res.incumbent.as_ref().ok_or("optimal result without incumbent")?;
            for (j, v) in x.iter().enumerate() {
                if (v - v.round()).abs() > TOL {
                    return Err(format!("incumbent x[{j}] = {v} not integral"));
                }
            }
            feasible_point(&mip.lp, x)
        }
        (Some(_), other) => Err(format!("oracle says feasible, solver says {other:?}")),
    }
}

/// Random bounded-feasible LP plus its planted feasible point. Costs are
/// nonnegative and variables are nonnegative, so a minimizing LP is
/// always bounded; right-hand sides are offset from the planted point by
/// relation-appropriate slack.
pub fn random_feasible_lp(rng: &mut Rng) -> (LinearProgram, Vec<f64>) {
    let n = 2 + rng.below(4) as usize;
    let m = 1 + rng.below(4) as usize;
    let planted: Vec<f64> = (0..n).map(|_| rng.range_i64(0, 5) as f64).collect();
    let objective: Vec<f64> = (0..n).map(|_| rng.range_i64(0, 10) as f64).collect();
    let mut constraints = Vec::with_capacity(m);
    for _ in 0..m {
        let coeffs: Vec<f64> = (0..n).map(|_| rng.range_i64(-3, 3) as f64).collect();
        let at_planted: f64 = coeffs.iter().zip(&planted).map(|(a, x)| a * x).sum();
        let (relation, rhs) = match rng.below(3) {
            0 => (Relation::Le, at_planted + rng.range_i64(0, 4) as f64),
            1 => (Relation::Ge, at_planted - rng.range_i64(0, 4) as f64),
            _ => (Relation::Eq, at_planted),
        };
        constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }
    let lp = LinearProgram {
        sense: Sense::Minimize,
        objective,
        constraints,
        lower: vec![0.0; n],
        upper: vec![f64::INFINITY; n],
    };
    (lp, planted)
}

/// Random binary MILP with up to 12 variables. Usually feasible (the
/// right-hand sides are derived from a planted 0/1 point); roughly one in
/// five draws skips the planting and may come out infeasible.
pub fn random_binary_milp(rng: &mut Rng) -> MixedIntegerProgram {
    let n = 2 + rng.below(11) as usize;
    let m = 1 + rng.below(5) as usize;
    let plant = rng.below(5) != 0;
    let planted: Vec<f64> = (0..n).map(|_| rng.below(2) as f64).collect();
    let objective: Vec<f64> = (0..n).map(|_| rng.range_i64(-10, 10) as f64).collect();
    let mut constraints = Vec::with_capacity(m);
    for _ in 0..m {
        let coeffs: Vec<f64> = (0..n).map(|_| rng.range_i64(-5, 5) as f64).collect();
        let relation = match rng.below(3) {
            0 => Relation::Le,
            1 => Relation::Ge,
            _ => Relation::Eq,
        };
        let rhs = if plant {
            let at_planted: f64 = coeffs.iter().zip(&planted).map(|(a, x)| a * x).sum();
            match relation {
                Relation::Le => at_planted + rng.range_i64(0, 3) as f64,
                Relation::Ge => at_planted - rng.range_i64(0, 3) as f64,
                Relation::Eq => at_planted,
            }
        } else {
            rng.range_i64(-6, 6) as f64
        };
        constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }
    let sense = if rng.below(2) == 0 {
        Sense::Minimize
    } else {
        Sense::Maximize
    };
    MixedIntegerProgram {
        lp: LinearProgram {
            sense,
            objective,
            constraints,
            lower: vec![0.0; n],
            upper: vec![1.0; n],
        },
        binaries: (0..n).collect(),
    }
}

/// Exhaustive optimum of a pure-binary model: best objective and an
/// argmin (first in mask order), or None when no assignment is feasible.
pub fn enumerate_binary_optimum(mip: &MixedIntegerProgram) -> Option<(f64, Vec<f64>)> {
    let n = mip.lp.num_vars();
    assert!(n < 26, "enumeration oracle called on an oversized model");
    assert_eq!(mip.binaries.len(), n, "oracle expects all-binary models");
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0usize..(1 << n) {
        let x: Vec<f64> = (0..n).map(|j| ((mask >> j) & 1) as f64).collect();
        let ok = mip.lp.constraints.iter().all(|row| {
            let lhs: f64 = row.coeffs.iter().zip(&x).map(|(a, v)| a * v).sum();
            match row.relation {
                Relation::Le => lhs <= row.rhs + 1e-9,
                Relation::Ge => lhs >= row.rhs - 1e-9,
                Relation::Eq => (lhs - row.rhs).abs() <= 1e-9,
            }
        });
        if !ok {
            continue;
        }
        let obj: f64 = mip.lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        let better = match (&best, mip.lp.sense) {
            (None, _) => true,
            (Some((b, _)), Sense::Minimize) => obj < *b - 1e-12,
            (Some((b, _)), Sense::Maximize) => obj > *b + 1e-12,
        };
        if better {
            best = Some((obj, x));
        }
    }
    best
}

/// Random connected interval digraph with `4..=max_vertices` vertices, a
/// guaranteed origin-to-target spine, a few extra arcs, and a resource
/// budget 10% above the minimum consumption (so at least the spine or a
/// cheaper route is feasible). `max_arcs` truncates the arc list to keep
/// extreme-scenario enumeration affordable.
pub fn random_tiny_rrsp(rng: &mut Rng, max_vertices: usize, max_arcs: usize) -> IntervalDigraph {
    assert!(max_vertices >= 4);
    let v = 4 + rng.below((max_vertices - 3) as u64) as usize;
    let origin = 0;
    let target = v - 1;

    // Spine through a random subset of the interior, in random order.
    let mut interior: Vec<usize> = (1..target).collect();
    for i in (1..interior.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        interior.swap(i, j);
    }
    interior.truncate(rng.below(interior.len() as u64 + 1) as usize);
    let mut stops = vec![origin];
    stops.extend(&interior);
    stops.push(target);

    let mut arcs = Vec::new();
    let push_arc = |rng: &mut Rng, tail: usize, head: usize, arcs: &mut Vec<Arc>| {
        let lower = rng.range_i64(0, 8);
        let upper = rng.range_i64(lower, lower + 6);
        let resource = rng.range_i64(0, 4);
        arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
            resource,
        });
    };
    for w in stops.windows(2) {
        push_arc(rng, w[0], w[1], &mut arcs);
    }
    let extras = rng.below(2 * v as u64) as usize;
    for _ in 0..extras {
        let tail = rng.below(v as u64) as usize;
        let head = rng.below(v as u64) as usize;
        if tail == head || tail == target || head == origin {
            continue;
        }
        push_arc(rng, tail, head, &mut arcs);
    }
    // Never cut into the spine: connectivity is the one guarantee.
    arcs.truncate(max_arcs.max(stops.len() - 1));

    let g = IntervalDigraph::new(v, arcs, origin, target, 0).expect("valid construction");
    let beta = compute_beta(&g).expect("spine guarantees connectivity");
    IntervalDigraph::new(v, g.arcs().to_vec(), origin, target, beta)
        .expect("valid construction")
}

/// Plain shortest-path instance: zero resources, zero budget, so the
/// classical relaxation has a totally unimodular flow matrix.
pub fn random_plain_rsp(rng: &mut Rng, max_vertices: usize) -> IntervalDigraph {
    let g = random_tiny_rrsp(rng, max_vertices, usize::MAX);
    let arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .map(|a| Arc {
            resource: 0,
            ..a.clone()
        })
        .collect();
    IntervalDigraph::new(g.vertex_count(), arcs, g.origin(), g.target(), 0)
        .expect("valid construction")
}

/// Random interval covering instance with `3..=max_cols` columns and a
/// small row count; every row is coverable by construction.
pub fn random_tiny_rsc(rng: &mut Rng, max_cols: usize) -> IntervalCoverProblem {
    assert!(max_cols >= 3);
    let cols = 3 + rng.below((max_cols - 2) as u64) as usize;
    let rows = 2 + rng.below(4) as usize;
    let base = generate_synthetic_scp(rows, cols, 0.4, 10, rng.next_u64())
        .expect("parameters are in range");
    let mut lower = Vec::with_capacity(cols);
    let mut upper = Vec::with_capacity(cols);
    for _ in 0..cols {
        let l = rng.range_i64(0, 8);
        let u = rng.range_i64(l, l + 6);
        lower.push(l);
        upper.push(u);
    }
    IntervalCoverProblem::new(base.matrix().clone(), lower, upper).expect("valid construction")
}
