//! The four robust solvers: brute force, the midpoint/worst-case
//! approximation, logic-based Benders decomposition, and the LP-dual
//! heuristic.
//!
//! All four consume a single wall-clock budget: every master solve, slave
//! solve, and robustness evaluation inside one call draws down the same
//! deadline.

use std::time::Instant;

use crate::budget::Budget;
use crate::lp::{
    solve_milp, LinearProgram, MilpStatus, MixedIntegerProgram, Relation, Sense,
};
use crate::regret::{
    midpoint_scenario, regret_with_witness, worst_case_scenario, Algorithm, RegretError,
    RobustProblem, SolveReport, SolveStatus,
};

/// Selection part of a MILP incumbent, snapped to {0,1}.
fn selection_of(incumbent: &[f64], n: usize) -> Vec<u8> {
    incumbent[..n].iter().map(|&v| v.round() as u8).collect()
}

/// Exact robust solve by full enumeration of the feasible set. Intended as
/// an oracle on small instances; refuses anything past `cap`.
pub fn brute_force_robust<P: RobustProblem + ?Sized>(
    problem: &P,
    cap: usize,
    budget: &Budget,
) -> Result<SolveReport, RegretError> {
    let start = Instant::now();
    let candidates = problem.enumerate_feasible(cap)?;
    if candidates.is_empty() {
        return Err(RegretError::InfeasibleProblem);
    }
    let mut best: Option<(i64, Vec<u8>)> = None;
    let mut evaluated = 0u64;
    for y in candidates {
        if budget.expired() {
            return Err(RegretError::Timeout);
        }
        let (r, _) = regret_with_witness(&y, problem, budget)?;
        evaluated += 1;
        if best.as_ref().map_or(true, |(b, _)| r < *b) {
            best = Some((r, y));
        }
    }
    let (cost, solution) = best.expect("candidate list was nonempty");
    Ok(SolveReport {
        algorithm: Algorithm::BruteForce,
        solution,
        robustness_cost: cost,
        lower_bound: Some(cost),
        lower_bound_history: Vec::new(),
        iterations: evaluated,
        wall_time: start.elapsed(),
        status: SolveStatus::Proved,
        heuristic_objective: None,
    })
}

/// Midpoint/worst-case 2-approximation: solve the classical problem exactly
/// under the all-upper scenario and under the midpoint scenario, evaluate
/// both candidates, keep the better one (ties go to the midpoint
/// candidate). The result is within a factor 2 of the robust optimum.
pub fn amu<P: RobustProblem + ?Sized>(
    problem: &P,
    budget: &Budget,
) -> Result<SolveReport, RegretError> {
    let start = Instant::now();
    let worst = problem.solve_classical(&worst_case_scenario(problem.intervals()), &budget.half_of_remaining())?;
    let mid = problem.solve_classical(&midpoint_scenario(problem.intervals()), &budget.half_of_remaining())?;

    let (cost, solution) = if worst.solution == mid.solution {
        let (r, _) = regret_with_witness(&mid.solution, problem, budget)?;
        (r, mid.solution)
    } else {
        let (r_worst, _) = regret_with_witness(&worst.solution, problem, budget)?;
        let (r_mid, _) = regret_with_witness(&mid.solution, problem, budget)?;
        if r_mid <= r_worst {
            (r_mid, mid.solution)
        } else {
            (r_worst, worst.solution)
        }
    };
    Ok(SolveReport {
        algorithm: Algorithm::Amu,
        solution,
        robustness_cost: cost,
        lower_bound: None,
        lower_bound_history: Vec::new(),
        iterations: 2,
        wall_time: start.elapsed(),
        status: SolveStatus::HeuristicUb,
        heuristic_objective: None,
    })
}

/// Master problem: minimize `u.y - rho` over the feasible rows plus one
/// optimality cut per known classical solution.
fn assemble_master<P: RobustProblem + ?Sized>(
    problem: &P,
    cuts: &[Vec<u8>],
) -> MixedIntegerProgram {
    let iv = problem.intervals();
    let n = iv.len();
    let rho = n;
    let mut objective: Vec<f64> = iv.upper().iter().map(|&u| u as f64).collect();
    objective.push(-1.0);
    let mut lower = vec![0.0; n + 1];
    let mut upper = vec![1.0; n + 1];
    lower[rho] = f64::NEG_INFINITY;
    upper[rho] = f64::INFINITY;
    let mut lp = LinearProgram {
        sense: Sense::Minimize,
        objective,
        constraints: Vec::new(),
        lower,
        upper,
    };
    for row in problem.feasibility_rows() {
        let mut coeffs = row.coeffs;
        coeffs.push(0.0);
        lp.push_row(coeffs, row.relation, row.rhs);
    }
    for cut in cuts {
        // rho <= sum_i (l_i + (u_i - l_i) y_i) xbar_i, linearized over y.
        let mut coeffs = vec![0.0; n + 1];
        let mut rhs = 0.0;
        for i in 0..n {
            if cut[i] != 0 {
                coeffs[i] = -(iv.width(i) as f64);
                rhs += iv.lower()[i] as f64;
            }
        }
        coeffs[rho] = 1.0;
        lp.push_row(coeffs, Relation::Le, rhs);
    }
    MixedIntegerProgram {
        lp,
        binaries: (0..n).collect(),
    }
}

/// Largest `rho` the cuts allow for a fixed selection, in exact integer
/// arithmetic.
fn tightest_cut_value(
    iv: &crate::regret::IntervalCostVector,
    cuts: &[Vec<u8>],
    y: &[u8],
) -> i64 {
    cuts.iter()
        .map(|cut| {
            (0..iv.len())
                .filter(|&i| cut[i] != 0)
                .map(|i| iv.lower()[i] + iv.width(i) * y[i] as i64)
                .sum::<i64>()
        })
        .min()
        .expect("at least one cut exists before any master solve")
}

/// Exact solve by logic-based Benders decomposition.
///
/// The first cut comes from the classical optimum under the all-upper
/// scenario. Each iteration solves the master for a candidate selection and
/// a bound, evaluates the candidate's true robustness cost with one
/// classical solve, and either proves optimality or adds the classical
/// witness as a new cut. Terminates in at most one iteration per distinct
/// classical solution.
pub fn benders<P: RobustProblem + ?Sized>(
    problem: &P,
    budget: &Budget,
) -> Result<SolveReport, RegretError> {
    let start = Instant::now();
    let iv = problem.intervals();
    let n = iv.len();

    let first = problem.solve_classical(&worst_case_scenario(iv), budget)?;
    let mut cuts: Vec<Vec<u8>> = vec![first.solution];

    let mut best: Option<(i64, Vec<u8>)> = None;
    let mut lb_global: i64 = 0;
    let mut lb_history: Vec<i64> = Vec::new();

    let timed_out = |best: Option<(i64, Vec<u8>)>,
                     lb_global: i64,
                     lb_history: Vec<i64>,
                     iters: u64,
                     start: Instant| {
        match best {
            None => Err(RegretError::Timeout),
            Some((ub, y)) => Ok(SolveReport {
                algorithm: Algorithm::Benders,
                solution: y,
                robustness_cost: ub,
                lower_bound: Some(lb_global),
                lower_bound_history: lb_history,
                iterations: iters,
                wall_time: start.elapsed(),
                status: SolveStatus::TimedOut,
                heuristic_objective: None,
            }),
        }
    };

    loop {
        // One iteration per cut: the Step-I cut counts as the first.
        let iteration = cuts.len() as u64;
        if budget.expired() {
            return timed_out(best, lb_global, lb_history, iteration, start);
        }

        let master = assemble_master(problem, &cuts);
        let res = solve_milp(&master, budget)?;
        match res.status {
            MilpStatus::Infeasible => return Err(RegretError::InfeasibleProblem),
            MilpStatus::Optimal => {}
            MilpStatus::Feasible | MilpStatus::TimedOut => {
                // No proven master optimum, so no per-iteration bound; the
                // master's own dual bound still bounds the robust optimum.
                if res.best_bound.is_finite() {
                    lb_global = lb_global.max((res.best_bound - 1e-6).ceil() as i64);
                }
                return timed_out(best, lb_global, lb_history, iteration, start);
            }
        }
        let incumbent = res.incumbent.as_ref().expect("optimal master has an incumbent");
        let y = selection_of(incumbent, n);

        // The master optimum u.y - rho is a valid lower bound on the robust
        // optimum; recompute it in integer arithmetic.
        let upper_cost: i64 = (0..n).filter(|&i| y[i] != 0).map(|i| iv.upper()[i]).sum();
        let lb = upper_cost - tightest_cut_value(iv, &cuts, &y);
        debug_assert!(
            lb_history.last().map_or(true, |&prev| lb >= prev),
            "master bound decreased: {lb_history:?} then {lb}"
        );
        lb_history.push(lb);
        lb_global = lb_global.max(lb);

        let (cost, witness) = match regret_with_witness(&y, problem, budget) {
            Ok(pair) => pair,
            Err(RegretError::Timeout) => {
                return timed_out(best, lb_global, lb_history, iteration, start)
            }
            Err(e) => return Err(e),
        };
        if best.as_ref().map_or(true, |(b, _)| cost < *b) {
            best = Some((cost, y.clone()));
        }

        if lb >= cost {
            return Ok(SolveReport {
                algorithm: Algorithm::Benders,
                solution: y,
                robustness_cost: cost,
                lower_bound: Some(lb),
                lower_bound_history: lb_history,
                iterations: iteration,
                wall_time: start.elapsed(),
                status: SolveStatus::Proved,
                heuristic_objective: None,
            });
        }
        debug_assert!(
            !cuts.contains(&witness.solution),
            "duplicate cut would mean the stopping test should have fired"
        );
        cuts.push(witness.solution);
    }
}

/// LP-dual heuristic: solve one MILP that embeds the dual of the classical
/// LP relaxation, pull out its selection, and re-evaluate that selection's
/// true robustness cost. The model objective upper-bounds the true cost; on
/// problems whose classical LP relaxation is integral the heuristic is
/// exact.
pub fn lph<P: RobustProblem + ?Sized>(
    problem: &P,
    budget: &Budget,
) -> Result<SolveReport, RegretError> {
    let start = Instant::now();
    let n = problem.intervals().len();
    let mip = problem.heuristic_mip();
    let res = solve_milp(&mip, budget)?;
    let timed_out = match res.status {
        MilpStatus::Optimal | MilpStatus::Feasible => false,
        MilpStatus::TimedOut => true,
        MilpStatus::Infeasible => return Err(RegretError::InfeasibleProblem),
    };
    let incumbent = match res.incumbent.as_ref() {
        Some(x) => x,
        None => return Err(RegretError::Timeout),
    };
    let y = problem.decode_solution(selection_of(incumbent, n))?;
    let (cost, _) = regret_with_witness(&y, problem, budget)?;
    Ok(SolveReport {
        algorithm: Algorithm::Lph,
        solution: y,
        robustness_cost: cost,
        lower_bound: None,
        lower_bound_history: Vec::new(),
        iterations: res.nodes,
        wall_time: start.elapsed(),
        status: if timed_out {
            SolveStatus::TimedOut
        } else {
            SolveStatus::HeuristicUb
        },
        heuristic_objective: res.objective,
    })
}
