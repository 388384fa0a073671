//! Generic machinery for interval min-max regret optimization.
//!
//! A problem instance fixes a ground set of n items with interval costs
//! `[l_i, u_i]` and a feasible set of binary selections. The regret of a
//! selection `y` under a cost scenario `c` is `c.y - opt(c)`, and the
//! robustness cost of `y` is its worst-case regret over the scenario box.
//! That maximum is always attained at the scenario induced by `y` itself
//! (every chosen item at its upper bound, every other item at its lower
//! bound), which is what makes the problem tractable to attack: evaluating
//! a candidate costs one classical solve.
//!
//! Problems plug in through [`RobustProblem`]; the algorithms in
//! [`algorithms`](crate::regret::algorithms) are written against that trait
//! only.

pub mod algorithms;

use std::time::Duration;

use crate::budget::Budget;
use crate::lp::{Constraint, LpError, MixedIntegerProgram, Relation};

/// Interval costs, one `[lower_i, upper_i]` pair per item, with
/// `0 <= lower_i <= upper_i` enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCostVector {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl IntervalCostVector {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self, RegretError> {
        if lower.len() != upper.len() {
            return Err(RegretError::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (i, (&l, &u)) in lower.iter().zip(&upper).enumerate() {
            if l < 0 || l > u {
                return Err(RegretError::BadInterval { index: i, lower: l, upper: u });
            }
        }
        Ok(IntervalCostVector { lower, upper })
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    /// Width `u_i - l_i` of interval `i`.
    pub fn width(&self, i: usize) -> i64 {
        self.upper[i] - self.lower[i]
    }
}

/// A single cost realization drawn from the interval box.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub costs: Vec<f64>,
}

impl Scenario {
    pub fn total_for(&self, y: &[u8]) -> f64 {
        self.costs
            .iter()
            .zip(y)
            .map(|(c, &v)| if v != 0 { *c } else { 0.0 })
            .sum()
    }
}

/// Scenario induced by `y`: chosen items at their upper bound, everything
/// else at its lower bound. The worst case for `y` is attained here.
pub fn induced_scenario(y: &[u8], intervals: &IntervalCostVector) -> Result<Scenario, RegretError> {
    if y.len() != intervals.len() {
        return Err(RegretError::DimensionMismatch {
            expected: intervals.len(),
            got: y.len(),
        });
    }
    let costs = y
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if v != 0 {
                intervals.upper()[i] as f64
            } else {
                intervals.lower()[i] as f64
            }
        })
        .collect();
    Ok(Scenario { costs })
}

/// Scenario with every item at its interval midpoint. Midpoints of integer
/// intervals are halves, which f64 represents exactly.
pub fn midpoint_scenario(intervals: &IntervalCostVector) -> Scenario {
    let costs = intervals
        .lower()
        .iter()
        .zip(intervals.upper())
        .map(|(&l, &u)| (l + u) as f64 / 2.0)
        .collect();
    Scenario { costs }
}

/// Scenario with every item at its upper bound.
pub fn worst_case_scenario(intervals: &IntervalCostVector) -> Scenario {
    Scenario {
        costs: intervals.upper().iter().map(|&u| u as f64).collect(),
    }
}

/// Result of one classical (single-scenario) solve.
#[derive(Debug, Clone)]
pub struct ClassicalSolution {
    pub solution: Vec<u8>,
    pub objective: f64,
}

/// A combinatorial problem exposed to the regret algorithms.
///
/// Implementations must keep all views consistent: `solve_classical`,
/// `feasibility_rows`, and `enumerate_feasible` all describe the same
/// feasible set, and `heuristic_mip` puts the `n` selection variables
/// first, in item order, binary.
pub trait RobustProblem {
    fn intervals(&self) -> &IntervalCostVector;

    /// Exact classical solve under one scenario.
    fn solve_classical(
        &self,
        scenario: &Scenario,
        budget: &Budget,
    ) -> Result<ClassicalSolution, RegretError>;

    /// Linear rows over the selection variables describing the feasible
    /// set; used to assemble master problems and to vet candidate
    /// solutions.
    fn feasibility_rows(&self) -> Vec<Constraint>;

    /// The duality-based heuristic model for this problem. Selection
    /// variables first, then whatever continuous machinery the model needs.
    fn heuristic_mip(&self) -> MixedIntegerProgram;

    /// Every feasible selection, each exactly once, in a deterministic
    /// order. Refuses with `CapExceeded` when there are more than `cap`.
    fn enumerate_feasible(&self, cap: usize) -> Result<Vec<Vec<u8>>, RegretError>;

    /// Post-process a selection pulled out of a MILP incumbent (for
    /// example, strip disconnected zero-cost cycles off a path). Identity
    /// by default.
    fn decode_solution(&self, y: Vec<u8>) -> Result<Vec<u8>, RegretError> {
        Ok(y)
    }
}

/// True iff `y` satisfies every feasibility row within a small tolerance.
pub fn satisfies_rows(rows: &[Constraint], y: &[u8]) -> bool {
    rows.iter().all(|row| {
        let lhs: f64 = row
            .coeffs
            .iter()
            .zip(y)
            .map(|(a, &v)| a * v as f64)
            .sum();
        match row.relation {
            Relation::Le => lhs <= row.rhs + 1e-6,
            Relation::Ge => lhs >= row.rhs - 1e-6,
            Relation::Eq => (lhs - row.rhs).abs() <= 1e-6,
        }
    })
}

/// Worst-case regret of `y`, as an exact integer.
///
/// Costs one classical solve in the scenario induced by `y`.
pub fn robustness_cost<P: RobustProblem + ?Sized>(
    y: &[u8],
    problem: &P,
    budget: &Budget,
) -> Result<i64, RegretError> {
    Ok(regret_with_witness(y, problem, budget)?.0)
}

/// Like [`robustness_cost`] but also returns the classical optimum of the
/// induced scenario, which Benders reuses as its next cut.
pub fn regret_with_witness<P: RobustProblem + ?Sized>(
    y: &[u8],
    problem: &P,
    budget: &Budget,
) -> Result<(i64, ClassicalSolution), RegretError> {
    let intervals = problem.intervals();
    if y.len() != intervals.len() {
        return Err(RegretError::DimensionMismatch {
            expected: intervals.len(),
            got: y.len(),
        });
    }
    if !satisfies_rows(&problem.feasibility_rows(), y) {
        return Err(RegretError::InfeasibleSolution);
    }
    let scenario = induced_scenario(y, intervals)?;
    let own_cost = scenario.total_for(y);
    let best = problem.solve_classical(&scenario, budget)?;
    let regret = own_cost - best.objective;
    let rounded = regret.round();
    debug_assert!(
        (regret - rounded).abs() < 1e-6,
        "regret {regret} is not integral"
    );
    debug_assert!(rounded >= 0.0, "negative regret {regret}");
    Ok((rounded.max(0.0) as i64, best))
}

/// Which algorithm produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Amu,
    Benders,
    Lph,
    BruteForce,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Amu => "amu",
            Algorithm::Benders => "benders",
            Algorithm::Lph => "lph",
            Algorithm::BruteForce => "brute",
        }
    }
}

/// How a solve ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The reported solution is a proven robust optimum.
    Proved,
    /// The reported solution is a genuine upper bound with no optimality
    /// claim.
    HeuristicUb,
    /// The time budget ran out; the report carries the best of what was
    /// evaluated before that.
    TimedOut,
}

/// Outcome of a robust solve. `robustness_cost` is always the true,
/// re-evaluated worst-case regret of `solution`, never a model objective.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub solution: Vec<u8>,
    pub robustness_cost: i64,
    /// Proven lower bound on the robust optimum; only exact methods set it.
    pub lower_bound: Option<i64>,
    /// Lower bounds per master iteration (Benders only; nondecreasing).
    pub lower_bound_history: Vec<i64>,
    /// Master iterations / cuts for Benders, node count for the heuristic
    /// MILP, candidate count for brute force, classical solves for AMU.
    pub iterations: u64,
    pub wall_time: Duration,
    pub status: SolveStatus,
    /// Raw heuristic model objective (LPH only); an upper bound on the
    /// reported robustness cost up to duality tolerance.
    pub heuristic_objective: Option<f64>,
}

#[derive(Debug, Clone)]
pub enum RegretError {
    DimensionMismatch { expected: usize, got: usize },
    BadInterval { index: usize, lower: i64, upper: i64 },
    /// The feasible set is empty (or a classical subproblem was).
    InfeasibleProblem,
    /// A caller-supplied selection is not feasible.
    InfeasibleSolution,
    /// The time budget expired before any usable answer existed.
    Timeout,
    /// Enumeration would exceed the caller's cap.
    CapExceeded { cap: usize },
    /// Structural problem in instance data.
    BadInstance(String),
    Lp(LpError),
}

impl std::fmt::Display for RegretError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegretError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            RegretError::BadInterval { index, lower, upper } => {
                write!(f, "bad interval [{lower}, {upper}] at index {index}")
            }
            RegretError::InfeasibleProblem => write!(f, "the feasible set is empty"),
            RegretError::InfeasibleSolution => write!(f, "the supplied solution is infeasible"),
            RegretError::Timeout => write!(f, "time budget expired"),
            RegretError::CapExceeded { cap } => {
                write!(f, "feasible set larger than the enumeration cap {cap}")
            }
            RegretError::BadInstance(msg) => write!(f, "bad instance: {msg}"),
            RegretError::Lp(e) => write!(f, "lp engine: {e}"),
        }
    }
}

impl std::error::Error for RegretError {}

impl From<LpError> for RegretError {
    fn from(e: LpError) -> Self {
        RegretError::Lp(e)
    }
}
