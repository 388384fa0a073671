//! Linear and 0-1 mixed-integer programming.
//!
//! A deliberately small, correctness-first engine: two-phase primal simplex
//! on a dense standard-form tableau, and a best-first branch-and-bound
//! wrapper for models whose integer variables are all binary. There are no
//! cutting planes and no presolve beyond dropping all-zero rows; every model
//! this crate builds is desk-scale, so the dense tableau is the simplest
//! thing that is fast enough.
//!
//! Dual values are read from the final basis. Sign convention, stated once:
//! in a minimization, the dual of a `>=` row is nonnegative, the dual of a
//! `<=` row is nonpositive, and the dual of an `=` row is free. In a
//! maximization all three flip. `dual_objective` is computed against the
//! full internal row system (including bound rows introduced for finite
//! upper bounds), so strong duality can be checked as
//! `|objective - dual_objective| <= eps`.

mod milp;
mod simplex;

pub use milp::{solve_milp, solve_milp_warm, MilpResult, MilpStatus, MixedIntegerProgram};

/// Optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Constraint relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// One dense constraint row `coeffs . x  (relation)  rhs`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// A linear program over continuous variables.
///
/// `lower[j]` may be finite or `NEG_INFINITY` (free variable); `upper[j]`
/// may be finite or `INFINITY`. Free variables are split internally, finite
/// lower bounds are shifted out, and finite upper bounds become extra rows.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl LinearProgram {
    /// Minimization problem with all variables in `[0, +inf)` and no rows.
    pub fn minimize(objective: Vec<f64>) -> Self {
        let n = objective.len();
        LinearProgram {
            sense: Sense::Minimize,
            objective,
            constraints: Vec::new(),
            lower: vec![0.0; n],
            upper: vec![f64::INFINITY; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push_row(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Structural sanity: consistent dimensions, finite coefficients.
    pub fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if n == 0 {
            return Err(LpError::MalformedModel("model has no variables".into()));
        }
        if self.lower.len() != n || self.upper.len() != n {
            return Err(LpError::MalformedModel(format!(
                "bounds have length {}/{} but the model has {} variables",
                self.lower.len(),
                self.upper.len(),
                n
            )));
        }
        for (j, &c) in self.objective.iter().enumerate() {
            if !c.is_finite() {
                return Err(LpError::MalformedModel(format!(
                    "objective coefficient {j} is not finite"
                )));
            }
        }
        for (j, (&lo, &up)) in self.lower.iter().zip(&self.upper).enumerate() {
            if lo.is_nan() || up.is_nan() || lo == f64::INFINITY || up == f64::NEG_INFINITY {
                return Err(LpError::MalformedModel(format!("bad bounds on variable {j}")));
            }
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.coeffs.len() != n {
                return Err(LpError::MalformedModel(format!(
                    "row {i} has {} coefficients but the model has {n} variables",
                    row.coeffs.len()
                )));
            }
            if !row.rhs.is_finite() || row.coeffs.iter().any(|c| !c.is_finite()) {
                return Err(LpError::MalformedModel(format!("row {i} has a non-finite entry")));
            }
        }
        Ok(())
    }

    /// CPLEX-LP-style dump for manual inspection. Write-only; never parsed.
    pub fn to_lp_text(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.sense {
            Sense::Minimize => "Minimize\n obj:",
            Sense::Maximize => "Maximize\n obj:",
        });
        for (j, &c) in self.objective.iter().enumerate() {
            if c != 0.0 {
                out.push_str(&format!(" {:+} x{}", c, j));
            }
        }
        out.push_str("\nSubject To\n");
        for (i, row) in self.constraints.iter().enumerate() {
            out.push_str(&format!(" c{}:", i));
            for (j, &a) in row.coeffs.iter().enumerate() {
                if a != 0.0 {
                    out.push_str(&format!(" {:+} x{}", a, j));
                }
            }
            let rel = match row.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
                Relation::Ge => ">=",
            };
            out.push_str(&format!(" {} {}\n", rel, row.rhs));
        }
        out.push_str("Bounds\n");
        for j in 0..self.num_vars() {
            out.push_str(&format!(" {} <= x{} <= {}\n", self.lower[j], j, self.upper[j]));
        }
        out.push_str("End\n");
        out
    }
}

/// Outcome of a simplex run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solved LP. For non-optimal statuses the vectors are empty and
/// `objective` is `NAN` (infeasible) or the unbounded direction's infinity.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    pub primal: Vec<f64>,
    pub objective: f64,
    /// One dual per constraint row, in input order; dropped all-zero rows
    /// report dual 0.
    pub duals: Vec<f64>,
    /// Dual bound computed against the full internal row system; equals
    /// `objective` at an optimum up to roundoff.
    pub dual_objective: f64,
    pub iterations: u64,
}

#[derive(Debug, Clone)]
pub enum LpError {
    MalformedModel(String),
    /// The pivot cap tripped. With Bland's rule active this cannot be
    /// cycling, so it signals a bug or a hopelessly scaled model.
    NumericalFailure(String),
    /// A relaxation was unbounded where the surrounding algorithm needs a
    /// finite bound.
    UnboundedModel,
}

impl std::fmt::Display for LpError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LpError::MalformedModel(msg) => write!(f, "malformed model: {msg}"),
            LpError::NumericalFailure(msg) => write!(f, "numerical failure: {msg}"),
            LpError::UnboundedModel => write!(f, "relaxation is unbounded"),
        }
    }
}

impl std::error::Error for LpError {}

/// Solve with the model's own bounds.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;
    simplex::solve_with_bounds(lp, &lp.lower, &lp.upper)
}

/// Solve with overriding bound vectors (used by branch-and-bound so nodes
/// do not clone the whole model).
pub(crate) fn solve_lp_bounded(
    lp: &LinearProgram,
    lower: &[f64],
    upper: &[f64],
) -> Result<LpSolution, LpError> {
    simplex::solve_with_bounds(lp, lower, upper)
}
