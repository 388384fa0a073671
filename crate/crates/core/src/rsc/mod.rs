//! Robust set covering with interval column costs.
//!
//! A binary incidence matrix pairs rows to the columns that cover them;
//! every column carries an interval cost `[l, u]`. The classical
//! counterpart (fixed scenario) is a plain set covering problem solved by
//! branch-and-bound over its standard formulation, and the robust layer
//! plugs into [`crate::regret`] through the [`RobustProblem`] impl on
//! [`IntervalCoverProblem`].

mod classical;
mod format;
mod generate;
mod model;

pub use classical::classical_sc;
pub use format::{parse_orlib, parse_rsc, write_orlib, write_rsc};
pub use generate::{generate_beasley, generate_kz, generate_montemanni, generate_synthetic_scp};
pub use model::{build_h2, build_i2};

use crate::budget::Budget;
use crate::lp::{Constraint, MixedIntegerProgram, Relation};
use crate::regret::{
    ClassicalSolution, IntervalCostVector, RegretError, RobustProblem, Scenario,
};

/// Binary row/column incidence stored both ways: the columns covering
/// each row and the rows covered by each column. Column index order is
/// the variable order everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMatrix {
    num_cols: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

impl CoverMatrix {
    /// Build from per-row column lists. Lists are sorted and deduplicated;
    /// a row no column covers is rejected, as is an instance with no rows
    /// or no columns.
    pub fn new(num_cols: usize, rows: Vec<Vec<usize>>) -> Result<Self, RscError> {
        if num_cols == 0 || rows.is_empty() {
            return Err(RscError::BadInstance(
                "an instance needs at least one row and one column".into(),
            ));
        }
        let mut clean_rows = Vec::with_capacity(rows.len());
        let mut cols = vec![Vec::new(); num_cols];
        for (i, mut row) in rows.into_iter().enumerate() {
            row.sort_unstable();
            row.dedup();
            if row.is_empty() {
                return Err(RscError::UncoverableRow(i));
            }
            if let Some(&bad) = row.iter().find(|&&j| j >= num_cols) {
                return Err(RscError::BadInstance(format!(
                    "row {i} names column {bad}, but there are only {num_cols} columns"
                )));
            }
            for &j in &row {
                cols[j].push(i);
            }
            clean_rows.push(row);
        }
        Ok(CoverMatrix {
            num_cols,
            rows: clean_rows,
            cols,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    /// Columns covering row `i`, ascending.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// Rows covered by column `j`, ascending.
    pub fn col(&self, j: usize) -> &[usize] {
        &self.cols[j]
    }

    /// True when the selected columns cover every row.
    pub fn covers(&self, selected: &[u8]) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().any(|&j| selected[j] == 1))
    }
}

/// A cover structure plus one base cost per column, as read from an
/// OR-Library scp file or built synthetically. The base costs seed the
/// interval generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScpBase {
    matrix: CoverMatrix,
    costs: Vec<i64>,
}

impl ScpBase {
    pub fn new(matrix: CoverMatrix, costs: Vec<i64>) -> Result<Self, RscError> {
        if costs.len() != matrix.num_cols() {
            return Err(RscError::BadInstance(format!(
                "{} base costs for {} columns",
                costs.len(),
                matrix.num_cols()
            )));
        }
        if let Some(&bad) = costs.iter().find(|&&c| c < 0) {
            return Err(RscError::BadInstance(format!("negative base cost {bad}")));
        }
        Ok(ScpBase { matrix, costs })
    }

    pub fn matrix(&self) -> &CoverMatrix {
        &self.matrix
    }

    pub fn costs(&self) -> &[i64] {
        &self.costs
    }
}

/// Set covering instance with an interval cost per column.
#[derive(Debug, Clone)]
pub struct IntervalCoverProblem {
    matrix: CoverMatrix,
    intervals: IntervalCostVector,
}

impl IntervalCoverProblem {
    pub fn new(
        matrix: CoverMatrix,
        lower: Vec<i64>,
        upper: Vec<i64>,
    ) -> Result<Self, RscError> {
        if lower.len() != matrix.num_cols() || upper.len() != matrix.num_cols() {
            return Err(RscError::BadInstance(format!(
                "{} lower and {} upper bounds for {} columns",
                lower.len(),
                upper.len(),
                matrix.num_cols()
            )));
        }
        let intervals = IntervalCostVector::new(lower, upper)
            .map_err(|e| RscError::BadInstance(e.to_string()))?;
        Ok(IntervalCoverProblem { matrix, intervals })
    }

    pub fn matrix(&self) -> &CoverMatrix {
        &self.matrix
    }

    pub fn intervals(&self) -> &IntervalCostVector {
        &self.intervals
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.matrix.num_cols()
    }
}

#[derive(Debug, Clone)]
pub enum RscError {
    /// Structural defect in instance data.
    BadInstance(String),
    /// A row no column covers; the instance has no covering at all.
    UncoverableRow(usize),
    /// Generator parameters outside their valid ranges.
    BadShape(String),
    Timeout,
    /// The classical solve reported an infeasible model.
    Infeasible,
    Parse { line: usize, msg: String },
}

impl std::fmt::Display for RscError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RscError::BadInstance(msg) => write!(f, "bad instance: {msg}"),
            RscError::UncoverableRow(i) => write!(f, "row {i} is covered by no column"),
            RscError::BadShape(msg) => write!(f, "bad generator shape: {msg}"),
            RscError::Timeout => write!(f, "time budget expired"),
            RscError::Infeasible => write!(f, "no covering exists"),
            RscError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
        }
    }
}

impl std::error::Error for RscError {}

impl From<RscError> for RegretError {
    fn from(e: RscError) -> Self {
        match e {
            RscError::Infeasible | RscError::UncoverableRow(_) => RegretError::InfeasibleProblem,
            RscError::Timeout => RegretError::Timeout,
            other => RegretError::BadInstance(other.to_string()),
        }
    }
}

impl RobustProblem for IntervalCoverProblem {
    fn intervals(&self) -> &IntervalCostVector {
        &self.intervals
    }

    fn solve_classical(
        &self,
        scenario: &Scenario,
        budget: &Budget,
    ) -> Result<ClassicalSolution, RegretError> {
        let (columns, cost) = classical_sc(self, scenario, budget)?;
        let mut selection = vec![0u8; self.num_cols()];
        for j in columns {
            selection[j] = 1;
        }
        Ok(ClassicalSolution {
            solution: selection,
            objective: cost,
        })
    }

    fn feasibility_rows(&self) -> Vec<Constraint> {
        self.matrix
            .rows
            .iter()
            .map(|row| {
                let mut coeffs = vec![0.0; self.num_cols()];
                for &j in row {
                    coeffs[j] = 1.0;
                }
                Constraint {
                    coeffs,
                    relation: Relation::Ge,
                    rhs: 1.0,
                }
            })
            .collect()
    }

    fn heuristic_mip(&self) -> MixedIntegerProgram {
        build_h2(self)
    }

    fn enumerate_feasible(&self, cap: usize) -> Result<Vec<Vec<u8>>, RegretError> {
        let n = self.num_cols();
        if n >= usize::BITS as usize - 1 {
            return Err(RegretError::CapExceeded { cap });
        }
        let mut found = Vec::new();
        for mask in 0usize..(1 << n) {
            let selection: Vec<u8> = (0..n).map(|j| ((mask >> j) & 1) as u8).collect();
            if self.matrix.covers(&selection) {
                if found.len() == cap {
                    return Err(RegretError::CapExceeded { cap });
                }
                found.push(selection);
            }
        }
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag3() -> IntervalCoverProblem {
        let m = CoverMatrix::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        IntervalCoverProblem::new(m, vec![1, 2, 3], vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn matrix_stores_both_orientations() {
        let m = CoverMatrix::new(3, vec![vec![0, 2], vec![2, 1, 1]]).unwrap();
        assert_eq!(m.row(0), &[0, 2]);
        assert_eq!(m.row(1), &[1, 2]);
        assert_eq!(m.col(2), &[0, 1]);
        assert_eq!(m.col(0), &[0]);
    }

    #[test]
    fn uncoverable_row_is_rejected_at_load() {
        let err = CoverMatrix::new(2, vec![vec![0], vec![]]).unwrap_err();
        assert!(matches!(err, RscError::UncoverableRow(1)));
    }

    #[test]
    fn out_of_range_column_is_rejected() {
        assert!(matches!(
            CoverMatrix::new(2, vec![vec![0, 5]]),
            Err(RscError::BadInstance(_))
        ));
    }

    #[test]
    fn enumerate_feasible_lists_every_covering_once() {
        // Diagonal matrix: only the all-ones selection covers.
        let p = diag3();
        let all = p.enumerate_feasible(100).unwrap();
        assert_eq!(all, vec![vec![1, 1, 1]]);

        // One universal column plus a singleton: coverings are every
        // selection containing column 0, plus none other.
        let m = CoverMatrix::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        let p = IntervalCoverProblem::new(m, vec![0, 0], vec![1, 1]).unwrap();
        let all = p.enumerate_feasible(100).unwrap();
        assert_eq!(all, vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn enumerate_feasible_respects_the_cap() {
        let p = diag3();
        assert!(matches!(
            p.enumerate_feasible(0),
            Err(RegretError::CapExceeded { cap: 0 })
        ));
    }

    #[test]
    fn cover_rows_accept_exactly_the_coverings() {
        let m = CoverMatrix::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let p = IntervalCoverProblem::new(m, vec![1, 1, 1], vec![2, 2, 2]).unwrap();
        let rows = p.feasibility_rows();
        assert!(crate::regret::satisfies_rows(&rows, &[0, 1, 0]));
        assert!(crate::regret::satisfies_rows(&rows, &[1, 0, 1]));
        assert!(!crate::regret::satisfies_rows(&rows, &[1, 0, 0]));
    }
}
