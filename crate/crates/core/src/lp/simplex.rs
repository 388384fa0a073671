//! Two-phase primal simplex on a dense standard-form tableau.
//!
//! Conversion to standard form: finite lower bounds are shifted to zero,
//! free variables are split into differences of nonnegatives, finite upper
//! bounds become extra `<=` rows, inequality rows get slack or surplus
//! columns, rows with negative right-hand sides are negated, and every row
//! receives an artificial column. The artificial columns double as an
//! embedded identity, so the final reduced-cost row under them is exactly
//! `-y` for the basis multipliers `y`; duals fall out without a separate
//! solve.
//!
//! Pricing is Dantzig's rule until the objective stalls, then permanently
//! Bland's rule, which guarantees termination. Both rules break ties by
//! lowest index, so runs are deterministic.

use super::{LinearProgram, LpError, LpSolution, LpStatus, Relation, Sense};

const PIVOT_TOL: f64 = 1e-9;
const RED_TOL: f64 = 1e-9;
const RATIO_TIE_TOL: f64 = 1e-10;
/// Phase-1 objective above this means infeasible.
const FEAS_TOL: f64 = 1e-7;
/// Pivots without strict objective progress before switching to Bland.
const STALL_LIMIT: u64 = 512;
/// Refresh the reduced-cost row from scratch this often to cap drift.
const REFRESH_EVERY: u64 = 512;

enum VarMap {
    Shifted { col: usize, shift: f64 },
    Split { pos: usize, neg: usize },
}

struct Tableau {
    m: usize,
    ncols: usize,
    art_start: usize,
    /// Row-major `m x ncols`.
    a: Vec<f64>,
    b: Vec<f64>,
    basis: Vec<usize>,
    red: Vec<f64>,
    objval: f64,
    cost: Vec<f64>,
    iters: u64,
    bland: bool,
    stall: u64,
    last_obj: f64,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.ncols + j]
    }

    fn refresh_reduced(&mut self) {
        let (m, n) = (self.m, self.ncols);
        self.red.copy_from_slice(&self.cost);
        self.objval = 0.0;
        for i in 0..m {
            let cb = self.cost[self.basis[i]];
            self.objval += cb * self.b[i];
            if cb != 0.0 {
                let row = &self.a[i * n..(i + 1) * n];
                for j in 0..n {
                    self.red[j] -= cb * row[j];
                }
            }
        }
    }

    fn choose_entering(&self) -> Option<usize> {
        if self.bland {
            (0..self.art_start).find(|&j| self.red[j] < -RED_TOL)
        } else {
            let mut best = None;
            let mut best_red = -RED_TOL;
            for j in 0..self.art_start {
                if self.red[j] < best_red {
                    best_red = self.red[j];
                    best = Some(j);
                }
            }
            best
        }
    }

    /// Minimum-ratio row for entering column `c`, or `None` if the column
    /// is a ray (unbounded).
    fn choose_leaving(&self, c: usize) -> Option<usize> {
        let mut best_row = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..self.m {
            let aic = self.at(i, c);
            if aic <= PIVOT_TOL {
                continue;
            }
            let ratio = self.b[i] / aic;
            let tol = RATIO_TIE_TOL * (1.0 + best_ratio.abs());
            if ratio < best_ratio - tol {
                best_ratio = ratio;
                best_row = Some(i);
            } else if ratio <= best_ratio + tol {
                let r = match best_row {
                    Some(r) => r,
                    None => {
                        best_ratio = ratio;
                        best_row = Some(i);
                        continue;
                    }
                };
                let better = if self.bland {
                    self.basis[i] < self.basis[r]
                } else {
                    aic.abs() > self.at(r, c).abs()
                };
                if better {
                    best_ratio = ratio;
                    best_row = Some(i);
                }
            }
        }
        best_row
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let n = self.ncols;
        let piv = self.at(r, c);
        let inv = 1.0 / piv;
        {
            let row = &mut self.a[r * n..(r + 1) * n];
            for v in row.iter_mut() {
                *v *= inv;
            }
            row[c] = 1.0;
        }
        self.b[r] *= inv;
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let factor = self.at(i, c);
            if factor == 0.0 {
                continue;
            }
            let (pr, cur) = if i < r {
                let (head, tail) = self.a.split_at_mut(r * n);
                (&tail[..n], &mut head[i * n..(i + 1) * n])
            } else {
                let (head, tail) = self.a.split_at_mut(i * n);
                (&head[r * n..(r + 1) * n], &mut tail[..n])
            };
            for j in 0..n {
                cur[j] -= factor * pr[j];
            }
            cur[c] = 0.0;
            self.b[i] -= factor * self.b[r];
        }
        let factor = self.red[c];
        if factor != 0.0 {
            for j in 0..n {
                self.red[j] -= factor * self.a[r * n + j];
            }
            self.red[c] = 0.0;
            self.objval += factor * self.b[r];
        }
        self.basis[r] = c;
        self.iters += 1;
    }

    fn optimize(&mut self, iter_cap: u64) -> Result<PhaseEnd, LpError> {
        self.refresh_reduced();
        self.last_obj = self.objval;
        self.stall = 0;
        let mut since_refresh = 0u64;
        loop {
            let c = match self.choose_entering() {
                Some(c) => c,
                None => return Ok(PhaseEnd::Optimal),
            };
            let r = match self.choose_leaving(c) {
                Some(r) => r,
                None => return Ok(PhaseEnd::Unbounded),
            };
            self.pivot(r, c);
            since_refresh += 1;
            if since_refresh >= REFRESH_EVERY {
                self.refresh_reduced();
                since_refresh = 0;
            }
            if self.objval < self.last_obj - 1e-9 * (1.0 + self.last_obj.abs()) {
                self.last_obj = self.objval;
                self.stall = 0;
            } else {
                self.stall += 1;
                if self.stall > STALL_LIMIT {
                    self.bland = true;
                }
            }
            if self.iters > iter_cap {
                return Err(LpError::NumericalFailure(format!(
                    "pivot cap {iter_cap} exceeded on a {}x{} tableau",
                    self.m, self.ncols
                )));
            }
        }
    }
}

fn infeasible_solution(iters: u64) -> LpSolution {
    LpSolution {
        status: LpStatus::Infeasible,
        primal: Vec::new(),
        objective: f64::NAN,
        duals: Vec::new(),
        dual_objective: f64::NAN,
        iterations: iters,
    }
}

pub(super) fn solve_with_bounds(
    lp: &LinearProgram,
    lower: &[f64],
    upper: &[f64],
) -> Result<LpSolution, LpError> {
    let n_user = lp.num_vars();
    if lower.len() != n_user || upper.len() != n_user {
        return Err(LpError::MalformedModel(
            "bound override length does not match the model".into(),
        ));
    }
    let flip = match lp.sense {
        Sense::Minimize => 1.0,
        Sense::Maximize => -1.0,
    };

    // Variable transformation: shift finite lower bounds, split free vars.
    let mut var_map = Vec::with_capacity(n_user);
    let mut n_struct = 0usize;
    for j in 0..n_user {
        if lower[j] > upper[j] {
            return Ok(infeasible_solution(0));
        }
        if lower[j].is_finite() {
            var_map.push(VarMap::Shifted {
                col: n_struct,
                shift: lower[j],
            });
            n_struct += 1;
        } else {
            var_map.push(VarMap::Split {
                pos: n_struct,
                neg: n_struct + 1,
            });
            n_struct += 2;
        }
    }

    let mut cost_struct = vec![0.0; n_struct];
    let mut obj_const = 0.0;
    for j in 0..n_user {
        let c = flip * lp.objective[j];
        match var_map[j] {
            VarMap::Shifted { col, shift } => {
                cost_struct[col] = c;
                obj_const += c * shift;
            }
            VarMap::Split { pos, neg } => {
                cost_struct[pos] = c;
                cost_struct[neg] = -c;
            }
        }
    }

    // Rows: user rows that are not empty, then upper-bound rows.
    struct RawRow {
        coeffs: Vec<f64>,
        relation: Relation,
        rhs: f64,
        user_idx: Option<usize>,
    }
    let mut rows: Vec<RawRow> = Vec::new();
    for (i, con) in lp.constraints.iter().enumerate() {
        if con.coeffs.iter().all(|&a| a == 0.0) {
            let ok = match con.relation {
                Relation::Le => con.rhs >= -FEAS_TOL,
                Relation::Ge => con.rhs <= FEAS_TOL,
                Relation::Eq => con.rhs.abs() <= FEAS_TOL,
            };
            if !ok {
                return Ok(infeasible_solution(0));
            }
            continue;
        }
        let mut coeffs = vec![0.0; n_struct];
        let mut rhs = con.rhs;
        for j in 0..n_user {
            let a = con.coeffs[j];
            if a == 0.0 {
                continue;
            }
            match var_map[j] {
                VarMap::Shifted { col, shift } => {
                    coeffs[col] = a;
                    rhs -= a * shift;
                }
                VarMap::Split { pos, neg } => {
                    coeffs[pos] = a;
                    coeffs[neg] = -a;
                }
            }
        }
        rows.push(RawRow {
            coeffs,
            relation: con.relation,
            rhs,
            user_idx: Some(i),
        });
    }
    for j in 0..n_user {
        if !upper[j].is_finite() {
            continue;
        }
        let mut coeffs = vec![0.0; n_struct];
        let rhs = match var_map[j] {
            VarMap::Shifted { col, shift } => {
                coeffs[col] = 1.0;
                upper[j] - shift
            }
            VarMap::Split { pos, neg } => {
                coeffs[pos] = 1.0;
                coeffs[neg] = -1.0;
                upper[j]
            }
        };
        rows.push(RawRow {
            coeffs,
            relation: Relation::Le,
            rhs,
            user_idx: None,
        });
    }

    let m = rows.len();
    let n_slack = rows
        .iter()
        .filter(|r| r.relation != Relation::Eq)
        .count();
    let art_start = n_struct + n_slack;
    let ncols = art_start + m;

    let mut tab = Tableau {
        m,
        ncols,
        art_start,
        a: vec![0.0; m * ncols],
        b: vec![0.0; m],
        basis: vec![0; m],
        red: vec![0.0; ncols],
        objval: 0.0,
        cost: vec![0.0; ncols],
        iters: 0,
        bland: false,
        stall: 0,
        last_obj: 0.0,
    };

    let mut negated = vec![false; m];
    let mut slack_idx = n_struct;
    for (i, row) in rows.iter().enumerate() {
        let base = i * ncols;
        tab.a[base..base + n_struct].copy_from_slice(&row.coeffs);
        match row.relation {
            Relation::Le => {
                tab.a[base + slack_idx] = 1.0;
                slack_idx += 1;
            }
            Relation::Ge => {
                tab.a[base + slack_idx] = -1.0;
                slack_idx += 1;
            }
            Relation::Eq => {}
        }
        tab.b[i] = row.rhs;
        if tab.b[i] < 0.0 {
            negated[i] = true;
            for v in &mut tab.a[base..base + art_start] {
                *v = -*v;
            }
            tab.b[i] = -tab.b[i];
        }
        tab.a[base + art_start + i] = 1.0;
        tab.basis[i] = art_start + i;
    }
    // Internal rhs as assembled, before any pivoting; used for the dual
    // objective.
    let b0 = tab.b.clone();

    let iter_cap = 200_000 + 500 * (m as u64 + ncols as u64);

    // Phase 1: minimize the sum of artificials.
    for j in art_start..ncols {
        tab.cost[j] = 1.0;
    }
    match tab.optimize(iter_cap)? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => {
            return Err(LpError::NumericalFailure(
                "phase 1 reported unbounded, which is impossible".into(),
            ))
        }
    }
    if tab.objval > FEAS_TOL {
        return Ok(infeasible_solution(tab.iters));
    }

    // Drive basic artificials out; rows that resist are redundant and stay
    // pinned at zero behind their artificial.
    for i in 0..m {
        if tab.basis[i] < art_start {
            continue;
        }
        let pivot_col = (0..art_start).find(|&j| tab.at(i, j).abs() > PIVOT_TOL);
        match pivot_col {
            Some(j) => tab.pivot(i, j),
            None => tab.b[i] = 0.0,
        }
    }

    // Phase 2: original costs, artificials barred (they never re-enter
    // because entering candidates stop at art_start).
    tab.cost.iter_mut().for_each(|c| *c = 0.0);
    tab.cost[..n_struct].copy_from_slice(&cost_struct);
    let phase2 = tab.optimize(iter_cap)?;

    if matches!(phase2, PhaseEnd::Unbounded) {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            primal: Vec::new(),
            objective: match lp.sense {
                Sense::Minimize => f64::NEG_INFINITY,
                Sense::Maximize => f64::INFINITY,
            },
            duals: Vec::new(),
            dual_objective: f64::NAN,
            iterations: tab.iters,
        });
    }

    // Recover the primal point in user space.
    let mut x_struct = vec![0.0; n_struct];
    for i in 0..m {
        if tab.basis[i] < n_struct {
            x_struct[tab.basis[i]] = tab.b[i];
        }
    }
    let mut primal = vec![0.0; n_user];
    for j in 0..n_user {
        primal[j] = match var_map[j] {
            VarMap::Shifted { col, shift } => shift + x_struct[col],
            VarMap::Split { pos, neg } => x_struct[pos] - x_struct[neg],
        };
    }

    // Duals: the reduced cost under the artificial of row i is -y_i.
    let mut y_std = vec![0.0; m];
    for i in 0..m {
        y_std[i] = -tab.red[art_start + i];
    }
    let mut duals = vec![0.0; lp.constraints.len()];
    let mut dual_obj_internal = 0.0;
    for i in 0..m {
        dual_obj_internal += y_std[i] * b0[i];
        if let Some(u) = rows[i].user_idx {
            let y = if negated[i] { -y_std[i] } else { y_std[i] };
            duals[u] = flip * y;
        }
    }

    Ok(LpSolution {
        status: LpStatus::Optimal,
        primal,
        objective: flip * (tab.objval + obj_const),
        duals,
        dual_objective: flip * (dual_obj_internal + obj_const),
        iterations: tab.iters,
    })
}
