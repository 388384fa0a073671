//! Resource-constrained robust shortest paths on digraphs.
//!
//! Arcs carry an interval cost `[l, u]` and an integer resource consumption
//! `d`; a path is feasible when its total resource use stays within the
//! budget `beta`. The classical counterpart (fixed scenario) is solved
//! exactly by label-setting dynamic programming; the robust layer plugs
//! into [`crate::regret`] through the [`RobustProblem`] impl on
//! [`IntervalDigraph`].
//!
//! Plain robust shortest path is the special case `d = 0`, `beta = 0`.

mod classical;
mod extract;
mod format;
mod generate;
mod model;

pub use classical::{classical_rsp, compute_beta, min_resource};
pub use extract::extract_elementary;
pub use format::{parse_rrsp, write_rrsp};
pub use generate::{generate_coco, generate_karasan, GridParams, KarasanParams};
pub use model::{build_h1, build_i1};

use crate::budget::Budget;
use crate::lp::{Constraint, MixedIntegerProgram, Relation};
use crate::regret::{
    ClassicalSolution, IntervalCostVector, RegretError, RobustProblem, Scenario,
};

/// One directed arc. `lower`/`upper` bound the uncertain cost; `resource`
/// is consumed when the arc is traversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub lower: i64,
    pub upper: i64,
    pub resource: i64,
}

/// Digraph with interval arc costs, a resource budget, and fixed
/// origin/target. Arc index order is the variable order everywhere.
#[derive(Debug, Clone)]
pub struct IntervalDigraph {
    vertices: usize,
    arcs: Vec<Arc>,
    origin: usize,
    target: usize,
    beta: i64,
    intervals: IntervalCostVector,
    /// Out-arc indices per vertex, ascending.
    out_arcs: Vec<Vec<usize>>,
}

impl IntervalDigraph {
    pub fn new(
        vertices: usize,
        arcs: Vec<Arc>,
        origin: usize,
        target: usize,
        beta: i64,
    ) -> Result<Self, RrspError> {
        if origin >= vertices || target >= vertices {
            return Err(RrspError::BadInstance(format!(
                "origin {origin} or target {target} out of range for {vertices} vertices"
            )));
        }
        if origin == target {
            return Err(RrspError::BadInstance("origin equals target".into()));
        }
        if beta < 0 {
            return Err(RrspError::BadInstance(format!("negative resource limit {beta}")));
        }
        for (idx, a) in arcs.iter().enumerate() {
            if a.tail >= vertices || a.head >= vertices {
                return Err(RrspError::BadInstance(format!(
                    "arc {idx} endpoint out of range"
                )));
            }
            if a.resource < 0 {
                return Err(RrspError::BadInstance(format!(
                    "arc {idx} has negative resource {}",
                    a.resource
                )));
            }
        }
        let intervals = IntervalCostVector::new(
            arcs.iter().map(|a| a.lower).collect(),
            arcs.iter().map(|a| a.upper).collect(),
        )
        .map_err(|e| RrspError::BadInstance(e.to_string()))?;
        let mut out_arcs = vec![Vec::new(); vertices];
        for (idx, a) in arcs.iter().enumerate() {
            out_arcs[a.tail].push(idx);
        }
        Ok(IntervalDigraph {
            vertices,
            arcs,
            origin,
            target,
            beta,
            intervals,
            out_arcs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }
}

/// Ordered arc walk from origin to target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub arcs: Vec<usize>,
}

impl Path {
    /// 0/1 arc-incidence vector.
    pub fn as_selection(&self, arc_count: usize) -> Vec<u8> {
        let mut y = vec![0u8; arc_count];
        for &a in &self.arcs {
            y[a] = 1;
        }
        y
    }

    pub fn cost_in(&self, scenario: &Scenario) -> f64 {
        self.arcs.iter().map(|&a| scenario.costs[a]).sum()
    }

    pub fn resource(&self, g: &IntervalDigraph) -> i64 {
        self.arcs.iter().map(|&a| g.arcs()[a].resource).sum()
    }

    /// Vertex sequence, origin first.
    pub fn vertices(&self, g: &IntervalDigraph) -> Vec<usize> {
        let mut vs = Vec::with_capacity(self.arcs.len() + 1);
        if let Some(&first) = self.arcs.first() {
            vs.push(g.arcs()[first].tail);
        }
        for &a in &self.arcs {
            vs.push(g.arcs()[a].head);
        }
        vs
    }

    /// True when no vertex repeats.
    pub fn is_elementary(&self, g: &IntervalDigraph) -> bool {
        let vs = self.vertices(g);
        let mut seen = vec![false; g.vertex_count()];
        for v in vs {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

#[derive(Debug, Clone)]
pub enum RrspError {
    /// Structural defect in instance data.
    BadInstance(String),
    /// Generator parameters describe no valid topology.
    BadShape(String),
    /// No origin-to-target path at all.
    Disconnected,
    /// No path within the resource limit.
    Infeasible,
    Timeout,
    /// A claimed flow violates conservation.
    NotAFlow(String),
    Parse { line: usize, msg: String },
}

impl std::fmt::Display for RrspError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RrspError::BadInstance(msg) => write!(f, "bad instance: {msg}"),
            RrspError::BadShape(msg) => write!(f, "bad generator shape: {msg}"),
            RrspError::Disconnected => write!(f, "no path from origin to target"),
            RrspError::Infeasible => write!(f, "no path within the resource limit"),
            RrspError::Timeout => write!(f, "time budget expired"),
            RrspError::NotAFlow(msg) => write!(f, "not a flow: {msg}"),
            RrspError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
        }
    }
}

impl std::error::Error for RrspError {}

impl From<RrspError> for RegretError {
    fn from(e: RrspError) -> Self {
        match e {
            RrspError::Disconnected | RrspError::Infeasible => RegretError::InfeasibleProblem,
            RrspError::Timeout => RegretError::Timeout,
            other => RegretError::BadInstance(other.to_string()),
        }
    }
}

impl RobustProblem for IntervalDigraph {
    fn intervals(&self) -> &IntervalCostVector {
        &self.intervals
    }

    fn solve_classical(
        &self,
        scenario: &Scenario,
        budget: &Budget,
    ) -> Result<ClassicalSolution, RegretError> {
        let (path, cost) = classical_rsp(self, scenario, budget)?;
        Ok(ClassicalSolution {
            solution: path.as_selection(self.arc_count()),
            objective: cost,
        })
    }

    fn feasibility_rows(&self) -> Vec<Constraint> {
        let n = self.arc_count();
        let mut rows = Vec::with_capacity(self.vertices + 1);
        for v in 0..self.vertices {
            let mut coeffs = vec![0.0; n];
            for (idx, a) in self.arcs.iter().enumerate() {
                if a.head == v {
                    coeffs[idx] += 1.0;
                }
                if a.tail == v {
                    coeffs[idx] -= 1.0;
                }
            }
            let rhs = if v == self.origin {
                -1.0
            } else if v == self.target {
                1.0
            } else {
                0.0
            };
            rows.push(Constraint {
                coeffs,
                relation: Relation::Eq,
                rhs,
            });
        }
        let coeffs = self.arcs.iter().map(|a| a.resource as f64).collect();
        rows.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs: self.beta as f64,
        });
        rows
    }

    fn heuristic_mip(&self) -> MixedIntegerProgram {
        build_h1(self)
    }

    fn enumerate_feasible(&self, cap: usize) -> Result<Vec<Vec<u8>>, RegretError> {
        let paths = enumerate_paths(self, cap)?;
        Ok(paths
            .into_iter()
            .map(|p| p.as_selection(self.arc_count()))
            .collect())
    }

    fn decode_solution(&self, y: Vec<u8>) -> Result<Vec<u8>, RegretError> {
        let path = extract_elementary(self, &y)?;
        Ok(path.as_selection(self.arc_count()))
    }
}

/// All elementary feasible paths, in depth-first order by ascending arc
/// index. The robust optimum is always attained on one of these, so
/// enumeration over elementary paths is a complete oracle.
pub fn enumerate_paths(g: &IntervalDigraph, cap: usize) -> Result<Vec<Path>, RegretError> {
    let mut found = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut stack_arcs = Vec::new();
    on_path[g.origin()] = true;
    dfs_paths(g, g.origin(), 0, &mut on_path, &mut stack_arcs, &mut found, cap)?;
    Ok(found)
}

fn dfs_paths(
    g: &IntervalDigraph,
    v: usize,
    used: i64,
    on_path: &mut Vec<bool>,
    stack_arcs: &mut Vec<usize>,
    found: &mut Vec<Path>,
    cap: usize,
) -> Result<(), RegretError> {
    if v == g.target() {
        if found.len() >= cap {
            return Err(RegretError::CapExceeded { cap });
        }
        found.push(Path {
            arcs: stack_arcs.clone(),
        });
        return Ok(());
    }
    for &idx in g.out_arcs(v) {
        let arc = &g.arcs()[idx];
        let next_used = used + arc.resource;
        if next_used > g.beta() || on_path[arc.head] {
            continue;
        }
        on_path[arc.head] = true;
        stack_arcs.push(idx);
        dfs_paths(g, arc.head, next_used, on_path, stack_arcs, found, cap)?;
        stack_arcs.pop();
        on_path[arc.head] = false;
    }
    Ok(())
}
