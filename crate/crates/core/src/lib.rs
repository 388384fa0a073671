//! Solvers for combinatorial optimization under interval cost uncertainty,
//! using the min-max regret criterion.
//!
//! Each item's cost is known only to lie in an interval `[l_i, u_i]`. A
//! feasible solution is judged by its worst-case regret over all cost
//! scenarios: the gap between what it costs and what the best solution for
//! that scenario costs. The crate provides
//!
//! * a generic algorithm layer: an exact logic-based Benders decomposition,
//!   an LP-duality-based heuristic, a midpoint/worst-case 2-approximation,
//!   and a brute-force oracle for small instances;
//! * two concrete problems: resource-constrained robust shortest paths on
//!   digraphs and robust set covering;
//! * a self-contained LP/MILP engine (two-phase simplex plus 0-1
//!   branch-and-bound) so solves are reproducible down to the pivot order;
//! * seeded instance generators and plain-text instance formats.

pub mod budget;
pub mod lp;
pub mod regret;
pub mod rng;
pub mod rrsp;
pub mod rsc;
