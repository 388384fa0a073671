//! Randomized cross-validation of the solvers on tiny instances.
//!
//! Every check compares two independent computation paths: the exact
//! decomposition against exhaustive enumeration, the heuristics against
//! proved bounds, and the two structural regret identities (the induced
//! extreme scenario attains the maximum regret; stripping cycles from a
//! feasible walk never increases regret) against direct enumeration of
//! all corner scenarios. Any violation aborts with the offending instance
//! serialized so it can be replayed with `solve`.

use regret_core::budget::Budget;
use regret_core::regret::algorithms::{amu, benders, brute_force_robust, lph};
use regret_core::regret::{robustness_cost, RobustProblem, SolveStatus};
use regret_core::rng::Rng;
use regret_core::rrsp::{
    compute_beta, extract_elementary, write_rrsp, Arc, IntervalDigraph,
};
use regret_core::rsc::{generate_synthetic_scp, write_rsc, IntervalCoverProblem};

/// Enumeration guard; the size caps keep real usage far below it.
const ENUM_CAP: usize = 1_000_000;
/// Slack between a decoded heuristic cost and its model objective.
const EPS_DUAL: f64 = 1e-6;

/// A connected random instance: a spine from origin to target through a
/// shuffled subset of interior vertices, plus extra arcs, with the
/// resource limit recomputed the same way the generators do.
fn random_digraph(rng: &mut Rng, max_vertices: usize) -> IntervalDigraph {
    let vertices = 4 + rng.below(max_vertices as u64 - 3) as usize;
    let mut interior: Vec<usize> = (1..vertices - 1).collect();
    for i in (1..interior.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        interior.swap(i, j);
    }
    interior.truncate(rng.below(interior.len() as u64 + 1) as usize);
    let mut stops = vec![0];
    stops.extend(&interior);
    stops.push(vertices - 1);

    let mut arcs = Vec::new();
    let draw = |rng: &mut Rng, tail: usize, head: usize, arcs: &mut Vec<Arc>| {
        let lower = rng.range_i64(0, 8);
        let upper = rng.range_i64(lower, lower + 6);
        let resource = rng.range_i64(0, 3);
        arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
            resource,
        });
    };
    for w in stops.windows(2) {
        draw(rng, w[0], w[1], &mut arcs);
    }
    for _ in 0..12usize.saturating_sub(arcs.len()) {
        let tail = rng.below(vertices as u64 - 1) as usize;
        let head = 1 + rng.below(vertices as u64 - 1) as usize;
        if tail == head || head == 0 || tail == vertices - 1 {
            continue;
        }
        draw(rng, tail, head, &mut arcs);
    }
    let v = vertices;
    let g = IntervalDigraph::new(v, arcs, 0, v - 1, 0).expect("spine keeps it well formed");
    let beta = compute_beta(&g).expect("spine guarantees connectivity");
    IntervalDigraph::new(v, g.arcs().to_vec(), 0, v - 1, beta)
        .expect("same arcs with the real limit")
}

fn random_cover(rng: &mut Rng, max_cols: usize) -> IntervalCoverProblem {
    let cols = 3 + rng.below(max_cols as u64 - 2) as usize;
    let rows = 2 + rng.below(4) as usize;
    let base = generate_synthetic_scp(rows, cols, 0.4, 10, rng.next_u64())
        .expect("parameters are in range");
    let mut lower = Vec::with_capacity(cols);
    let mut upper = Vec::with_capacity(cols);
    for _ in 0..cols {
        let l = rng.range_i64(0, 8);
        lower.push(l);
        upper.push(rng.range_i64(l, l + 6));
    }
    IntervalCoverProblem::new(base.matrix().clone(), lower, upper)
        .expect("ordered intervals over a coverable matrix")
}

/// Spine path with a vertex-disjoint cycle grafted onto an interior
/// vertex; selecting every arc gives a feasible non-elementary walk.
fn walk_with_cycle(rng: &mut Rng) -> (IntervalDigraph, Vec<u8>) {
    let spine_vertices = 3 + rng.below(3) as usize;
    let cycle_len = 2 + rng.below(2) as usize;
    let attach = 1 + rng.below(spine_vertices as u64 - 2) as usize;
    let total = spine_vertices + cycle_len - 1;
    let mut arcs = Vec::new();
    let draw = |rng: &mut Rng, tail: usize, head: usize, arcs: &mut Vec<Arc>| {
        let lower = rng.range_i64(0, 8);
        let upper = rng.range_i64(lower, lower + 6);
        arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
            resource: rng.range_i64(0, 3),
        });
    };
    for v in 0..spine_vertices - 1 {
        draw(rng, v, v + 1, &mut arcs);
    }
    let mut prev = attach;
    for k in 0..cycle_len - 1 {
        draw(rng, prev, spine_vertices + k, &mut arcs);
        prev = spine_vertices + k;
    }
    draw(rng, prev, attach, &mut arcs);
    let beta: i64 = arcs.iter().map(|a| a.resource).sum();
    let g = IntervalDigraph::new(total, arcs, 0, spine_vertices - 1, beta)
        .expect("spine plus cycle is well formed");
    let walk = vec![1u8; g.arc_count()];
    (g, walk)
}

fn integer_cost(y: &[u8], costs: &[i64]) -> i64 {
    y.iter()
        .zip(costs)
        .filter(|(&v, _)| v == 1)
        .map(|(_, &c)| c)
        .sum()
}

/// For a few sampled feasible solutions, the worst corner scenario must
/// produce exactly the regret of the solution's induced scenario.
fn check_induced_scenario(problem: &dyn RobustProblem) -> Result<(), String> {
    let iv = problem.intervals();
    let n = iv.len();
    if n > 14 {
        return Err(format!("{n} interval variables is too many to enumerate"));
    }
    let feasible = problem.enumerate_feasible(ENUM_CAP).map_err(|e| e.to_string())?;
    let samples = feasible.len().min(3);
    let picks: Vec<&Vec<u8>> = (0..samples)
        .map(|k| &feasible[k * feasible.len() / samples])
        .collect();
    let mut max_regret = vec![i64::MIN; picks.len()];
    let mut corner = vec![0i64; n];
    for mask in 0u64..(1 << n) {
        for i in 0..n {
            corner[i] = if (mask >> i) & 1 == 1 {
                iv.upper()[i]
            } else {
                iv.lower()[i]
            };
        }
        let best = feasible
            .iter()
            .map(|y| integer_cost(y, &corner))
            .min()
            .expect("nonempty feasible set");
        for (k, y) in picks.iter().enumerate() {
            max_regret[k] = max_regret[k].max(integer_cost(y, &corner) - best);
        }
    }
    for (k, y) in picks.iter().enumerate() {
        let induced: Vec<i64> = (0..n)
            .map(|i| if y[i] == 1 { iv.upper()[i] } else { iv.lower()[i] })
            .collect();
        let best = feasible
            .iter()
            .map(|x| integer_cost(x, &induced))
            .min()
            .expect("nonempty feasible set");
        let at_induced = integer_cost(y, &induced) - best;
        if max_regret[k] != at_induced {
            return Err(format!(
                "solution {:?}: worst corner regret {} but induced-scenario regret {}",
                y, max_regret[k], at_induced
            ));
        }
    }
    Ok(())
}

/// Exactness, approximation, and sandwich checks against brute force.
fn check_solvers(problem: &dyn RobustProblem) -> Result<(), String> {
    let unlimited = Budget::unlimited();
    let brute = brute_force_robust(problem, ENUM_CAP, &unlimited).map_err(|e| e.to_string())?;
    let opt = brute.robustness_cost;

    let exact = benders(problem, &unlimited).map_err(|e| e.to_string())?;
    if exact.status != SolveStatus::Proved || exact.robustness_cost != opt {
        return Err(format!(
            "decomposition returned {} ({:?}), brute force {opt}",
            exact.robustness_cost, exact.status
        ));
    }

    let mid = amu(problem, &unlimited).map_err(|e| e.to_string())?;
    if mid.robustness_cost < opt || mid.robustness_cost > 2 * opt {
        return Err(format!(
            "midpoint heuristic {} outside [{opt}, {}]",
            mid.robustness_cost,
            2 * opt
        ));
    }

    let dual = lph(problem, &unlimited).map_err(|e| e.to_string())?;
    let h = dual
        .heuristic_objective
        .ok_or("dual heuristic reported no model objective")?;
    if dual.robustness_cost < opt {
        return Err(format!(
            "dual heuristic {} below the optimum {opt}",
            dual.robustness_cost
        ));
    }
    if (dual.robustness_cost as f64) > h + EPS_DUAL * (1.0 + h.abs()) {
        return Err(format!(
            "dual heuristic cost {} above its model objective {h}",
            dual.robustness_cost
        ));
    }
    Ok(())
}

fn check_extraction(rng: &mut Rng) -> Result<(), String> {
    let (g, walk) = walk_with_cycle(rng);
    let unlimited = Budget::unlimited();
    let walk_regret = robustness_cost(&walk, &g, &unlimited).map_err(|e| e.to_string())?;
    let path = extract_elementary(&g, &walk).map_err(|e| e.to_string())?;
    if !path.is_elementary(&g) {
        return Err(format!(
            "extraction left a repeated vertex\ncounterexample instance:\n{}",
            write_rrsp(&g)
        ));
    }
    let path_regret = robustness_cost(&path.as_selection(g.arc_count()), &g, &unlimited)
        .map_err(|e| e.to_string())?;
    if path_regret > walk_regret {
        return Err(format!(
            "extracted path regret {path_regret} exceeds walk regret {walk_regret}\ncounterexample instance:\n{}",
            write_rrsp(&g)
        ));
    }
    Ok(())
}

pub fn cmd_verify(
    trials: u64,
    seed: u64,
    max_vertices: usize,
    max_cols: usize,
) -> Result<(), String> {
    if !(4..=12).contains(&max_vertices) {
        return Err(format!(
            "--max-vertices must be in 4..=12 (enumeration stays tractable), got {max_vertices}"
        ));
    }
    if !(3..=10).contains(&max_cols) {
        return Err(format!(
            "--max-cols must be in 3..=10 (corner scenarios stay tractable), got {max_cols}"
        ));
    }
    if trials == 0 {
        println!("warning: 0 trials requested; all checks pass vacuously");
        return Ok(());
    }
    let mut rng = Rng::new(seed);
    for trial in 0..trials {
        let g = random_digraph(&mut rng, max_vertices);
        check_solvers(&g).map_err(|msg| {
            format!(
                "trial {trial}, path instance: {msg}\ncounterexample instance:\n{}",
                write_rrsp(&g)
            )
        })?;
        check_induced_scenario(&g).map_err(|msg| {
            format!(
                "trial {trial}, path instance: {msg}\ncounterexample instance:\n{}",
                write_rrsp(&g)
            )
        })?;

        let p = random_cover(&mut rng, max_cols);
        check_solvers(&p).map_err(|msg| {
            format!(
                "trial {trial}, covering instance: {msg}\ncounterexample instance:\n{}",
                write_rsc(&p)
            )
        })?;
        check_induced_scenario(&p).map_err(|msg| {
            format!(
                "trial {trial}, covering instance: {msg}\ncounterexample instance:\n{}",
                write_rsc(&p)
            )
        })?;

        check_extraction(&mut rng).map_err(|msg| format!("trial {trial}: {msg}"))?;
    }
    println!(
        "verified {trials} trials: exact = brute force, heuristics within bounds, \
         scenario and extraction identities hold"
    );
    Ok(())
}
