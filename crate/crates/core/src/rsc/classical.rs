//! Exact classical set covering under a fixed cost scenario.

use crate::budget::Budget;
use crate::lp::{solve_milp_warm, MilpStatus};
use crate::regret::Scenario;
use crate::rsc::model::build_i2;
use crate::rsc::{IntervalCoverProblem, RscError};

/// Cheapest-ratio greedy covering: repeatedly take the column minimizing
/// cost per newly covered row. Always succeeds on a validated instance;
/// used only to seed the branch-and-bound incumbent.
fn greedy_cover(p: &IntervalCoverProblem, costs: &[f64]) -> Vec<u8> {
    let n = p.num_cols();
    let mut covered = vec![false; p.num_rows()];
    let mut uncovered = p.num_rows();
    let mut selection = vec![0u8; n];
    while uncovered > 0 {
        let mut best: Option<(f64, usize)> = None;
        for j in 0..n {
            if selection[j] == 1 {
                continue;
            }
            let newly = p.matrix().col(j).iter().filter(|&&i| !covered[i]).count();
            if newly == 0 {
                continue;
            }
            let score = costs[j] / newly as f64;
            let better = match best {
                None => true,
                Some((s, _)) => score < s,
            };
            if better {
                best = Some((score, j));
            }
        }
        let (_, j) = best.expect("validated instance always has a covering");
        selection[j] = 1;
        for &i in p.matrix().col(j) {
            if !covered[i] {
                covered[i] = true;
                uncovered -= 1;
            }
        }
    }
    selection
}

/// Exact minimum-cost covering in the given scenario. Returns the chosen
/// column indices (ascending) and the optimal cost.
pub fn classical_sc(
    p: &IntervalCoverProblem,
    scenario: &Scenario,
    budget: &Budget,
) -> Result<(Vec<usize>, f64), RscError> {
    if scenario.costs.len() != p.num_cols() {
        return Err(RscError::BadInstance(format!(
            "scenario has {} costs for {} columns",
            scenario.costs.len(),
            p.num_cols()
        )));
    }
    if scenario.costs.iter().any(|c| !c.is_finite() || *c < 0.0) {
        return Err(RscError::BadInstance(
            "scenario costs must be finite and nonnegative".into(),
        ));
    }
    let warm: Vec<f64> = greedy_cover(p, &scenario.costs)
        .into_iter()
        .map(f64::from)
        .collect();
    let mip = build_i2(p, scenario);
    let res = solve_milp_warm(&mip, budget, Some(&warm))
        .map_err(|e| RscError::BadInstance(e.to_string()))?;
    match res.status {
        MilpStatus::Optimal => {
            let x = res.incumbent.expect("optimal result carries an incumbent");
            let columns: Vec<usize> = (0..p.num_cols()).filter(|&j| x[j] > 0.5).collect();
            let cost = res.objective.expect("optimal result carries an objective");
            Ok((columns, cost))
        }
        MilpStatus::Infeasible => Err(RscError::Infeasible),
        MilpStatus::TimedOut | MilpStatus::Feasible => Err(RscError::Timeout),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::rsc::CoverMatrix;

    fn scenario(costs: Vec<f64>) -> Scenario {
        Scenario { costs }
    }

    #[test]
    fn identity_matrix_needs_every_column() {
        let m = CoverMatrix::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let p = IntervalCoverProblem::new(m, vec![1, 2, 3], vec![1, 2, 3]).unwrap();
        let (cols, cost) =
            classical_sc(&p, &scenario(vec![1.0, 2.0, 3.0]), &Budget::unlimited()).unwrap();
        assert_eq!(cols, vec![0, 1, 2]);
        assert_eq!(cost, 6.0);
    }

    #[test]
    fn cheap_singletons_beat_one_expensive_umbrella() {
        // Column 0 covers everything at cost 5; columns 1..3 are singletons
        // at cost 1 each. The singletons win, and the greedy warm start
        // (which grabs the umbrella first at ratio 5/3) does not mislead
        // the exact solve.
        let m = CoverMatrix::new(
            4,
            vec![vec![0, 1], vec![0, 2], vec![0, 3]],
        )
        .unwrap();
        let p = IntervalCoverProblem::new(m, vec![5, 1, 1, 1], vec![5, 1, 1, 1]).unwrap();
        let (cols, cost) =
            classical_sc(&p, &scenario(vec![5.0, 1.0, 1.0, 1.0]), &Budget::unlimited()).unwrap();
        assert_eq!(cols, vec![1, 2, 3]);
        assert_eq!(cost, 3.0);
    }

    #[test]
    fn greedy_always_returns_a_covering() {
        let mut rng = Rng::new(99);
        for _ in 0..50 {
            let (p, costs) = random_instance(&mut rng, 6, 8);
            let sel = greedy_cover(&p, &costs);
            assert!(p.matrix().covers(&sel));
        }
    }

    #[test]
    fn matches_exhaustive_search_on_random_instances() {
        let mut rng = Rng::new(7);
        for _ in 0..25 {
            let (p, costs) = random_instance(&mut rng, 6, 8);
            let (_, cost) = classical_sc(&p, &scenario(costs.clone()), &Budget::unlimited())
                .unwrap();
            let best = exhaustive_best(&p, &costs);
            assert_eq!(cost, best, "costs {costs:?}");
        }
    }

    fn random_instance(rng: &mut Rng, rows: usize, cols: usize) -> (IntervalCoverProblem, Vec<f64>) {
        loop {
            let mut row_lists = vec![Vec::new(); rows];
            for (i, list) in row_lists.iter_mut().enumerate() {
                for j in 0..cols {
                    if rng.below(3) == 0 {
                        list.push(j);
                    }
                }
                if list.is_empty() {
                    list.push((i + rng.below(cols as u64) as usize) % cols);
                }
            }
            let costs: Vec<i64> = (0..cols).map(|_| rng.range_i64(1, 20)).collect();
            let matrix = match CoverMatrix::new(cols, row_lists) {
                Ok(m) => m,
                Err(_) => continue,
            };
            let p = IntervalCoverProblem::new(matrix, costs.clone(), costs.clone()).unwrap();
            let costs_f: Vec<f64> = costs.iter().map(|&c| c as f64).collect();
            return (p, costs_f);
        }
    }

    fn exhaustive_best(p: &IntervalCoverProblem, costs: &[f64]) -> f64 {
        let n = p.num_cols();
        let mut best = f64::INFINITY;
        for mask in 0usize..(1 << n) {
            let sel: Vec<u8> = (0..n).map(|j| ((mask >> j) & 1) as u8).collect();
            if p.matrix().covers(&sel) {
                let c: f64 = (0..n).filter(|&j| sel[j] == 1).map(|j| costs[j]).sum();
                best = best.min(c);
            }
        }
        best
    }
}
