//! Seeded interval generators over set covering structures.
//!
//! Three recipes turn a cover structure into an interval instance, each
//! drawing per column in index order so instances are bit-reproducible
//! from the seed. A synthetic structure generator provides bases for
//! tests and demos without external benchmark files.

use crate::rng::Rng;
use crate::rsc::{CoverMatrix, IntervalCoverProblem, RscError, ScpBase};

fn ceil_eps(x: f64) -> i64 {
    (x - 1e-9).ceil() as i64
}

fn floor_eps(x: f64) -> i64 {
    (x + 1e-9).floor() as i64
}

/// Intervals around the base costs: per column, `l` uniform in
/// `[ceil((1-delta)*phi), phi]` then `u` uniform in `[phi,
/// floor((1+delta)*phi)]`.
pub fn generate_beasley(
    base: &ScpBase,
    delta: f64,
    seed: u64,
) -> Result<IntervalCoverProblem, RscError> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(RscError::BadShape(format!("delta {delta} outside (0, 1)")));
    }
    let mut rng = Rng::new(seed);
    let mut lower = Vec::with_capacity(base.costs().len());
    let mut upper = Vec::with_capacity(base.costs().len());
    for &phi in base.costs() {
        let l = rng.range_i64(ceil_eps((1.0 - delta) * phi as f64).max(0), phi);
        let u = rng.range_i64(phi, floor_eps((1.0 + delta) * phi as f64));
        lower.push(l);
        upper.push(u);
    }
    IntervalCoverProblem::new(base.matrix().clone(), lower, upper)
}

/// Wide independent intervals: per column, `u` uniform in `[0, 1000]`
/// then `l` uniform in `[0, u]`.
pub fn generate_montemanni(
    structure: &CoverMatrix,
    seed: u64,
) -> Result<IntervalCoverProblem, RscError> {
    let mut rng = Rng::new(seed);
    let mut lower = Vec::with_capacity(structure.num_cols());
    let mut upper = Vec::with_capacity(structure.num_cols());
    for _ in 0..structure.num_cols() {
        let u = rng.range_i64(0, 1000);
        let l = rng.range_i64(0, u);
        lower.push(l);
        upper.push(u);
    }
    IntervalCoverProblem::new(structure.clone(), lower, upper)
}

/// Shifted intervals of bounded width: per column, `l` uniform in
/// `[0, 1000]` then `u` uniform in `[l, l + 1000]`.
pub fn generate_kz(
    structure: &CoverMatrix,
    seed: u64,
) -> Result<IntervalCoverProblem, RscError> {
    let mut rng = Rng::new(seed);
    let mut lower = Vec::with_capacity(structure.num_cols());
    let mut upper = Vec::with_capacity(structure.num_cols());
    for _ in 0..structure.num_cols() {
        let l = rng.range_i64(0, 1000);
        let u = rng.range_i64(l, l + 1000);
        lower.push(l);
        upper.push(u);
    }
    IntervalCoverProblem::new(structure.clone(), lower, upper)
}

/// Random cover structure with base costs, for hermetic tests and demos.
///
/// Each incidence bit is set independently with probability `density`
/// (row-major draw order); any row left uncovered then receives one
/// uniformly drawn column; finally one base cost per column is drawn
/// uniformly from `[1, phi_max]`.
pub fn generate_synthetic_scp(
    rows: usize,
    cols: usize,
    density: f64,
    phi_max: i64,
    seed: u64,
) -> Result<ScpBase, RscError> {
    if rows == 0 || cols == 0 {
        return Err(RscError::BadShape(format!(
            "structure {rows}x{cols} is empty"
        )));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(RscError::BadShape(format!(
            "density {density} outside (0, 1]"
        )));
    }
    if phi_max < 1 {
        return Err(RscError::BadShape(format!("phi_max {phi_max} < 1")));
    }
    let mut rng = Rng::new(seed);
    let mut row_lists = vec![Vec::new(); rows];
    for list in row_lists.iter_mut() {
        for j in 0..cols {
            if rng.unit_f64() < density {
                list.push(j);
            }
        }
    }
    for list in row_lists.iter_mut() {
        if list.is_empty() {
            list.push(rng.below(cols as u64) as usize);
        }
    }
    let costs: Vec<i64> = (0..cols).map(|_| rng.range_i64(1, phi_max)).collect();
    ScpBase::new(CoverMatrix::new(cols, row_lists)?, costs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_with_costs(costs: Vec<i64>) -> ScpBase {
        let n = costs.len();
        let matrix = CoverMatrix::new(n, vec![(0..n).collect()]).unwrap();
        ScpBase::new(matrix, costs).unwrap()
    }

    #[test]
    fn beasley_brackets_the_base_cost() {
        let base = base_with_costs(vec![10; 200]);
        for seed in 0..5 {
            let p = generate_beasley(&base, 0.5, seed).unwrap();
            for j in 0..p.num_cols() {
                let l = p.intervals().lower()[j];
                let u = p.intervals().upper()[j];
                assert!((5..=10).contains(&l), "l {l}");
                assert!((10..=15).contains(&u), "u {u}");
            }
        }
    }

    #[test]
    fn montemanni_sweep_stays_in_range() {
        let base = base_with_costs(vec![1; 1000]);
        let p = generate_montemanni(base.matrix(), 11).unwrap();
        for j in 0..p.num_cols() {
            let l = p.intervals().lower()[j];
            let u = p.intervals().upper()[j];
            assert!(0 <= l && l <= u && u <= 1000, "({l}, {u})");
        }
    }

    #[test]
    fn kz_sweep_shifts_and_bounds_width() {
        let base = base_with_costs(vec![1; 1000]);
        let p = generate_kz(base.matrix(), 11).unwrap();
        let mut wide = 0;
        for j in 0..p.num_cols() {
            let l = p.intervals().lower()[j];
            let u = p.intervals().upper()[j];
            assert!(l <= u && u <= l + 1000, "({l}, {u})");
            if u - l > 500 {
                wide += 1;
            }
        }
        // Widths are uniform on [0, 1000], so roughly half exceed 500.
        assert!((300..=700).contains(&wide), "wide {wide}");
    }

    #[test]
    fn synthetic_structure_is_coverable_and_reproducible() {
        let a = generate_synthetic_scp(20, 15, 0.2, 30, 5).unwrap();
        let b = generate_synthetic_scp(20, 15, 0.2, 30, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matrix().num_rows(), 20);
        assert_eq!(a.matrix().num_cols(), 15);
        for i in 0..20 {
            assert!(!a.matrix().row(i).is_empty());
        }
        for &c in a.costs() {
            assert!((1..=30).contains(&c));
        }
        let c = generate_synthetic_scp(20, 15, 0.2, 30, 6).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let base = base_with_costs(vec![10]);
        assert!(matches!(
            generate_beasley(&base, 0.0, 1),
            Err(RscError::BadShape(_))
        ));
        assert!(matches!(
            generate_synthetic_scp(0, 5, 0.5, 10, 1),
            Err(RscError::BadShape(_))
        ));
        assert!(matches!(
            generate_synthetic_scp(5, 5, 1.5, 10, 1),
            Err(RscError::BadShape(_))
        ));
    }
}
