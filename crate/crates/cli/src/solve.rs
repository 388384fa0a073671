//! Instance loading and single-cell execution: one algorithm on one
//! instance, with timeout and infeasibility folded into the record rather
//! than reported as failures.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use regret_core::budget::Budget;
use regret_core::regret::algorithms::{amu, benders, brute_force_robust, lph};
use regret_core::regret::{RegretError, RobustProblem, SolveReport, SolveStatus};
use regret_core::rrsp::{parse_rrsp, IntervalDigraph};
use regret_core::rsc::{parse_rsc, IntervalCoverProblem};

use crate::record::{gap_pct, BenchRecord, CSV_HEADER};

/// Candidate cap for the exhaustive solver. Anything that would exceed it
/// should be run with an algorithm that scales.
const BRUTE_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Algo {
    Benders,
    Lph,
    Amu,
    Brute,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Benders => "benders",
            Algo::Lph => "lph",
            Algo::Amu => "amu",
            Algo::Brute => "brute",
        }
    }
}

pub enum Instance {
    Path(IntervalDigraph),
    Cover(IntervalCoverProblem),
}

impl Instance {
    /// Reads either instance format; the header token decides, so the
    /// file extension never matters.
    pub fn load(path: &Path) -> Result<Instance, String> {
        let text =
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let tag = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .next();
        match tag {
            Some("rrsp") => parse_rrsp(&text)
                .map(Instance::Path)
                .map_err(|e| format!("{}: {e}", path.display())),
            Some("rsc") => parse_rsc(&text)
                .map(Instance::Cover)
                .map_err(|e| format!("{}: {e}", path.display())),
            Some(other) => Err(format!(
                "{}: unrecognized header token {other:?} (expected rrsp or rsc)",
                path.display()
            )),
            None => Err(format!("{}: no content", path.display())),
        }
    }

    pub fn problem(&self) -> &dyn RobustProblem {
        match self {
            Instance::Path(g) => g,
            Instance::Cover(p) => p,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Instance::Path(g) => format!(
                "path instance: {} vertices, {} arcs, resource limit {}",
                g.vertex_count(),
                g.arc_count(),
                g.beta()
            ),
            Instance::Cover(p) => format!(
                "covering instance: {} rows, {} columns",
                p.num_rows(),
                p.num_cols()
            ),
        }
    }
}

/// What one algorithm run produced, before the row is tied to an instance
/// name and set.
pub struct CellOutcome {
    pub status: &'static str,
    pub ub: Option<i64>,
    pub lb: Option<i64>,
    pub gap_pct: Option<f64>,
    pub time_s: f64,
    pub iters: Option<u64>,
    /// Raw heuristic model objective (dual heuristic only); shown in the
    /// human report, not a CSV column.
    pub heuristic_objective: Option<f64>,
}

fn outcome_of(report: SolveReport) -> CellOutcome {
    let status = match report.status {
        SolveStatus::Proved => "proved",
        SolveStatus::HeuristicUb => "heuristic",
        SolveStatus::TimedOut => "timeout",
    };
    let ub = report.robustness_cost;
    CellOutcome {
        status,
        ub: Some(ub),
        lb: report.lower_bound,
        gap_pct: report.lower_bound.and_then(|lb| gap_pct(ub, lb)),
        time_s: report.wall_time.as_secs_f64(),
        iters: Some(report.iterations),
        heuristic_objective: report.heuristic_objective,
    }
}

/// Runs one cell. Timeout without an incumbent and infeasibility become
/// row outcomes; anything else (bad instance, cap overflow) is an error.
pub fn run_cell(
    instance: &Instance,
    algo: Algo,
    limit: Option<Duration>,
) -> Result<CellOutcome, String> {
    let budget = match limit {
        Some(d) => Budget::with_limit(d),
        None => Budget::unlimited(),
    };
    let problem = instance.problem();
    let start = Instant::now();
    let run = match algo {
        Algo::Benders => benders(problem, &budget),
        Algo::Lph => lph(problem, &budget),
        Algo::Amu => amu(problem, &budget),
        Algo::Brute => brute_force_robust(problem, BRUTE_CAP, &budget),
    };
    let empty = |status: &'static str| CellOutcome {
        status,
        ub: None,
        lb: None,
        gap_pct: None,
        time_s: start.elapsed().as_secs_f64(),
        iters: None,
        heuristic_objective: None,
    };
    match run {
        Ok(report) => Ok(outcome_of(report)),
        Err(RegretError::Timeout) => Ok(empty("timeout")),
        Err(RegretError::InfeasibleProblem) => Ok(empty("infeasible")),
        Err(e) => Err(e.to_string()),
    }
}

/// Instance-set name: the stem with its `_s<seed>` suffix removed, so all
/// seeds of one configuration aggregate together.
pub fn set_name(stem: &str) -> String {
    match stem.rsplit_once("_s") {
        Some((head, tail))
            if !head.is_empty() && !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) =>
        {
            head.to_string()
        }
        _ => stem.to_string(),
    }
}

pub fn stem_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn cmd_solve(
    path: &Path,
    algo: Algo,
    time_limit: Option<f64>,
    _seed: u64,
) -> Result<(), String> {
    let limit = match time_limit {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(format!("--time-limit must be a positive number, got {s}")),
        None => None,
    };
    let instance = Instance::load(path)?;
    let outcome = run_cell(&instance, algo, limit)?;
    let stem = stem_of(path);
    let record = BenchRecord {
        set: set_name(&stem),
        instance: stem,
        algo: algo.name(),
        status: outcome.status,
        ub: outcome.ub,
        lb: outcome.lb,
        gap_pct: outcome.gap_pct,
        time_s: outcome.time_s,
        iters: outcome.iters,
    };
    let dash = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    println!("instance  {} ({})", record.instance, instance.describe());
    println!("algo      {}", record.algo);
    println!("status    {}", record.status);
    println!("ub        {}", dash(record.ub.map(|v| v.to_string())));
    println!("lb        {}", dash(record.lb.map(|v| v.to_string())));
    println!("gap_pct   {}", dash(record.gap_pct.map(|v| v.to_string())));
    println!("time_s    {}", record.time_s);
    println!("iters     {}", dash(record.iters.map(|v| v.to_string())));
    if let Some(h) = outcome.heuristic_objective {
        println!("h_obj     {h}");
    }
    println!();
    println!("{CSV_HEADER}");
    println!("{}", record.csv_line());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_name_strips_only_a_trailing_seed() {
        assert_eq!(set_name("K-20-20-0.5-5_s1"), "K-20-20-0.5-5");
        assert_eq!(set_name("B.scp41-0.3_s12"), "B.scp41-0.3");
        assert_eq!(set_name("plain_society"), "plain_society");
        assert_eq!(set_name("_s9"), "_s9");
    }

    #[test]
    fn loader_sniffs_the_header_not_the_extension() {
        let dir = std::env::temp_dir().join("regret-kit-sniff-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("oddly-named.txt");
        std::fs::write(&path, "# comment\nrrsp 2 1 0 1 0\n0 1 3 5 0\n").unwrap();
        assert!(matches!(Instance::load(&path), Ok(Instance::Path(_))));
        let bad = dir.join("bad.rrsp");
        std::fs::write(&bad, "psrr 2 1 0 1 0\n").unwrap();
        assert!(Instance::load(&bad).is_err());
    }
}
