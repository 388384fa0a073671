//! Manifest-driven benchmark harness.
//!
//! Manifest format, one cell group per line:
//!
//! ```text
//! # set      instance-path              algorithms        limit
//! K-20-0.5   instances/K-..._s1.rrsp    benders,lph,amu   60
//! K-20-0.5   instances/K-..._s2.rrsp    benders,lph,amu   none
//! ```
//!
//! Instance paths are resolved relative to the manifest file. Every
//! (instance, algorithm) cell runs independently on a worker pool capped
//! by `REGRET_KIT_THREADS` (default: all logical processors); aggregation
//! happens only after the pool has drained, and gaps are recomputed
//! against the best proved lower bound found for each instance.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::record::{fmt2, gap_pct, mean, sample_stdev, BenchRecord, CSV_HEADER, STDEV_NOTE};
use crate::solve::{run_cell, stem_of, Algo, Instance};

struct Cell {
    set: String,
    path: PathBuf,
    stem: String,
    algo: Algo,
    limit: Option<Duration>,
}

fn parse_algo(token: &str) -> Result<Algo, String> {
    match token {
        "benders" => Ok(Algo::Benders),
        "lph" => Ok(Algo::Lph),
        "amu" => Ok(Algo::Amu),
        "brute" => Ok(Algo::Brute),
        other => Err(format!("unknown algorithm {other:?}")),
    }
}

fn parse_manifest(path: &Path) -> Result<Vec<Cell>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut cells = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| format!("{}:{}: {msg}", path.display(), idx + 1);
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(at(format!(
                "expected `<set> <instance> <algo,algo,...> <limit-seconds|none>`, got {} fields",
                fields.len()
            )));
        }
        let set = fields[0];
        if set.contains(',') {
            return Err(at(format!("set name {set:?} must not contain commas")));
        }
        let inst_path = base.join(fields[1]);
        let stem = stem_of(&inst_path);
        let limit = match fields[3] {
            "none" => None,
            s => {
                let secs: f64 = s
                    .parse()
                    .map_err(|_| at(format!("limit {s:?} is not a number")))?;
                if !secs.is_finite() || secs <= 0.0 {
                    return Err(at(format!("limit must be positive, got {s}")));
                }
                Some(Duration::from_secs_f64(secs))
            }
        };
        for token in fields[2].split(',') {
            let algo = parse_algo(token).map_err(&at)?;
            cells.push(Cell {
                set: set.to_string(),
                path: inst_path.clone(),
                stem: stem.clone(),
                algo,
                limit,
            });
        }
    }
    if cells.is_empty() {
        return Err(format!("{}: manifest has no runnable cells", path.display()));
    }
    Ok(cells)
}

fn thread_cap() -> Result<usize, String> {
    match std::env::var("REGRET_KIT_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!(
                "REGRET_KIT_THREADS must be a positive integer, got {v:?}"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
        Err(e) => Err(format!("REGRET_KIT_THREADS: {e}")),
    }
}

/// Runs one cell start to finish; any failure becomes an `error` row so
/// the rest of the run continues.
fn run_one(cell: &Cell) -> BenchRecord {
    let start = Instant::now();
    let outcome = Instance::load(&cell.path).and_then(|inst| run_cell(&inst, cell.algo, cell.limit));
    match outcome {
        Ok(o) => BenchRecord {
            instance: cell.stem.clone(),
            set: cell.set.clone(),
            algo: cell.algo.name(),
            status: o.status,
            ub: o.ub,
            lb: o.lb,
            gap_pct: o.gap_pct,
            time_s: o.time_s,
            iters: o.iters,
        },
        Err(msg) => {
            eprintln!("{} [{}]: {msg}", cell.stem, cell.algo.name());
            BenchRecord {
                instance: cell.stem.clone(),
                set: cell.set.clone(),
                algo: cell.algo.name(),
                status: "error",
                ub: None,
                lb: None,
                gap_pct: None,
                time_s: start.elapsed().as_secs_f64(),
                iters: None,
            }
        }
    }
}

fn run_pool(cells: &[Cell]) -> Result<Vec<BenchRecord>, String> {
    let threads = thread_cap()?.min(cells.len());
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<BenchRecord>>> =
        (0..cells.len()).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cells.len() {
                    break;
                }
                let record = run_one(&cells[i]);
                *slots[i].lock().expect("no panics hold this lock") = Some(record);
            });
        }
    });
    Ok(slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .expect("no panics hold this lock")
                .expect("every index below cells.len() was claimed")
        })
        .collect())
}

/// Per-set summary in the benchmark-table shape: per algorithm the number
/// of rows, how many are proved optimal (gap exactly zero), mean time over
/// those, and mean/stdev of the gaps; then the per-instance improvement of
/// the dual heuristic over the midpoint heuristic.
fn summarize_set(set: &str, rows: &[&BenchRecord]) -> String {
    let mut out = format!("set {set}\n");
    out.push_str("algo,n,opt,mean_time_s,mean_gap_pct,stdev_gap_pct\n");
    for algo in ["benders", "brute", "lph", "amu"] {
        let cells: Vec<&BenchRecord> =
            rows.iter().filter(|r| r.algo == algo).copied().collect();
        if cells.is_empty() {
            continue;
        }
        let gaps: Vec<f64> = cells.iter().filter_map(|r| r.gap_pct).collect();
        let opt: Vec<&BenchRecord> = cells
            .iter()
            .filter(|r| r.gap_pct == Some(0.0))
            .copied()
            .collect();
        let opt_times: Vec<f64> = opt.iter().map(|r| r.time_s).collect();
        out.push_str(&format!(
            "{algo},{},{},{},{},{}\n",
            cells.len(),
            opt.len(),
            fmt2(mean(&opt_times)),
            fmt2(mean(&gaps)),
            fmt2(if gaps.len() < 2 { None } else { sample_stdev(&gaps) }),
        ));
    }
    let mut by_instance: BTreeMap<&str, (Option<i64>, Option<i64>)> = BTreeMap::new();
    for r in rows {
        let entry = by_instance.entry(r.instance.as_str()).or_default();
        match r.algo {
            "lph" => entry.0 = entry.0.or(r.ub),
            "amu" => entry.1 = entry.1.or(r.ub),
            _ => {}
        }
    }
    let improvements: Vec<f64> = by_instance
        .values()
        .filter_map(|&(l, a)| match (l, a) {
            (Some(l), Some(a)) if a != 0 => Some(100.0 * (a - l) as f64 / a as f64),
            _ => None,
        })
        .collect();
    if improvements.is_empty() {
        out.push_str("improvement_lph_vs_amu,n=0\n");
    } else {
        let min = improvements.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = improvements
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        out.push_str(&format!(
            "improvement_lph_vs_amu,n={},min={},max={},mean={},stdev={}\n",
            improvements.len(),
            fmt2(Some(min)),
            fmt2(Some(max)),
            fmt2(mean(&improvements)),
            fmt2(if improvements.len() < 2 {
                None
            } else {
                sample_stdev(&improvements)
            }),
        ));
    }
    out
}

pub fn cmd_bench(manifest: &Path, out: &Path) -> Result<(), String> {
    let cells = parse_manifest(manifest)?;
    let mut rows = run_pool(&cells)?;

    // Gap of every row is measured against the best proved bound known
    // for its instance, which comes from the exact methods in the run.
    let mut best_lb: BTreeMap<String, i64> = BTreeMap::new();
    for r in &rows {
        if let Some(lb) = r.lb {
            best_lb
                .entry(r.instance.clone())
                .and_modify(|b| *b = (*b).max(lb))
                .or_insert(lb);
        }
    }
    for r in &mut rows {
        r.gap_pct = match (r.ub, best_lb.get(&r.instance)) {
            (Some(ub), Some(&lb)) => gap_pct(ub, lb),
            _ => None,
        };
    }
    rows.sort_by(|a, b| {
        (&a.set, &a.instance, a.algo).cmp(&(&b.set, &b.instance, b.algo))
    });

    let mut by_set: BTreeMap<&str, Vec<&BenchRecord>> = BTreeMap::new();
    for r in &rows {
        by_set.entry(r.set.as_str()).or_default().push(r);
    }
    let summaries: Vec<String> = by_set
        .iter()
        .map(|(set, rs)| summarize_set(set, rs))
        .collect();

    let mut csv = String::new();
    csv.push_str(STDEV_NOTE);
    csv.push('\n');
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    for r in &rows {
        csv.push_str(&r.csv_line());
        csv.push('\n');
    }
    for block in &summaries {
        for line in block.lines() {
            csv.push_str("# ");
            csv.push_str(line);
            csv.push('\n');
        }
    }
    fs::write(out, &csv).map_err(|e| format!("writing {}: {e}", out.display()))?;

    for block in &summaries {
        print!("{block}");
        println!();
    }
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn manifest_from(dir: &Path, text: &str) -> PathBuf {
        let path = dir.join("manifest.txt");
        let mut f = fs::File::create(&path).unwrap();
        f.write_all(text.as_bytes()).unwrap();
        path
    }

    #[test]
    fn manifest_lines_expand_to_cells() {
        let dir = std::env::temp_dir().join("regret-kit-manifest-test");
        fs::create_dir_all(&dir).unwrap();
        let m = manifest_from(
            &dir,
            "# comment\n\nsetA a_s1.rrsp benders,lph 60\nsetA a_s2.rrsp amu none\n",
        );
        let cells = parse_manifest(&m).unwrap();
        assert_eq!(cells.len(), 3);
        assert_eq!(cells[0].algo, Algo::Benders);
        assert_eq!(cells[1].algo, Algo::Lph);
        assert_eq!(cells[1].limit, Some(Duration::from_secs(60)));
        assert_eq!(cells[2].algo, Algo::Amu);
        assert_eq!(cells[2].limit, None);
        assert_eq!(cells[2].stem, "a_s2");
        assert_eq!(cells[2].set, "setA");
        // Relative paths resolve against the manifest directory.
        assert_eq!(cells[0].path, dir.join("a_s1.rrsp"));
    }

    #[test]
    fn manifest_rejects_malformed_lines() {
        let dir = std::env::temp_dir().join("regret-kit-manifest-bad");
        fs::create_dir_all(&dir).unwrap();
        for bad in [
            "setA a.rrsp benders",
            "setA a.rrsp dance 60",
            "setA a.rrsp benders -3",
            "se,tA a.rrsp benders 60",
            "",
        ] {
            let m = manifest_from(&dir, bad);
            assert!(parse_manifest(&m).is_err(), "accepted {bad:?}");
        }
    }
}
