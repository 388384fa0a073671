//! One benchmark row per (instance, algorithm) cell, plus the CSV and gap
//! conventions shared by `solve` and `bench`.

/// Raw-row column order. Summaries round to two decimals; raw rows keep
/// full float precision.
pub const CSV_HEADER: &str = "instance,set,algo,status,ub,lb,gap_pct,time_s,iters";

/// Logged at the top of every CSV so the aggregation convention is
/// explicit in the data itself.
pub const STDEV_NOTE: &str =
    "# gap statistics use the sample standard deviation (n-1 denominator)";

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub instance: String,
    pub set: String,
    pub algo: &'static str,
    /// proved | heuristic | timeout | infeasible | error
    pub status: &'static str,
    pub ub: Option<i64>,
    pub lb: Option<i64>,
    pub gap_pct: Option<f64>,
    pub time_s: f64,
    pub iters: Option<u64>,
}

impl BenchRecord {
    pub fn csv_line(&self) -> String {
        fn cell<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.set,
            self.algo,
            self.status,
            cell(&self.ub),
            cell(&self.lb),
            cell(&self.gap_pct),
            self.time_s,
            cell(&self.iters),
        )
    }
}

/// Relative optimality gap in percent. A zero upper bound is optimal
/// exactly when the bound agrees, giving a true 0% gap; with any other
/// bound the ratio is undefined and the column stays empty.
pub fn gap_pct(ub: i64, lb: i64) -> Option<f64> {
    if ub == 0 {
        if lb == 0 {
            Some(0.0)
        } else {
            None
        }
    } else {
        Some(100.0 * (ub - lb) as f64 / ub as f64)
    }
}

pub fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        None
    } else {
        Some(values.iter().sum::<f64>() / values.len() as f64)
    }
}

/// Sample standard deviation; undefined below two observations.
pub fn sample_stdev(values: &[f64]) -> Option<f64> {
    if values.len() < 2 {
        return None;
    }
    let m = mean(values).expect("nonempty");
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (values.len() - 1) as f64;
    Some(var.sqrt())
}

/// Two-decimal rendering for summary tables, with a dash for undefined
/// statistics.
pub fn fmt2(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.2}"),
        None => "-".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_handles_the_zero_cost_cases() {
        assert_eq!(gap_pct(10, 5), Some(50.0));
        assert_eq!(gap_pct(0, 0), Some(0.0));
        assert_eq!(gap_pct(0, 1), None);
        assert_eq!(gap_pct(7, 7), Some(0.0));
    }

    #[test]
    fn empty_columns_stay_empty_in_csv() {
        let r = BenchRecord {
            instance: "x_s1".into(),
            set: "x".into(),
            algo: "benders",
            status: "timeout",
            ub: None,
            lb: Some(3),
            gap_pct: None,
            time_s: 1.5,
            iters: None,
        };
        assert_eq!(r.csv_line(), "x_s1,x,benders,timeout,,3,,1.5,");
    }

    #[test]
    fn stdev_is_sample_not_population() {
        let v = [1.0, 3.0];
        // With n-1 in the denominator the variance of {1, 3} is 2.
        assert!((sample_stdev(&v).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(sample_stdev(&[1.0]), None);
    }
}
