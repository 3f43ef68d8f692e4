//! Wall-clock comparison of the Adomian polynomial generators.
//!
//! Every `(algorithm, power, order)` cell is run `warmup` times untimed and
//! then `repetitions` times timed, one run at a time on the calling thread.
//! A run that exceeds the timeout is recorded as `timeout`, and so is every
//! remaining repetition and every larger order of the same algorithm and
//! power. Generated polynomials are discarded after each run.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::matrix::{adomian_power_1d_until, PowerSpec};
use crate::polynomial::Polynomial;
use crate::reference::{duan_c1_until, duan_c3_until, oracle_1d};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Matrix,
    Duan1,
    Duan3,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Matrix, Algorithm::Duan1, Algorithm::Duan3, Algorithm::Oracle];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Matrix => "matrix",
            Algorithm::Duan1 => "duan1",
            Algorithm::Duan3 => "duan3",
            Algorithm::Oracle => "oracle",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.map(|a| a.name()).join(", ")
    }

    /// `A_0 .. A_{n-1}` of `u^N`, aborting once `deadline` passes.
    pub fn generate(&self, power: u32, order: usize, deadline: &Deadline) -> Result<Vec<Polynomial>> {
        match self {
            Algorithm::Matrix => {
                let spec = PowerSpec::new_1d(power, order)?;
                Ok(adomian_power_1d_until(spec, deadline)?.grid.into_entries())
            }
            Algorithm::Duan1 => duan_c1_until(power, order, deadline),
            Algorithm::Duan3 => duan_c3_until(power, order, deadline),
            Algorithm::Oracle => (0..order as u32)
                .map(|m| {
                    deadline.check()?;
                    Ok(oracle_1d(power, m))
                })
                .collect(),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm { name: s.to_string(), valid: Self::valid_names() })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub powers: Vec<u32>,
    pub orders: Vec<usize>,
    pub repetitions: usize,
    pub timeout: Duration,
    pub warmup: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: vec![Algorithm::Matrix, Algorithm::Duan1, Algorithm::Duan3],
            powers: vec![3, 5, 10],
            orders: vec![10, 30, 50, 100],
            repetitions: 1,
            timeout: Duration::from_secs(600),
            warmup: 1,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(msg.to_string()));
        if self.algorithms.is_empty() || self.powers.is_empty() || self.orders.is_empty() {
            return bad("algorithms, powers and orders must be non-empty");
        }
        if self.repetitions < 1 {
            return bad("repetitions must be at least 1");
        }
        if self.powers.contains(&0) || self.orders.contains(&0) {
            return bad("powers and orders must be positive");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Timeout => "timeout",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub power: u32,
    pub order: usize,
    /// 1-based.
    pub repetition: usize,
    /// `None` for timeouts.
    pub seconds: Option<f64>,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

/// Median seconds of one `(algorithm, power, order)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryCell {
    pub algorithm: Algorithm,
    pub power: u32,
    pub order: usize,
    /// `None` if any repetition timed out.
    pub median: Option<f64>,
}

impl BenchReport {
    pub fn all_timed_out(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.status == Status::Timeout)
    }

    pub fn summary(&self) -> Vec<SummaryCell> {
        let mut out: Vec<SummaryCell> = Vec::new();
        let mut samples: Vec<Option<f64>> = Vec::new();
        let flush = |out: &mut Vec<SummaryCell>, samples: &mut Vec<Option<f64>>| {
            if let Some(last) = out.last_mut() {
                last.median = median(samples);
            }
            samples.clear();
        };
        for r in &self.rows {
            let same = out
                .last()
                .is_some_and(|c| (c.algorithm, c.power, c.order) == (r.algorithm, r.power, r.order));
            if !same {
                flush(&mut out, &mut samples);
                out.push(SummaryCell { algorithm: r.algorithm, power: r.power, order: r.order, median: None });
            }
            samples.push(r.seconds);
        }
        flush(&mut out, &mut samples);
        out
    }

    pub fn median(&self, algorithm: Algorithm, power: u32, order: usize) -> Option<f64> {
        self.summary()
            .into_iter()
            .find(|c| (c.algorithm, c.power, c.order) == (algorithm, power, order))
            .and_then(|c| c.median)
    }
}

fn median(samples: &[Option<f64>]) -> Option<f64> {
    let mut xs: Vec<f64> = samples.iter().copied().collect::<Option<Vec<_>>>()?;
    if xs.is_empty() {
        return None;
    }
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    Some(if xs.len() % 2 == 1 { xs[mid] } else { (xs[mid - 1] + xs[mid]) / 2.0 })
}

/// Checks that every selected algorithm agrees on the smallest configured
/// power and order, then times every cell.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    correctness_gate(cfg)?;

    let mut rows = Vec::new();
    for &algo in &cfg.algorithms {
        for &power in &cfg.powers {
            let mut exhausted_at: Option<usize> = None;
            for &order in &cfg.orders {
                let skip = exhausted_at.is_some_and(|n| order >= n);
                let timings = if skip { Vec::new() } else { time_cell(algo, power, order, cfg) };
                if timings.len() < cfg.repetitions {
                    exhausted_at = Some(exhausted_at.map_or(order, |n| n.min(order)));
                }
                for rep in 0..cfg.repetitions {
                    let seconds = timings.get(rep).copied();
                    rows.push(BenchRow {
                        algorithm: algo,
                        power,
                        order,
                        repetition: rep + 1,
                        seconds,
                        status: if seconds.is_some() { Status::Ok } else { Status::Timeout },
                    });
                }
            }
        }
    }
    Ok(BenchReport { rows })
}

/// Seconds of each completed repetition; stops at the first timeout.
fn time_cell(algo: Algorithm, power: u32, order: usize, cfg: &BenchConfig) -> Vec<f64> {
    for _ in 0..cfg.warmup {
        if timed_run(algo, power, order, cfg.timeout).is_none() {
            return Vec::new();
        }
    }
    let mut out = Vec::with_capacity(cfg.repetitions);
    for _ in 0..cfg.repetitions {
        match timed_run(algo, power, order, cfg.timeout) {
            Some(s) => out.push(s),
            None => break,
        }
    }
    out
}

fn timed_run(algo: Algorithm, power: u32, order: usize, timeout: Duration) -> Option<f64> {
    let deadline = Deadline::after(timeout);
    let start = Instant::now();
    let result = algo.generate(power, order, &deadline);
    let elapsed = start.elapsed();
    match result {
        Ok(polys) if elapsed <= timeout => {
            drop(std::hint::black_box(polys));
            Some(elapsed.as_secs_f64())
        }
        _ => None,
    }
}

fn correctness_gate(cfg: &BenchConfig) -> Result<()> {
    let power = *cfg.powers.iter().min().expect("validated");
    let order = *cfg.orders.iter().min().expect("validated");
    let (first, rest) = cfg.algorithms.split_first().expect("validated");
    let reference = first.generate(power, order, &Deadline::none())?;
    for algo in rest {
        let got = algo.generate(power, order, &Deadline::none())?;
        if got != reference {
            let mut diff = String::new();
            for (k, (a, b)) in reference.iter().zip(&got).enumerate() {
                if a != b {
                    diff.push_str(&format!("A[{k}]\n  {first}: {a}\n  {algo}: {b}\n"));
                }
            }
            return Err(Error::Disagreement { power, order, diff });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidSpec(format!("unknown report format {other:?}; use csv or json"))),
        }
    }
}

pub const CSV_HEADER: [&str; 6] = ["algorithm", "power", "order", "repetition", "seconds", "status"];

pub fn write_report(r: &BenchReport, format: ReportFormat, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(file);
    write_report_to(r, format, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Seconds are printed with six decimals; timeouts leave the field empty
/// (CSV) or `null` (JSON).
pub fn write_report_to<W: Write>(r: &BenchReport, format: ReportFormat, w: W) -> Result<()> {
    match format {
        ReportFormat::Csv => {
            let mut out = csv::Writer::from_writer(w);
            let csv_err = |e: csv::Error| Error::Io(e.to_string());
            out.write_record(CSV_HEADER).map_err(csv_err)?;
            for row in &r.rows {
                out.write_record([
                    row.algorithm.name().to_string(),
                    row.power.to_string(),
                    row.order.to_string(),
                    row.repetition.to_string(),
                    row.seconds.map(|s| format!("{s:.6}")).unwrap_or_default(),
                    row.status.to_string(),
                ])
                .map_err(csv_err)?;
            }
            out.flush()?;
        }
        ReportFormat::Json => {
            let mut w = w;
            serde_json::to_writer_pretty(&mut w, &r.rows).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(w)?;
        }
    }
    Ok(())
}

/// Plain-text table of medians, one line per `(power, order)`, one column
/// per algorithm.
pub fn format_summary(r: &BenchReport) -> String {
    let cells = r.summary();
    let mut algos: Vec<Algorithm> = Vec::new();
    let mut keys: Vec<(u32, usize)> = Vec::new();
    for c in &cells {
        if !algos.contains(&c.algorithm) {
            algos.push(c.algorithm);
        }
        if !keys.contains(&(c.power, c.order)) {
            keys.push((c.power, c.order));
        }
    }
    let mut out = format!("{:>6} {:>6}", "power", "order");
    for a in &algos {
        out.push_str(&format!(" {:>12}", a.name()));
    }
    out.push('\n');
    for (power, order) in keys {
        out.push_str(&format!("{power:>6} {order:>6}"));
        for a in &algos {
            let cell = cells
                .iter()
                .find(|c| (c.algorithm, c.power, c.order) == (*a, power, order))
                .and_then(|c| c.median);
            match cell {
                Some(s) => out.push_str(&format!(" {s:>12.6}")),
                None => out.push_str(&format!(" {:>12}", "timeout")),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(algorithm: Algorithm, order: usize, seconds: Option<f64>) -> BenchRow {
        BenchRow {
            algorithm,
            power: 3,
            order,
            repetition: 1,
            seconds,
            status: if seconds.is_some() { Status::Ok } else { Status::Timeout },
        }
    }

    fn csv_of(r: &BenchReport) -> String {
        let mut buf = Vec::new();
        write_report_to(r, ReportFormat::Csv, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_rows() {
        let r = BenchReport { rows: vec![row(Algorithm::Matrix, 10, Some(0.00047)), row(Algorithm::Duan1, 100, None)] };
        assert_eq!(
            csv_of(&r),
            "algorithm,power,order,repetition,seconds,status\nmatrix,3,10,1,0.000470,ok\nduan1,3,100,1,,timeout\n"
        );
        assert_eq!(csv_of(&BenchReport::default()), "algorithm,power,order,repetition,seconds,status\n");
    }

    #[test]
    fn json_rows() {
        let r = BenchReport { rows: vec![row(Algorithm::Duan3, 30, None)] };
        let mut buf = Vec::new();
        write_report_to(&r, ReportFormat::Json, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(
            v,
            serde_json::json!([{"algorithm": "duan3", "power": 3, "order": 30, "repetition": 1,
                                "seconds": null, "status": "timeout"}])
        );
    }

    #[test]
    fn algorithm_names() {
        assert_eq!("duan3".parse::<Algorithm>().unwrap(), Algorithm::Duan3);
        let err = "foo".parse::<Algorithm>().unwrap_err();
        assert!(err.to_string().contains("matrix, duan1, duan3, oracle"));
    }

    #[test]
    fn row_count_contract() {
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Matrix, Algorithm::Duan3],
            powers: vec![3],
            orders: vec![10],
            repetitions: 3,
            timeout: Duration::from_secs(60),
            warmup: 1,
        };
        let r = run_bench(&cfg).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(r.rows.iter().all(|x| x.status == Status::Ok && x.seconds.is_some()));
        assert_eq!(r.rows.iter().map(|x| x.repetition).collect::<Vec<_>>(), [1, 2, 3, 1, 2, 3]);
        assert!(r.median(Algorithm::Matrix, 3, 10).is_some());
    }

    #[test]
    fn forced_timeout() {
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Matrix, Algorithm::Duan1],
            powers: vec![3],
            orders: vec![10, 20],
            repetitions: 2,
            timeout: Duration::from_secs_f64(0.000001),
            warmup: 0,
        };
        let r = run_bench(&cfg).unwrap();
        assert_eq!(r.rows.len(), 8);
        assert!(r.all_timed_out());
        assert!(r.rows.iter().all(|x| x.seconds.is_none()));
        assert!(format_summary(&r).contains("timeout"));
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = BenchConfig { repetitions: 0, ..BenchConfig::default() };
        assert!(run_bench(&cfg).is_err());
        cfg.repetitions = 1;
        cfg.orders.clear();
        assert!(run_bench(&cfg).is_err());
    }

    #[test]
    fn medians() {
        assert_eq!(median(&[Some(3.0), Some(1.0), Some(2.0)]), Some(2.0));
        assert_eq!(median(&[Some(1.0), Some(4.0)]), Some(2.5));
        assert_eq!(median(&[Some(1.0), None]), None);
    }
}
