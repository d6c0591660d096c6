//! Paired timing harness for the four hull algorithms.
//!
//! For every `(distribution, n, sample)` cell one point set is generated and
//! fed to every selected algorithm. Only the hull call is timed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::hint::black_box;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::HullError;
use crate::geometry::Point;
use crate::pipeline::equad_convex_hull;
use crate::pointgen::{generate, mix64, Distribution, GenSpec};
use crate::reference::{graham_scan, jarvis_march_until, monotone_chain};

/// Algorithms under comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Monotone,
    Jarvis,
    Graham,
    Equad,
}

impl Algorithm {
    /// Column order of the summary table.
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Monotone,
        Algorithm::Jarvis,
        Algorithm::Graham,
        Algorithm::Equad,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Algorithm::Equad => "equad",
            Algorithm::Graham => "graham",
            Algorithm::Monotone => "monotone",
            Algorithm::Jarvis => "jarvis",
        }
    }

    /// Runs the algorithm, returning the hull size or `None` on timeout.
    pub fn hull_size(self, points: &[Point<f64>], deadline: Option<Instant>) -> Option<usize> {
        match self {
            Algorithm::Equad => Some(equad_convex_hull(points).expect("validated input").0.len()),
            Algorithm::Graham => Some(graham_scan(points).len()),
            Algorithm::Monotone => Some(monotone_chain(points).len()),
            Algorithm::Jarvis => jarvis_march_until(points, deadline).ok().map(|h| h.len()),
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.token() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}' (expected equad, graham, monotone or jarvis)"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub distributions: Vec<Distribution>,
    pub samples: usize,
    pub warmups: usize,
    pub base_seed: u64,
    /// Per-call budget for Jarvis march.
    pub jarvis_budget: Option<Duration>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: Algorithm::ALL.to_vec(),
            sizes: vec![50_000, 100_000, 200_000, 500_000, 1_000_000],
            distributions: Distribution::ALL.to_vec(),
            samples: 25,
            warmups: 2,
            base_seed: 0,
            jarvis_budget: Some(Duration::from_secs(120)),
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), HullError> {
        let bad = |m: &str| Err(HullError::InvalidConfig(m.to_string()));
        if self.samples == 0 {
            return bad("samples must be at least 1");
        }
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return bad("sizes must be non-empty and each at least 1");
        }
        if self.algorithms.is_empty() || self.distributions.is_empty() {
            return bad("need at least one algorithm and one distribution");
        }
        Ok(())
    }
}

/// One timed call.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub distribution: Distribution,
    pub n: usize,
    pub sample: usize,
    pub elapsed_ns: u64,
    /// `None` when the call hit its time budget.
    pub hull_size: Option<usize>,
}

impl BenchRecord {
    pub fn timed_out(&self) -> bool {
        self.hull_size.is_none()
    }
}

pub const CSV_HEADER: &str = "algorithm,distribution,n,sample,elapsed_ns,hull_size";

/// CSV row; timed-out calls report `TIMEOUT` as hull size.
pub fn csv_row(r: &BenchRecord) -> String {
    let h = r
        .hull_size
        .map_or_else(|| "TIMEOUT".to_string(), |h| h.to_string());
    format!(
        "{},{},{},{},{},{}",
        r.algorithm.token(),
        r.distribution.token(),
        r.n,
        r.sample,
        r.elapsed_ns,
        h
    )
}

pub fn write_csv<W: Write>(mut w: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(w, "{}", csv_row(r))?;
    }
    w.flush()
}

/// FNV-1a over the cell coordinates.
fn cell_hash(dist: Distribution, n: usize, sample: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = dist
        .token()
        .bytes()
        .chain((n as u64).to_le_bytes())
        .chain((sample as u64).to_le_bytes());
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Seed of one `(distribution, n, sample)` cell.
pub fn sample_seed(base: u64, dist: Distribution, n: usize, sample: usize) -> u64 {
    mix64(base ^ cell_hash(dist, n, sample))
}

/// Input of one cell.
pub fn sample_points(base: u64, dist: Distribution, n: usize, sample: usize) -> Vec<Point<f64>> {
    generate(&GenSpec::unit(dist, n, sample_seed(base, dist, n, sample))).expect("unit spec is valid")
}

fn time_one(alg: Algorithm, points: &[Point<f64>], budget: Option<Duration>) -> (u64, Option<usize>) {
    let start = Instant::now();
    let deadline = match alg {
        Algorithm::Jarvis => budget.map(|b| start + b),
        _ => None,
    };
    let h = black_box(alg.hull_size(black_box(points), deadline));
    let ns = start.elapsed().as_nanos().max(1) as u64;
    (ns, h)
}

/// Runs every cell; `on_record` sees each record as it is produced.
pub fn run_bench_with(
    config: &BenchConfig,
    mut on_record: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, HullError> {
    config.validate()?;
    let mut records = Vec::new();
    for &dist in &config.distributions {
        for &n in &config.sizes {
            let mut warmed = false;
            for sample in 0..config.samples {
                let points = sample_points(config.base_seed, dist, n, sample);
                if !warmed {
                    for &alg in &config.algorithms {
                        for _ in 0..config.warmups {
                            time_one(alg, &points, config.jarvis_budget);
                        }
                    }
                    warmed = true;
                }
                for &alg in &config.algorithms {
                    let (elapsed_ns, hull_size) = time_one(alg, &points, config.jarvis_budget);
                    let rec = BenchRecord {
                        algorithm: alg,
                        distribution: dist,
                        n,
                        sample,
                        elapsed_ns,
                        hull_size,
                    };
                    on_record(&rec);
                    records.push(rec);
                }
            }
        }
    }
    Ok(records)
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, HullError> {
    run_bench_with(config, |_| {})
}

/// Aggregate over the completed samples of one configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub algorithm: Algorithm,
    pub distribution: Distribution,
    pub n: usize,
    pub count: usize,
    pub timeouts: usize,
    pub mean_ns: f64,
    pub median_ns: f64,
    /// Sample standard deviation; zero for a single sample.
    pub stddev_ns: f64,
}

/// Per-`(algorithm, distribution, n)` statistics, ordered by distribution,
/// then size, then algorithm.
pub fn summarize(records: &[BenchRecord]) -> Vec<SummaryRow> {
    let mut groups: BTreeMap<(Distribution, usize, Algorithm), (Vec<f64>, usize)> = BTreeMap::new();
    for r in records {
        let e = groups
            .entry((r.distribution, r.n, r.algorithm))
            .or_default();
        if r.timed_out() {
            e.1 += 1;
        } else {
            e.0.push(r.elapsed_ns as f64);
        }
    }
    groups
        .into_iter()
        .map(|((distribution, n, algorithm), (mut t, timeouts))| {
            t.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let count = t.len();
            let mean = if count > 0 { t.iter().sum::<f64>() / count as f64 } else { f64::NAN };
            let median = match count {
                0 => f64::NAN,
                c if c % 2 == 1 => t[c / 2],
                c => (t[c / 2 - 1] + t[c / 2]) / 2.0,
            };
            let stddev = if count > 1 {
                (t.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1) as f64).sqrt()
            } else {
                0.0
            };
            SummaryRow {
                algorithm,
                distribution,
                n,
                count,
                timeouts,
                mean_ns: mean,
                median_ns: median,
                stddev_ns: stddev,
            }
        })
        .collect()
}

/// Mean seconds for one configuration, if present.
pub fn mean_secs(rows: &[SummaryRow], alg: Algorithm, dist: Distribution, n: usize) -> Option<f64> {
    rows.iter()
        .find(|r| r.algorithm == alg && r.distribution == dist && r.n == n && r.count > 0)
        .map(|r| r.mean_ns * 1e-9)
}

/// One table per distribution: sizes as rows, algorithms as columns, mean
/// running time in seconds.
pub fn render_table(rows: &[SummaryRow]) -> String {
    let mut out = String::new();
    let dists: Vec<Distribution> = {
        let mut d: Vec<_> = rows.iter().map(|r| r.distribution).collect();
        d.dedup();
        d
    };
    for dist in dists {
        let mut algs: Vec<Algorithm> = rows
            .iter()
            .filter(|r| r.distribution == dist)
            .map(|r| r.algorithm)
            .collect();
        algs.sort();
        algs.dedup();
        let mut sizes: Vec<usize> = rows
            .iter()
            .filter(|r| r.distribution == dist)
            .map(|r| r.n)
            .collect();
        sizes.dedup();
        let _ = writeln!(out, "mean running time (s), distribution = {}", dist.token());
        let _ = write!(out, "{:>12}", "n");
        for a in &algs {
            let _ = write!(out, " {:>12}", a.token());
        }
        out.push('\n');
        for n in sizes {
            let _ = write!(out, "{n:>12}");
            for &a in &algs {
                let cell = rows
                    .iter()
                    .find(|r| r.algorithm == a && r.distribution == dist && r.n == n);
                match cell {
                    Some(r) if r.count == 0 => {
                        let _ = write!(out, " {:>12}", "TIMEOUT");
                    }
                    Some(r) => {
                        let _ = write!(out, " {:>12.6}", r.mean_ns * 1e-9);
                    }
                    None => {
                        let _ = write!(out, " {:>12}", "-");
                    }
                }
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

/// Compares measured means with the orderings reported for the original
/// implementation: on rectangles e-Quad beats monotone chain; on disks
/// Jarvis is at least 3x monotone chain and e-Quad beats Jarvis. Returns one
/// line per checked configuration, prefixed `ok` or `DEVIATION`.
pub fn ordering_report(rows: &[SummaryRow]) -> Vec<String> {
    let mut sizes: Vec<(Distribution, usize)> = rows.iter().map(|r| (r.distribution, r.n)).collect();
    sizes.sort();
    sizes.dedup();
    let mut out = Vec::new();
    let mut check = |ok: bool, what: String| {
        out.push(format!("{} {}", if ok { "ok" } else { "DEVIATION" }, what));
    };
    for (dist, n) in sizes {
        let m = |a| mean_secs(rows, a, dist, n);
        match dist {
            Distribution::Rect => {
                if let (Some(e), Some(mc)) = (m(Algorithm::Equad), m(Algorithm::Monotone)) {
                    check(e < mc, format!("rect n={n}: equad/monotone = {:.3}", e / mc));
                }
            }
            Distribution::Disk => {
                if let (Some(j), Some(mc)) = (m(Algorithm::Jarvis), m(Algorithm::Monotone)) {
                    check(j >= 3.0 * mc, format!("disk n={n}: jarvis/monotone = {:.3}", j / mc));
                }
                if let (Some(e), Some(j)) = (m(Algorithm::Equad), m(Algorithm::Jarvis)) {
                    check(e < j, format!("disk n={n}: equad/jarvis = {:.3}", e / j));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(ns: u64) -> BenchRecord {
        BenchRecord {
            algorithm: Algorithm::Equad,
            distribution: Distribution::Rect,
            n: 10,
            sample: 0,
            elapsed_ns: ns,
            hull_size: Some(4),
        }
    }

    #[test]
    fn summarize_mean_and_single() {
        let rows = summarize(&[rec(1_000_000), rec(2_000_000), rec(3_000_000)]);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].mean_ns, 2_000_000.0);
        assert_eq!(rows[0].median_ns, 2_000_000.0);
        let rows = summarize(&[rec(5)]);
        assert_eq!((rows[0].mean_ns, rows[0].median_ns, rows[0].stddev_ns), (5.0, 5.0, 0.0));
    }

    #[test]
    fn timeouts_are_counted_not_averaged() {
        let mut t = rec(9);
        t.hull_size = None;
        let rows = summarize(&[rec(3), t.clone()]);
        assert_eq!((rows[0].count, rows[0].timeouts, rows[0].mean_ns), (1, 1, 3.0));
        assert!(csv_row(&t).ends_with(",TIMEOUT"));
    }

    #[test]
    fn record_count_and_pairing() {
        let cfg = BenchConfig {
            algorithms: Algorithm::ALL.to_vec(),
            sizes: vec![500, 800],
            distributions: Distribution::ALL.to_vec(),
            samples: 3,
            warmups: 0,
            base_seed: 5,
            jarvis_budget: None,
        };
        let recs = run_bench(&cfg).unwrap();
        assert_eq!(recs.len(), 4 * 2 * 2 * 3);
        for chunk in recs.chunks(4) {
            let h: Vec<_> = chunk.iter().map(|r| r.hull_size).collect();
            assert!(h.iter().all(|&x| x == h[0] && x.unwrap() >= 3));
            assert!(chunk.iter().all(|r| r.elapsed_ns > 0));
        }
        let single = BenchConfig {
            algorithms: vec![Algorithm::Graham],
            sizes: vec![100],
            distributions: vec![Distribution::Disk],
            samples: 3,
            ..cfg
        };
        assert_eq!(run_bench(&single).unwrap().len(), 3);
    }

    #[test]
    fn seeds_are_distinct_per_cell_and_reproducible() {
        let a = sample_seed(1, Distribution::Rect, 100, 0);
        assert_eq!(a, sample_seed(1, Distribution::Rect, 100, 0));
        assert_ne!(a, sample_seed(1, Distribution::Disk, 100, 0));
        assert_ne!(a, sample_seed(1, Distribution::Rect, 101, 0));
        assert_ne!(a, sample_seed(1, Distribution::Rect, 100, 1));
        assert_ne!(a, sample_seed(2, Distribution::Rect, 100, 0));
    }

    #[test]
    fn invalid_configs() {
        let bad = BenchConfig {
            samples: 0,
            ..BenchConfig::default()
        };
        assert!(run_bench(&bad).is_err());
        let bad = BenchConfig {
            sizes: vec![0],
            ..BenchConfig::default()
        };
        assert!(run_bench(&bad).is_err());
    }

    #[test]
    fn table_layout() {
        let mut recs = Vec::new();
        for alg in Algorithm::ALL {
            for n in [1000, 2000] {
                recs.push(BenchRecord {
                    algorithm: alg,
                    distribution: Distribution::Rect,
                    n,
                    sample: 0,
                    elapsed_ns: 1000,
                    hull_size: Some(4),
                });
            }
        }
        let t = render_table(&summarize(&recs));
        let lines: Vec<&str> = t.lines().collect();
        assert!(lines[1].contains("monotone") && lines[1].contains("equad"));
        assert_eq!(lines.len(), 5);
        let header: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(header, ["n", "monotone", "jarvis", "graham", "equad"]);
    }
}
