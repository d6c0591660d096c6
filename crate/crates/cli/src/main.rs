mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use equad_hull::bench::{self, Algorithm, BenchConfig};
use equad_hull::pointgen::{self, Distribution, GenSpec};
use equad_hull::validate::{self, NamedAlgorithm, SweepConfig};
use equad_hull::{equad_convex_hull, equad_run, Hull, PointF64, RunOptions};

/// Largest input `trace` will draw.
const TRACE_LIMIT: usize = 10_000;

#[derive(Parser)]
#[command(name = "equad", version, about = "Planar convex hulls via extreme quadrilaterals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random point file.
    Gen {
        #[arg(long, value_parser = parse_dist)]
        dist: Distribution,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Snap to integers in [0, GRID]^2 instead of the unit square.
        #[arg(long, value_name = "GRID")]
        grid: Option<u32>,
    },
    /// Compute the convex hull of a point file.
    Hull {
        #[arg(long, value_parser = parse_algo, default_value = "equad")]
        algo: Algorithm,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Print run statistics as key=value lines.
        #[arg(long)]
        stats: bool,
    },
    /// Time the algorithms on generated inputs.
    Bench {
        #[arg(long, value_delimiter = ',', value_parser = parse_algo, default_value = "monotone,jarvis,graham,equad")]
        algos: Vec<Algorithm>,
        #[arg(long, value_delimiter = ',', default_value = "50000,100000,200000,500000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', value_parser = parse_dist, default_value = "rect,disk")]
        dists: Vec<Distribution>,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        warmups: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-call budget for Jarvis march, in seconds.
        #[arg(long, default_value_t = 120.0)]
        jarvis_budget: f64,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check every algorithm against the brute-force oracle.
    Validate {
        #[arg(long, default_value_t = 64)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where the first mismatching instance is written.
        #[arg(long, default_value = "validate-repro.txt")]
        repro: PathBuf,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Draw one stage of the e-Quad pipeline as SVG.
    Trace {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_svg: PathBuf,
        #[arg(long, value_enum, default_value_t = Stage::Hull)]
        stage: Stage,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    Discard,
    Equads,
    Chains,
    Polygon,
    Hull,
}

fn parse_dist(s: &str) -> Result<Distribution, String> {
    s.parse()
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn read_input(path: &PathBuf) -> Result<Vec<PointF64>> {
    pointgen::read_points_file(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_gen(dist: Distribution, n: usize, seed: u64, out: PathBuf, grid: Option<u32>) -> Result<()> {
    let spec = match grid {
        Some(side) => GenSpec::integer_grid(dist, n, seed, side),
        None => GenSpec::unit(dist, n, seed),
    };
    let points = pointgen::generate(&spec)?;
    pointgen::write_points_file(&out, &points).with_context(|| format!("writing {}", out.display()))?;
    println!("{}", points.len());
    Ok(())
}

type KeyValues = Vec<(String, String)>;

fn hull_with(algo: Algorithm, points: &[PointF64]) -> Result<(Hull<f64>, KeyValues)> {
    if points.is_empty() {
        bail!("input contains no points");
    }
    Ok(match algo {
        Algorithm::Equad => {
            let (h, s) = equad_convex_hull(points)?;
            (h, s.to_key_values())
        }
        other => {
            let h = match other {
                Algorithm::Graham => equad_hull::graham_scan(points),
                Algorithm::Monotone => equad_hull::monotone_chain(points),
                _ => equad_hull::jarvis_march(points),
            };
            let kv = vec![
                ("n".to_string(), points.len().to_string()),
                ("hull_size".to_string(), h.len().to_string()),
            ];
            (h, kv)
        }
    })
}

fn cmd_hull(algo: Algorithm, input: PathBuf, out: PathBuf, stats: bool) -> Result<()> {
    let points = read_input(&input)?;
    let (hull, kv) = hull_with(algo, &points).with_context(|| format!("hull of {}", input.display()))?;
    pointgen::write_points_file(&out, hull.vertices()).with_context(|| format!("writing {}", out.display()))?;
    if stats {
        let mut o = io::stdout().lock();
        for (k, v) in kv {
            writeln!(o, "{k}={v}")?;
        }
    }
    Ok(())
}

fn cmd_bench(config: BenchConfig, csv: Option<PathBuf>) -> Result<()> {
    config.validate()?;
    let to_stdout = csv.is_none();
    let mut sink: Box<dyn Write> = match &csv {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    writeln!(sink, "{}", bench::CSV_HEADER)?;
    let mut write_err = None;
    let records = bench::run_bench_with(&config, |r| {
        if write_err.is_none() {
            if let Err(e) = writeln!(sink, "{}", bench::csv_row(r)).and_then(|_| sink.flush()) {
                write_err = Some(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e).context("writing CSV");
    }
    drop(sink);

    let rows = bench::summarize(&records);
    let mut report = bench::render_table(&rows);
    for line in bench::ordering_report(&rows) {
        report.push_str(&line);
        report.push('\n');
    }
    let timeouts = records.iter().filter(|r| r.timed_out()).count();
    if timeouts > 0 {
        report.push_str(&format!("{timeouts} call(s) hit the time budget\n"));
    }
    if to_stdout {
        eprint!("{report}");
    } else {
        print!("{report}");
    }
    Ok(())
}

/// Drops the last hull vertex; lets tests exercise the mismatch path.
fn faulty_equad() -> NamedAlgorithm {
    NamedAlgorithm::new("equad", |p| {
        let mut v = equad_convex_hull(p).expect("non-empty input").0.into_vertices();
        if v.len() >= 3 {
            v.pop();
        }
        Hull::from_ccw(v)
    })
}

fn cmd_validate(cfg: SweepConfig, repro: PathBuf, inject_fault: bool) -> Result<bool> {
    let mut algorithms = validate::standard_algorithms();
    if inject_fault {
        algorithms[0] = faulty_equad();
    }
    let report = validate::run_sweep(&cfg, &algorithms)?;
    println!(
        "instances={} comparisons={} mismatches={}",
        report.instances, report.comparisons, report.mismatches
    );
    let Some(m) = report.first_mismatch else {
        return Ok(true);
    };
    let mut w = BufWriter::new(File::create(&repro).with_context(|| format!("creating {}", repro.display()))?);
    writeln!(w, "# algorithm={} family={} trial={} seed={}", m.algorithm, m.family, m.trial, cfg.seed)?;
    let fmt = |h: &Hull<f64>| {
        h.vertices()
            .iter()
            .map(|p| format!("({} {})", p.x, p.y))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(w, "# expected {}", fmt(&m.expected))?;
    writeln!(w, "# got      {}", fmt(&m.got))?;
    pointgen::write_points(&mut w, &m.points)?;
    eprintln!(
        "mismatch: {} on {} trial {}; instance written to {}",
        m.algorithm,
        m.family,
        m.trial,
        repro.display()
    );
    Ok(false)
}

fn cmd_trace(input: PathBuf, out_svg: PathBuf, stage: Stage) -> Result<()> {
    let points = read_input(&input)?;
    if points.is_empty() {
        bail!("input contains no points");
    }
    if points.len() > TRACE_LIMIT {
        bail!("{} points is too many to draw (limit {TRACE_LIMIT})", points.len());
    }
    let run = equad_run(
        &points,
        RunOptions {
            trace: true,
            stage_timing: false,
        },
    )?;
    let doc = svg::render(&points, &run, stage);
    std::fs::write(&out_svg, doc).with_context(|| format!("writing {}", out_svg.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { dist, n, seed, out, grid } => cmd_gen(dist, n, seed, out, grid)?,
        Command::Hull { algo, input, out, stats } => cmd_hull(algo, input, out, stats)?,
        Command::Bench {
            algos,
            sizes,
            dists,
            samples,
            warmups,
            seed,
            jarvis_budget,
            csv,
        } => {
            if !(jarvis_budget.is_finite() && jarvis_budget > 0.0) {
                bail!("--jarvis-budget must be a positive number of seconds");
            }
            let config = BenchConfig {
                algorithms: algos,
                sizes,
                distributions: dists,
                samples,
                warmups,
                base_seed: seed,
                jarvis_budget: Some(Duration::from_secs_f64(jarvis_budget)),
            };
            cmd_bench(config, csv)?
        }
        Command::Validate {
            n_max,
            trials,
            seed,
            repro,
            inject_fault,
        } => return cmd_validate(SweepConfig { trials, n_max, seed }, repro, inject_fault),
        Command::Trace { input, out_svg, stage } => cmd_trace(input, out_svg, stage)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
