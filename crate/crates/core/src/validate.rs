//! Oracle-equivalence sweep over seeded instance families.

use std::fmt;

use crate::error::HullError;
use crate::geometry::Point;
use crate::hull::Hull;
use crate::pipeline::equad_convex_hull;
use crate::pointgen::{generate, mix64, Distribution, GenSpec, SplitMix64};
use crate::reference::{graham_scan, jarvis_march, monotone_chain, oracle_hull, ORACLE_LIMIT};

/// Grid side used for random integer instances.
pub const GRID_SIDE: u32 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Rect,
    Disk,
    Collinear,
    DuplicateHeavy,
    Coincident,
    SmallGrid,
    BoxBoundary,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Rect,
        Family::Disk,
        Family::Collinear,
        Family::DuplicateHeavy,
        Family::Coincident,
        Family::SmallGrid,
        Family::BoxBoundary,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Rect => "rect",
            Family::Disk => "disk",
            Family::Collinear => "collinear",
            Family::DuplicateHeavy => "duplicate-heavy",
            Family::Coincident => "coincident",
            Family::SmallGrid => "small-grid",
            Family::BoxBoundary => "box-boundary",
        };
        f.write_str(s)
    }
}

/// Integer-coordinate instance of `n >= 1` points.
pub fn family_instance(family: Family, n: usize, seed: u64) -> Vec<Point<f64>> {
    let mut rng = SplitMix64::new(seed);
    let mut int = |bound: u64| rng.below(bound) as f64;
    match family {
        Family::Rect => generate(&GenSpec::integer_grid(Distribution::Rect, n, seed, GRID_SIDE)).expect("valid"),
        Family::Disk => generate(&GenSpec::integer_grid(Distribution::Disk, n, seed, GRID_SIDE)).expect("valid"),
        Family::Collinear => {
            let (bx, by) = (int(1 << 19), int(1 << 19));
            let (mut dx, dy) = (int(17) - 8.0, int(17) - 8.0);
            if dx == 0.0 && dy == 0.0 {
                dx = 1.0;
            }
            (0..n)
                .map(|_| {
                    let k = int(1 << 10);
                    Point::new(bx + k * dx, by + k * dy)
                })
                .collect()
        }
        Family::DuplicateHeavy => {
            let distinct = 1 + int((n as u64 / 4).max(1)) as usize;
            let pool: Vec<Point<f64>> = (0..distinct).map(|_| Point::new(int(16), int(16))).collect();
            (0..n).map(|_| pool[int(distinct as u64) as usize]).collect()
        }
        Family::Coincident => {
            let sites = 1 + int(3) as usize;
            let pool: Vec<Point<f64>> = (0..sites)
                .map(|_| Point::new(int(GRID_SIDE as u64), int(GRID_SIDE as u64)))
                .collect();
            (0..n).map(|_| pool[int(sites as u64) as usize]).collect()
        }
        Family::SmallGrid => (0..n).map(|_| Point::new(int(6), int(6))).collect(),
        Family::BoxBoundary => {
            let (w, h) = (1.0 + int(12), 1.0 + int(12));
            (0..n)
                .map(|_| match int(5) as u8 {
                    0 => Point::new(int(w as u64 + 1), 0.0),
                    1 => Point::new(int(w as u64 + 1), h),
                    2 => Point::new(0.0, int(h as u64 + 1)),
                    3 => Point::new(w, int(h as u64 + 1)),
                    _ => Point::new(int(w as u64 + 1), int(h as u64 + 1)),
                })
                .collect()
        }
    }
}

pub type HullFn = Box<dyn Fn(&[Point<f64>]) -> Hull<f64> + Send + Sync>;

pub struct NamedAlgorithm {
    pub name: String,
    pub run: HullFn,
}

impl NamedAlgorithm {
    pub fn new(name: &str, run: impl Fn(&[Point<f64>]) -> Hull<f64> + Send + Sync + 'static) -> Self {
        NamedAlgorithm {
            name: name.to_string(),
            run: Box::new(run),
        }
    }
}

/// e-Quad plus the three comparators.
pub fn standard_algorithms() -> Vec<NamedAlgorithm> {
    vec![
        NamedAlgorithm::new("equad", |p| equad_convex_hull(p).expect("non-empty input").0),
        NamedAlgorithm::new("graham", graham_scan),
        NamedAlgorithm::new("monotone", monotone_chain),
        NamedAlgorithm::new("jarvis", jarvis_march),
    ]
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub trials: usize,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub algorithm: String,
    pub family: Family,
    pub trial: usize,
    pub points: Vec<Point<f64>>,
    pub expected: Hull<f64>,
    pub got: Hull<f64>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub instances: usize,
    pub comparisons: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Mismatch>,
}

/// Instance parameters of trial `t`: family cycles, size and seed are drawn.
pub fn trial_instance(cfg: &SweepConfig, t: usize) -> (Family, Vec<Point<f64>>) {
    let family = Family::ALL[t % Family::ALL.len()];
    let seed = mix64(cfg.seed ^ mix64(t as u64));
    let n = 1 + SplitMix64::new(seed).below(cfg.n_max as u64) as usize;
    (family, family_instance(family, n, seed))
}

/// Compares every algorithm against [`oracle_hull`] on `cfg.trials`
/// instances with sizes in `1..=cfg.n_max`.
pub fn run_sweep(cfg: &SweepConfig, algorithms: &[NamedAlgorithm]) -> Result<SweepReport, HullError> {
    if cfg.n_max == 0 || cfg.n_max > ORACLE_LIMIT {
        return Err(HullError::InvalidConfig(format!(
            "n-max must be in 1..={ORACLE_LIMIT}"
        )));
    }
    let mut report = SweepReport::default();
    for t in 0..cfg.trials {
        let (family, points) = trial_instance(cfg, t);
        let expected = oracle_hull(&points)?;
        report.instances += 1;
        for alg in algorithms {
            let got = (alg.run)(&points);
            report.comparisons += 1;
            if got != expected {
                report.mismatches += 1;
                if report.first_mismatch.is_none() {
                    report.first_mismatch = Some(Mismatch {
                        algorithm: alg.name.clone(),
                        family,
                        trial: t,
                        points: points.clone(),
                        expected: expected.clone(),
                        got,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_produce_requested_sizes() {
        for f in Family::ALL {
            for n in [1, 2, 3, 17, 64] {
                let pts = family_instance(f, n, 9);
                assert_eq!(pts.len(), n, "{f}");
                assert!(pts.iter().all(|p| p.x.fract() == 0.0 && p.y.fract() == 0.0));
                assert!(pts.iter().all(|p| p.x.abs() <= (1u64 << 26) as f64));
            }
        }
    }

    #[test]
    fn collinear_family_is_collinear() {
        for seed in 0..20 {
            let pts = family_instance(Family::Collinear, 30, seed);
            assert!(oracle_hull(&pts).unwrap().len() <= 2);
        }
    }

    #[test]
    fn small_sweep_is_clean() {
        let cfg = SweepConfig {
            trials: 70,
            n_max: 24,
            seed: 3,
        };
        let r = run_sweep(&cfg, &standard_algorithms()).unwrap();
        assert_eq!(r.mismatches, 0, "{:?}", r.first_mismatch);
        assert_eq!(r.comparisons, 70 * 4);
    }

    #[test]
    fn injected_fault_is_reported() {
        let broken = NamedAlgorithm::new("broken", |p| {
            let mut v = monotone_chain(p).into_vertices();
            if v.len() > 2 {
                v.pop();
            }
            Hull::from_ccw(v)
        });
        let cfg = SweepConfig {
            trials: 20,
            n_max: 30,
            seed: 1,
        };
        let r = run_sweep(&cfg, &[broken]).unwrap();
        assert!(r.mismatches > 0);
        assert_eq!(r.first_mismatch.unwrap().algorithm, "broken");
    }

    #[test]
    fn n_max_bounds() {
        let algs = standard_algorithms();
        let cfg = SweepConfig {
            trials: 1,
            n_max: ORACLE_LIMIT + 1,
            seed: 0,
        };
        assert!(run_sweep(&cfg, &algs).is_err());
    }
}
