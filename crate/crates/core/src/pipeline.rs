//! The five-step e-Quad hull.
//!
//! 1. Find the four directional extremes and drop points strictly inside
//!    their quadrilateral.
//! 2. Sort the survivors by `x` and by `y`.
//! 3. Peel e-Quads until every survivor is consumed or discarded.
//! 4. Collect proper e-Quad vertices into four monotone chains and join them
//!    into a simple polygon.
//! 5. Run Melkman's algorithm on that polygon.

use std::time::{Duration, Instant};

use crate::assemble::{assemble_polygon, build_chains_indexed, Chains, ExamCounter, SimplePolygon};
use crate::equad::{EQuad, EQuadBuilder};
use crate::error::HullError;
use crate::geometry::{orient, validate_points, Orientation, Point};
use crate::hull::Hull;
use crate::melkman::{melkman_hull, MelkmanStats};
use crate::preprocess::{discard_interior, find_extremes, sort_dual, PointState, SortedPointSet};
use crate::scalar::Scalar;

/// Counters collected on every run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HullStats {
    pub n: usize,
    pub discarded_step1: usize,
    pub discarded_scans: usize,
    pub consumed: usize,
    pub equads: usize,
    pub polygon_size: usize,
    pub hull_size: usize,
    pub slot_examinations: ExamCounter,
    pub melkman: MelkmanStats,
    /// Wall time per step, only when requested.
    pub stage_times: Option<[Duration; 5]>,
}

impl HullStats {
    /// `discarded_step1 + discarded_scans + consumed == n`.
    pub fn is_conserved(&self) -> bool {
        self.discarded_step1 + self.discarded_scans + self.consumed == self.n
    }

    /// `key=value` lines in a fixed order.
    pub fn to_key_values(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("n".to_string(), self.n.to_string()),
            ("discarded_step1".to_string(), self.discarded_step1.to_string()),
            ("discarded_scans".to_string(), self.discarded_scans.to_string()),
            ("consumed".to_string(), self.consumed.to_string()),
            ("equads".to_string(), self.equads.to_string()),
            ("polygon_size".to_string(), self.polygon_size.to_string()),
            ("hull_size".to_string(), self.hull_size.to_string()),
        ];
        if let Some(t) = &self.stage_times {
            for (k, d) in t.iter().enumerate() {
                kv.push((format!("step{}_ns", k + 1), d.as_nanos().to_string()));
            }
        }
        kv
    }
}

/// Options for [`equad_run`].
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Keep the e-Quad sequence, chains and polygon.
    pub trace: bool,
    pub stage_timing: bool,
}

/// Intermediate products of one run, kept when tracing.
#[derive(Clone, Debug)]
pub struct EquadTrace<T> {
    /// Input indices that survived step 1, in input order.
    pub survivors: Vec<usize>,
    /// Sorted survivors with their final tags; indices map through `survivors`.
    pub set: Option<SortedPointSet<T>>,
    pub equads: Vec<EQuad<T>>,
    pub chains: Option<Chains<T>>,
    pub polygon: Option<SimplePolygon<T>>,
}

impl<T: Scalar> EquadTrace<T> {
    /// Input indices tagged as discarded interior at any step.
    pub fn discarded_inputs(&self, n: usize) -> Vec<usize> {
        let mut keep = vec![false; n];
        for &i in &self.survivors {
            keep[i] = true;
        }
        let mut out: Vec<usize> = (0..n).filter(|&i| !keep[i]).collect();
        if let Some(set) = &self.set {
            out.extend(
                set.state()
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s == PointState::DiscardedInterior)
                    .map(|(k, _)| self.survivors[k]),
            );
        }
        out.sort_unstable();
        out
    }
}

/// Full result of one run.
#[derive(Clone, Debug)]
pub struct EquadRun<T> {
    pub hull: Hull<T>,
    pub stats: HullStats,
    pub trace: Option<EquadTrace<T>>,
}

/// Convex hull via e-Quads.
pub fn equad_convex_hull<T: Scalar>(points: &[Point<T>]) -> Result<(Hull<T>, HullStats), HullError> {
    let run = equad_run(points, RunOptions::default())?;
    Ok((run.hull, run.stats))
}

struct Stopwatch {
    enabled: bool,
    at: Instant,
    laps: [Duration; 5],
}

impl Stopwatch {
    fn lap(&mut self, step: usize) {
        if self.enabled {
            let now = Instant::now();
            self.laps[step] += now - self.at;
            self.at = now;
        }
    }
}

/// Hull of a set known to be collinear (or a single point).
fn collinear_hull<T: Scalar>(points: &[Point<T>], survivors: &[usize]) -> Hull<T> {
    let lo = survivors
        .iter()
        .map(|&i| points[i])
        .min_by(|a, b| a.cmp_yx(b))
        .expect("non-empty");
    let hi = survivors
        .iter()
        .map(|&i| points[i])
        .max_by(|a, b| a.cmp_yx(b))
        .expect("non-empty");
    if lo == hi {
        Hull::from_ccw(vec![lo])
    } else {
        Hull::from_ccw(vec![lo, hi])
    }
}

pub fn equad_run<T: Scalar>(points: &[Point<T>], opts: RunOptions) -> Result<EquadRun<T>, HullError> {
    validate_points(points)?;
    let n = points.len();
    let mut clock = Stopwatch {
        enabled: opts.stage_timing,
        at: Instant::now(),
        laps: [Duration::ZERO; 5],
    };
    let mut stats = HullStats {
        n,
        ..HullStats::default()
    };

    // Step 1.
    let extremes = find_extremes(points)?;
    let first_input = extremes.to_equad(points);
    let outcome = discard_interior(points, &extremes);
    stats.discarded_step1 = outcome.discarded;
    clock.lap(0);

    let degenerate = first_input.distinct_cycle().len() < 3 || {
        let c = first_input.distinct_cycle();
        c.iter()
            .all(|&v| orient(c[0], c[1], v) == Orientation::Collinear)
    };
    if degenerate {
        let (a, b) = (points[extremes.xmin], points[extremes.xmax]);
        let (c, d) = (points[extremes.ymin], points[extremes.ymax]);
        let (a, b) = if a != b { (a, b) } else { (c, d) };
        let collinear = a == b
            || outcome
                .survivors
                .iter()
                .all(|&i| orient(a, b, points[i]) == Orientation::Collinear);
        if collinear {
            let hull = collinear_hull(points, &outcome.survivors);
            stats.consumed = outcome.survivors.len();
            stats.hull_size = hull.len();
            stats.polygon_size = hull.len();
            if opts.stage_timing {
                stats.stage_times = Some(clock.laps);
            }
            let trace = opts.trace.then(|| EquadTrace {
                survivors: outcome.survivors,
                set: None,
                equads: Vec::new(),
                chains: None,
                polygon: None,
            });
            return Ok(EquadRun { hull, stats, trace });
        }
    }

    // Step 2.
    let survivor_points: Vec<Point<T>> = outcome.survivors.iter().map(|&i| points[i]).collect();
    let mut set = sort_dual(survivor_points);
    clock.lap(1);

    // Step 3.
    let mut builder = EQuadBuilder::new(&mut set);
    let equads: Vec<EQuad<T>> = builder.by_ref().collect();
    stats.discarded_scans = builder.scan_discards();
    stats.equads = equads.len();
    clock.lap(2);

    // Step 4.
    let first = equads[0];
    let (chains, exams) = build_chains_indexed(&set, equads.iter().copied(), &first);
    let polygon = assemble_polygon(&chains, &first)?;
    stats.slot_examinations = exams;
    stats.consumed = set.count(PointState::ConsumedAsVertex);
    stats.polygon_size = polygon.vertices.len();
    clock.lap(3);

    // Step 5.
    let (hull, mstats) = melkman_hull(&polygon.vertices);
    stats.melkman = mstats;
    stats.hull_size = hull.len();
    clock.lap(4);
    if opts.stage_timing {
        stats.stage_times = Some(clock.laps);
    }

    let trace = opts.trace.then_some(EquadTrace {
        survivors: outcome.survivors,
        set: Some(set),
        equads,
        chains: Some(chains),
        polygon: Some(polygon),
    });
    Ok(EquadRun { hull, stats, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::oracle_hull;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    #[test]
    fn single_point() {
        let (h, s) = equad_convex_hull(&[p(2., 3.)]).unwrap();
        assert_eq!(h.vertices(), &[p(2., 3.)]);
        assert!(s.is_conserved());
    }

    #[test]
    fn empty_and_non_finite_inputs() {
        assert_eq!(equad_convex_hull::<f64>(&[]).unwrap_err(), HullError::EmptyInput);
        assert_eq!(
            equad_convex_hull(&[p(0., 0.), p(f64::NAN, 1.)]).unwrap_err(),
            HullError::NonFinite { index: 1 }
        );
    }

    #[test]
    fn square_plus_center() {
        let pts = [p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.), p(0.5, 0.5)];
        let (h, s) = equad_convex_hull(&pts).unwrap();
        assert_eq!(h.vertices(), &[p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.)]);
        assert_eq!(s.discarded_step1, 1);
        assert_eq!(s.equads, 1);
        assert!(s.is_conserved());
    }

    #[test]
    fn degenerate_first_quad_with_off_line_hull_vertex() {
        // leftmost == bottommost and rightmost == topmost, but (5,1) is a
        // hull vertex reached only through the xmax slot of generation 1.
        let pts = [p(0., 0.), p(10., 10.), p(5., 1.), p(1., 0.)];
        let (h, _) = equad_convex_hull(&pts).unwrap();
        assert_eq!(h, oracle_hull(&pts).unwrap());
        assert_eq!(h.vertices(), &[p(0., 0.), p(1., 0.), p(5., 1.), p(10., 10.)]);
    }

    #[test]
    fn collinear_input_shortcut() {
        let pts = [p(3., 3.), p(1., 1.), p(2., 2.), p(1., 1.)];
        let (h, s) = equad_convex_hull(&pts).unwrap();
        assert_eq!(h.vertices(), &[p(1., 1.), p(3., 3.)]);
        assert_eq!(s.equads, 0);
        assert!(s.is_conserved());
        let vertical = [p(0., 5.), p(0., 1.), p(0., 3.)];
        assert_eq!(equad_convex_hull(&vertical).unwrap().0.vertices(), &[p(0., 1.), p(0., 5.)]);
    }

    #[test]
    fn stage_timing_on_request_only() {
        let pts = [p(0., 0.), p(3., 0.), p(3., 3.), p(0., 3.), p(1., 2.)];
        assert!(equad_convex_hull(&pts).unwrap().1.stage_times.is_none());
        let run = equad_run(&pts, RunOptions { trace: true, stage_timing: true }).unwrap();
        assert!(run.stats.stage_times.is_some());
        assert!(run.trace.unwrap().polygon.is_some());
    }
}
