//! Extreme points, interior discarding, dual sorting and sub-region
//! classification.
//!
//! The first quadrilateral is built from the leftmost, bottommost, rightmost
//! and topmost points. Everything strictly inside it is dropped before the
//! survivors are sorted twice, once by `(x, y)` and once by `(y, x)`.

use std::cmp::Ordering;

use crate::equad::EQuad;
use crate::error::HullError;
use crate::geometry::{orient, strictly_inside_cycle, Point};
use crate::scalar::Scalar;

/// Indices of the four directional extremes.
///
/// Ties follow the counter-clockwise boundary walk: `xmin` is the lowest of
/// the leftmost points, `ymin` the rightmost of the bottommost, `xmax` the
/// highest of the rightmost and `ymax` the leftmost of the topmost. So
/// `xmin`/`xmax` are extremes of [`Point::cmp_xy`] and `ymin`/`ymax` of
/// [`Point::cmp_y_rev_x`]. Indices may coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremeQuadruple {
    pub xmin: usize,
    pub ymin: usize,
    pub xmax: usize,
    pub ymax: usize,
}

impl ExtremeQuadruple {
    /// Indices in CCW slot order: leftmost, bottommost, rightmost, topmost.
    pub fn slots(&self) -> [usize; 4] {
        [self.xmin, self.ymin, self.xmax, self.ymax]
    }

    /// The generation-0 e-Quad over `points`.
    pub fn to_equad<T: Scalar>(&self, points: &[Point<T>]) -> EQuad<T> {
        let idx = self.slots();
        EQuad::new(idx.map(|i| points[i]), idx, 0)
    }
}

pub fn find_extremes<T: Scalar>(points: &[Point<T>]) -> Result<ExtremeQuadruple, HullError> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut q = ExtremeQuadruple {
        xmin: 0,
        ymin: 0,
        xmax: 0,
        ymax: 0,
    };
    for (i, p) in points.iter().enumerate().skip(1) {
        if p.cmp_xy(&points[q.xmin]) == Ordering::Less {
            q.xmin = i;
        }
        if p.cmp_xy(&points[q.xmax]) == Ordering::Greater {
            q.xmax = i;
        }
        if p.cmp_y_rev_x(&points[q.ymin]) == Ordering::Less {
            q.ymin = i;
        }
        if p.cmp_y_rev_x(&points[q.ymax]) == Ordering::Greater {
            q.ymax = i;
        }
    }
    Ok(q)
}

/// Outcome of the first interior-discarding pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscardOutcome {
    /// Input indices of surviving points, in input order.
    pub survivors: Vec<usize>,
    pub discarded: usize,
}

/// Drops every point strictly inside the cycle `xmin -> ymin -> xmax -> ymax`.
pub fn discard_interior<T: Scalar>(points: &[Point<T>], quad: &ExtremeQuadruple) -> DiscardOutcome {
    let first = quad.to_equad(points);
    let cycle = first.distinct_cycle();
    let survivors: Vec<usize> = if cycle.len() < 3 {
        (0..points.len()).collect()
    } else {
        (0..points.len())
            .filter(|&i| !strictly_inside_cycle(points[i], cycle))
            .collect()
    };
    let discarded = points.len() - survivors.len();
    DiscardOutcome {
        survivors,
        discarded,
    }
}

/// Per-point lifecycle tag. Tags only ever move away from `Active`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointState {
    Active,
    ConsumedAsVertex,
    DiscardedInterior,
}

/// Points with two sorted index views and per-point state.
#[derive(Clone, Debug)]
pub struct SortedPointSet<T> {
    pub(crate) points: Vec<Point<T>>,
    pub(crate) by_x: Vec<usize>,
    pub(crate) by_y: Vec<usize>,
    pub(crate) state: Vec<PointState>,
}

impl<T: Scalar> SortedPointSet<T> {
    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    /// Indices ascending in `(x, y)`.
    pub fn by_x(&self) -> &[usize] {
        &self.by_x
    }

    /// Indices ascending in `y`, ties by descending `x`.
    pub fn by_y(&self) -> &[usize] {
        &self.by_y
    }

    pub fn state(&self) -> &[PointState] {
        &self.state
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn count(&self, tag: PointState) -> usize {
        self.state.iter().filter(|&&s| s == tag).count()
    }
}

fn sorted_indices<T: Scalar>(
    points: &[Point<T>],
    cmp: impl Fn(&Point<T>, &Point<T>) -> Ordering,
) -> Vec<usize> {
    // Sorting (point, index) pairs keeps comparisons cache-local; the index
    // breaks exact duplicates so the result is a stable total order.
    let mut keyed: Vec<(Point<T>, usize)> = points.iter().copied().zip(0..).collect();
    keyed.sort_unstable_by(|a, b| cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, i)| i).collect()
}

pub fn sort_dual<T: Scalar>(points: Vec<Point<T>>) -> SortedPointSet<T> {
    let by_x = sorted_indices(&points, Point::cmp_xy);
    let by_y = sorted_indices(&points, Point::cmp_y_rev_x);
    let state = vec![PointState::Active; points.len()];
    SortedPointSet {
        points,
        by_x,
        by_y,
        state,
    }
}

/// One of the four corner regions of the bounding box outside the first
/// e-Quad, or `Inner` for points inside or on that quad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubRegion {
    /// Between leftmost and bottommost.
    R1,
    /// Between bottommost and rightmost.
    R2,
    /// Between rightmost and topmost.
    R3,
    /// Between topmost and leftmost.
    R4,
    Inner,
}

impl SubRegion {
    pub const CORNERS: [SubRegion; 4] = [SubRegion::R1, SubRegion::R2, SubRegion::R3, SubRegion::R4];

    /// Position in [`SubRegion::CORNERS`]; `None` for `Inner`.
    pub fn corner_index(self) -> Option<usize> {
        match self {
            SubRegion::R1 => Some(0),
            SubRegion::R2 => Some(1),
            SubRegion::R3 => Some(2),
            SubRegion::R4 => Some(3),
            SubRegion::Inner => None,
        }
    }
}

/// Region of `p` relative to the generation-0 e-Quad.
///
/// A point belongs to corner region `k` when it lies strictly right of the
/// directed anchor edge `k` (leftmost->bottommost, bottommost->rightmost,
/// rightmost->topmost, topmost->leftmost). A zero-length edge (coincident
/// anchors) owns no region.
pub fn classify_subregion<T: Scalar>(first: &EQuad<T>, p: Point<T>) -> SubRegion {
    let [l, b, r, t] = first.vertices;
    let edges = [(l, b), (b, r), (r, t), (t, l)];
    for (k, (from, to)) in edges.into_iter().enumerate() {
        if from != to && orient(from, to, p).is_cw() {
            return SubRegion::CORNERS[k];
        }
    }
    SubRegion::Inner
}
