//! Exact planar predicates and primitive types.

use std::cmp::Ordering;
use std::fmt;

use crate::equad::EQuad;
use crate::error::HullError;
use crate::scalar::Scalar;

/// A point in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on `(x, y)`.
    #[inline]
    pub fn cmp_xy(&self, other: &Self) -> Ordering {
        self.x
            .cmp_finite(&other.x)
            .then_with(|| self.y.cmp_finite(&other.y))
    }

    /// Lexicographic order on `(y, x)`.
    #[inline]
    pub fn cmp_yx(&self, other: &Self) -> Ordering {
        self.y
            .cmp_finite(&other.y)
            .then_with(|| self.x.cmp_finite(&other.x))
    }

    /// Order on `y` ascending, ties broken by `x` descending.
    ///
    /// Minimum is the bottommost point furthest right, maximum the topmost
    /// point furthest left: the extremes met first when walking the boundary
    /// counter-clockwise from the bottom and top sides.
    #[inline]
    pub fn cmp_y_rev_x(&self, other: &Self) -> Ordering {
        self.y
            .cmp_finite(&other.y)
            .then_with(|| other.x.cmp_finite(&self.x))
    }

    /// Componentwise translation.
    pub fn translate(&self, dx: T, dy: T) -> Self {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

impl<T: Scalar> From<(T, T)> for Point<T> {
    fn from((x, y): (T, T)) -> Self {
        Point::new(x, y)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    #[inline]
    pub fn is_ccw(self) -> bool {
        self == Orientation::CounterClockwise
    }

    #[inline]
    pub fn is_cw(self) -> bool {
        self == Orientation::Clockwise
    }
}

/// Orientation of `c` relative to the directed line `a -> b`.
///
/// Exact for every supported scalar type; see [`Scalar::orient_sign`].
#[inline]
pub fn orient<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>) -> Orientation {
    match T::orient_sign(a.x, a.y, b.x, b.y, c.x, c.y) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Checked variant of [`orient`] for callers holding unvalidated input.
pub fn try_orient<T: Scalar>(
    a: Point<T>,
    b: Point<T>,
    c: Point<T>,
) -> Result<Orientation, HullError> {
    for (index, p) in [a, b, c].iter().enumerate() {
        if !p.is_finite() {
            return Err(HullError::NonFinite { index });
        }
    }
    Ok(orient(a, b, c))
}

/// True iff `p` lies strictly left of every edge of the CCW cycle.
///
/// Cycles with fewer than three vertices have no interior.
pub fn strictly_inside_cycle<T: Scalar>(p: Point<T>, cycle: &[Point<T>]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut prev = cycle[cycle.len() - 1];
    for &v in cycle {
        if !orient(prev, v, p).is_ccw() {
            return false;
        }
        prev = v;
    }
    true
}

/// True iff `p` lies strictly inside the e-Quad's distinct vertex cycle.
///
/// Boundary points and every point of a degenerate (segment or single
/// point) quad are reported as not inside.
#[inline]
pub fn strictly_inside_quad<T: Scalar>(p: Point<T>, quad: &EQuad<T>) -> bool {
    strictly_inside_cycle(p, quad.distinct_cycle())
}

/// True iff `p` lies on the closed segment `a..b` (assumes collinearity was checked).
#[inline]
pub(crate) fn within_box<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>) -> bool {
    let (lo_x, hi_x) = if a.x <= b.x { (a.x, b.x) } else { (b.x, a.x) };
    let (lo_y, hi_y) = if a.y <= b.y { (a.y, b.y) } else { (b.y, a.y) };
    lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y
}

/// Axis-aligned bounding box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb<T> {
    pub lo: Point<T>,
    pub hi: Point<T>,
}

impl<T: Scalar> Aabb<T> {
    pub fn width(&self) -> T {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> T {
        self.hi.y - self.lo.y
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        self.lo.x <= p.x && p.x <= self.hi.x && self.lo.y <= p.y && p.y <= self.hi.y
    }
}

/// Smallest axis-aligned box containing every point.
pub fn compute_aabb<T: Scalar>(points: &[Point<T>]) -> Result<Aabb<T>, HullError> {
    let (first, rest) = points.split_first().ok_or(HullError::EmptyInput)?;
    let mut lo = *first;
    let mut hi = *first;
    for p in rest {
        if p.x < lo.x {
            lo.x = p.x;
        }
        if p.y < lo.y {
            lo.y = p.y;
        }
        if p.x > hi.x {
            hi.x = p.x;
        }
        if p.y > hi.y {
            hi.y = p.y;
        }
    }
    Ok(Aabb { lo, hi })
}

/// Rejects the first non-finite point, if any.
pub fn validate_points<T: Scalar>(points: &[Point<T>]) -> Result<(), HullError> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(HullError::NonFinite { index }),
        None => Ok(()),
    }
}
