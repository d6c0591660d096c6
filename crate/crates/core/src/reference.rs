//! Comparator hull algorithms and a brute-force oracle.
//!
//! All of them return the canonical [`Hull`], so outputs can be compared
//! with plain equality.

use std::cmp::Ordering;
use std::time::Instant;

use crate::error::HullError;
use crate::geometry::{orient, within_box, Orientation, Point};
use crate::hull::Hull;
use crate::scalar::Scalar;

/// Largest input accepted by [`oracle_hull`].
pub const ORACLE_LIMIT: usize = 3000;

fn sorted_unique<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut v = points.to_vec();
    v.sort_unstable_by(Point::cmp_xy);
    v.dedup();
    v
}

/// Andrew's monotone chain over the `(x, y)`-sorted points.
pub fn monotone_chain<T: Scalar>(points: &[Point<T>]) -> Hull<T> {
    let pts = sorted_unique(points);
    if pts.len() <= 2 {
        return Hull::from_ccw(pts);
    }
    let mut hull: Vec<Point<T>> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && !orient(hull[hull.len() - 2], hull[hull.len() - 1], p).is_ccw() {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && !orient(hull[hull.len() - 2], hull[hull.len() - 1], p).is_ccw() {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Hull::from_ccw(hull)
}

/// Graham scan with an exact angular sort around the `(y, x)`-lowest point.
pub fn graham_scan<T: Scalar>(points: &[Point<T>]) -> Hull<T> {
    let Some(&pivot) = points.iter().min_by(|a, b| a.cmp_yx(b)) else {
        return Hull::from_ccw(Vec::new());
    };
    let mut rest: Vec<Point<T>> = points.iter().copied().filter(|&p| p != pivot).collect();
    // Every other point is above the pivot or level with it and to the right,
    // so angles lie in [0, pi) and orientation is a total order on them.
    // Along one ray, (y, x) order is distance order.
    rest.sort_unstable_by(|a, b| match orient(pivot, *a, *b) {
        Orientation::CounterClockwise => Ordering::Less,
        Orientation::Clockwise => Ordering::Greater,
        Orientation::Collinear => a.cmp_yx(b),
    });
    // Keep only the farthest point of each ray.
    let mut rays: Vec<Point<T>> = Vec::with_capacity(rest.len());
    for p in rest {
        match rays.last_mut() {
            Some(last) if orient(pivot, *last, p) == Orientation::Collinear => *last = p,
            _ => rays.push(p),
        }
    }
    let mut stack = vec![pivot];
    for p in rays {
        while stack.len() >= 2 && !orient(stack[stack.len() - 2], stack[stack.len() - 1], p).is_ccw() {
            stack.pop();
        }
        stack.push(p);
    }
    Hull::from_ccw(stack)
}

/// Returned when gift wrapping runs past its deadline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Timeout;

/// Jarvis march (gift wrapping), O(nh).
pub fn jarvis_march<T: Scalar>(points: &[Point<T>]) -> Hull<T> {
    jarvis_march_until(points, None).expect("no deadline")
}

/// Gift wrapping that gives up once `deadline` has passed.
pub fn jarvis_march_until<T: Scalar>(
    points: &[Point<T>],
    deadline: Option<Instant>,
) -> Result<Hull<T>, Timeout> {
    let Some(&start) = points.iter().min_by(|a, b| a.cmp_yx(b)) else {
        return Ok(Hull::from_ccw(Vec::new()));
    };
    let mut hull = vec![start];
    let mut current = start;
    loop {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(Timeout);
            }
        }
        let mut next = current;
        for &r in points {
            if r == current {
                continue;
            }
            if next == current {
                next = r;
                continue;
            }
            match orient(current, next, r) {
                Orientation::Clockwise => next = r,
                Orientation::Collinear if within_box(next, current, r) => next = r,
                _ => {}
            }
        }
        if next == current || next == start {
            break;
        }
        hull.push(next);
        current = next;
        if hull.len() > points.len() {
            // Only reachable with an inconsistent predicate.
            unreachable!("gift wrapping failed to close");
        }
    }
    Ok(Hull::from_ccw(hull))
}

/// Brute-force hull from the edge characterisation.
///
/// `(a, b)` is a hull edge iff every other point is strictly left of
/// `a -> b` or lies on the closed segment `a..b`. Cubic time, so the input
/// size is capped at [`ORACLE_LIMIT`].
pub fn oracle_hull<T: Scalar>(points: &[Point<T>]) -> Result<Hull<T>, HullError> {
    if points.len() > ORACLE_LIMIT {
        return Err(HullError::OracleTooLarge {
            limit: ORACLE_LIMIT,
            got: points.len(),
        });
    }
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut pts: Vec<Point<T>> = Vec::with_capacity(points.len());
    for &p in points {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    if pts.len() == 1 {
        return Ok(Hull::from_ccw(pts));
    }
    let m = pts.len();
    let mut successor: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let (a, b) = (pts[i], pts[j]);
            let is_edge = pts.iter().enumerate().all(|(k, &r)| {
                k == i
                    || k == j
                    || match orient(a, b, r) {
                        Orientation::CounterClockwise => true,
                        Orientation::Collinear => within_box(r, a, b),
                        Orientation::Clockwise => false,
                    }
            });
            if is_edge {
                successor[i] = Some(j);
            }
        }
    }
    let start = (0..m).min_by(|&a, &b| pts[a].cmp_yx(&pts[b])).unwrap();
    let mut cycle = vec![pts[start]];
    let mut at = start;
    while let Some(next) = successor[at] {
        if next == start || cycle.len() > m {
            break;
        }
        cycle.push(pts[next]);
        at = next;
    }
    Ok(Hull::from_ccw(cycle))
}
