//! Convex hull of a simple polyline with a double-ended queue.
//!
//! The deque holds the hull of the prefix processed so far with the most
//! recent hull vertex at both ends. A new vertex that lies left of (or on)
//! both edges incident to that end cannot escape the hull and is skipped;
//! otherwise reflex vertices are popped from both ends and the new vertex is
//! pushed onto both.

use std::collections::VecDeque;

use crate::geometry::{orient, Orientation, Point};
use crate::hull::Hull;
use crate::scalar::Scalar;

/// Instrumentation from one Melkman pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MelkmanStats {
    pub vertices: usize,
    pub orientation_tests: usize,
}

struct Counted {
    tests: usize,
}

impl Counted {
    #[inline]
    fn orient<T: Scalar>(&mut self, a: Point<T>, b: Point<T>, c: Point<T>) -> Orientation {
        self.tests += 1;
        orient(a, b, c)
    }
}

/// Hull of the vertices of a simple polyline or polygon.
///
/// The input must be simple; behaviour on self-intersecting input is
/// unspecified. Collinear boundary vertices are dropped.
pub fn melkman_hull<T: Scalar>(chain: &[Point<T>]) -> (Hull<T>, MelkmanStats) {
    let mut ctr = Counted { tests: 0 };
    let stats = |ctr: &Counted| MelkmanStats {
        vertices: chain.len(),
        orientation_tests: ctr.tests,
    };
    let Some(&start) = chain.first() else {
        return (Hull::from_ccw(Vec::new()), stats(&ctr));
    };

    // Leading run of vertices collinear with the first two distinct ones.
    let Some(second) = chain.iter().position(|&v| v != start) else {
        return (Hull::from_ccw(vec![start]), stats(&ctr));
    };
    let dir = chain[second];
    let mut k = second + 1;
    while k < chain.len() && ctr.orient(start, dir, chain[k]) == Orientation::Collinear {
        k += 1;
    }
    if k == chain.len() {
        let lo = chain.iter().copied().min_by(|a, b| a.cmp_yx(b)).unwrap();
        let hi = chain.iter().copied().max_by(|a, b| a.cmp_yx(b)).unwrap();
        return (Hull::from_ccw(vec![lo, hi]), stats(&ctr));
    }

    // A simple polyline walks a collinear prefix monotonically, so its ends
    // are the first vertex and the one just before the first turn.
    let a = start;
    let b = chain[k - 1];
    let c = chain[k];
    let mut dq: VecDeque<Point<T>> = VecDeque::with_capacity(chain.len() + 1);
    if ctr.orient(a, b, c).is_ccw() {
        dq.extend([c, a, b, c]);
    } else {
        dq.extend([c, b, a, c]);
    }

    for &v in &chain[k + 1..] {
        let t = dq.len() - 1;
        let top_ok = ctr.orient(dq[t - 1], dq[t], v) != Orientation::Clockwise;
        if top_ok && ctr.orient(dq[0], dq[1], v) != Orientation::Clockwise {
            continue;
        }
        while dq.len() > 2 {
            let t = dq.len() - 1;
            if ctr.orient(dq[t - 1], dq[t], v).is_ccw() {
                break;
            }
            dq.pop_back();
        }
        dq.push_back(v);
        while dq.len() > 2 {
            if ctr.orient(dq[0], dq[1], v).is_ccw() {
                break;
            }
            dq.pop_front();
        }
        dq.push_front(v);
    }

    dq.pop_back();
    (Hull::from_ccw(dq.into()), stats(&ctr))
}
