//! Edge chains per sub-region and the simple polygon joining them.
//!
//! Only two slots of each e-Quad feed a given region's chain:
//!
//! | region | anchors                 | proper slots   |
//! |--------|-------------------------|----------------|
//! | R1     | leftmost, bottommost    | xmin, ymin     |
//! | R2     | bottommost, rightmost   | ymin, xmax     |
//! | R3     | rightmost, topmost      | xmax, ymax     |
//! | R4     | topmost, leftmost       | ymax, xmin     |
//!
//! A slot vertex is kept when it classifies into the region of a rule that
//! names its slot. A point occupying several slots of one quad is adopted
//! once. Each chain is ordered monotonically in x (ties by y) so that the
//! chains, and the cycle joining them through the four anchors, are simple.

use std::cmp::Ordering;

use crate::equad::{EQuad, Slot};
use crate::error::HullError;
use crate::geometry::Point;
use crate::preprocess::{classify_subregion, SortedPointSet, SubRegion};
use crate::scalar::Scalar;

/// One row of the proper-vertex table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionRule {
    pub region: SubRegion,
    pub anchors: (Slot, Slot),
    pub proper: [Slot; 2],
}

pub const REGION_RULES: [RegionRule; 4] = [
    RegionRule {
        region: SubRegion::R1,
        anchors: (Slot::XMin, Slot::YMin),
        proper: [Slot::XMin, Slot::YMin],
    },
    RegionRule {
        region: SubRegion::R2,
        anchors: (Slot::YMin, Slot::XMax),
        proper: [Slot::YMin, Slot::XMax],
    },
    RegionRule {
        region: SubRegion::R3,
        anchors: (Slot::XMax, Slot::YMax),
        proper: [Slot::XMax, Slot::YMax],
    },
    RegionRule {
        region: SubRegion::R4,
        anchors: (Slot::YMax, Slot::XMin),
        proper: [Slot::YMax, Slot::XMin],
    },
];

/// Per-slot examination counters accumulated during chain building.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExamCounter {
    /// Total slot examinations.
    pub total: usize,
    /// Largest number of examinations any single e-Quad slot received.
    pub max_per_slot: u32,
}

/// Visits every adopted `(region, slot)` of `q`, in rule order.
///
/// Each slot is examined by the two rules naming it; a slot repeating an
/// earlier slot's point within the same rule is not adopted again.
pub(crate) fn for_each_proper<T: Scalar>(
    q: &EQuad<T>,
    first: &EQuad<T>,
    counter: &mut ExamCounter,
    mut emit: impl FnMut(SubRegion, Slot),
) {
    let mut region: [Option<SubRegion>; 4] = [None; 4];
    let mut exams = [0u32; 4];
    for rule in &REGION_RULES {
        let [a, b] = rule.proper;
        for slot in [a, b] {
            let s = slot as usize;
            exams[s] += 1;
            let r = *region[s].get_or_insert_with(|| {
                classify_subregion(first, q.vertices[s])
            });
            if r != rule.region {
                continue;
            }
            if slot == b && q.vertices[a as usize] == q.vertices[s] {
                continue;
            }
            emit(rule.region, slot);
        }
    }
    counter.total += exams.iter().sum::<u32>() as usize;
    counter.max_per_slot = counter.max_per_slot.max(*exams.iter().max().unwrap_or(&0));
}

/// Proper vertices of `q` relative to the generation-0 quad `first`.
pub fn select_proper_vertices<T: Scalar>(
    q: &EQuad<T>,
    first: &EQuad<T>,
) -> Vec<(SubRegion, Point<T>)> {
    let mut out = Vec::new();
    let mut counter = ExamCounter::default();
    for_each_proper(q, first, &mut counter, |r, s| out.push((r, q.vertex(s))));
    out
}

/// Monotone vertex chain of one sub-region, excluding the anchors.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeChain<T> {
    pub region: SubRegion,
    pub vertices: Vec<Point<T>>,
}

/// Chain ordering: R1 `(x asc, y desc)`, R2 `(x asc, y asc)`,
/// R3 `(x desc, y asc)`, R4 `(x desc, y desc)`.
pub fn chain_order<T: Scalar>(region: SubRegion, a: &Point<T>, b: &Point<T>) -> Ordering {
    let x = a.x.cmp_finite(&b.x);
    let y = a.y.cmp_finite(&b.y);
    match region {
        SubRegion::R1 => x.then(y.reverse()),
        SubRegion::R2 => x.then(y),
        SubRegion::R3 => x.reverse().then(y),
        SubRegion::R4 => x.reverse().then(y.reverse()),
        SubRegion::Inner => Ordering::Equal,
    }
}

/// Four chains, in region order R1..R4.
pub type Chains<T> = [EdgeChain<T>; 4];

fn empty_chains<T>() -> Chains<T> {
    SubRegion::CORNERS.map(|region| EdgeChain {
        region,
        vertices: Vec::new(),
    })
}

/// Builds the chains from an e-Quad sequence whose first element is
/// generation 0, by sorted insertion.
pub fn build_chains<T: Scalar>(equads: &[EQuad<T>]) -> (Chains<T>, ExamCounter) {
    let mut chains = empty_chains();
    let mut counter = ExamCounter::default();
    let Some(first) = equads.first() else {
        return (chains, counter);
    };
    for q in equads {
        for_each_proper(q, first, &mut counter, |r, s| {
            let k = r.corner_index().expect("corner region");
            chains[k].vertices.push(q.vertex(s));
        });
    }
    for chain in chains.iter_mut() {
        let region = chain.region;
        chain.vertices.sort_by(|a, b| chain_order(region, a, b));
        chain.vertices.dedup();
    }
    (chains, counter)
}

/// Linear-time chain construction that reuses the dual sort.
///
/// Adopted points are tagged with their region and the chains are read off
/// `set.by_x()` (forwards for R1/R2, backwards for R3/R4), flipping runs of
/// equal x where the region's y order disagrees with the list's.
pub fn build_chains_indexed<T: Scalar>(
    set: &SortedPointSet<T>,
    equads: impl IntoIterator<Item = EQuad<T>>,
    first: &EQuad<T>,
) -> (Chains<T>, ExamCounter) {
    const NONE: u8 = u8::MAX;
    let mut tag = vec![NONE; set.len()];
    let mut counter = ExamCounter::default();
    for q in equads {
        for_each_proper(&q, first, &mut counter, |r, s| {
            tag[q.index(s)] = r.corner_index().expect("corner region") as u8;
        });
    }
    let mut chains = empty_chains();
    let points = set.points();
    for &i in set.by_x() {
        if tag[i] != NONE {
            chains[tag[i] as usize].vertices.push(points[i]);
        }
    }
    for (k, chain) in chains.iter_mut().enumerate() {
        let v = &mut chain.vertices;
        if k >= 2 {
            v.reverse();
        }
        // by_x breaks x ties by ascending y; R1 and R3 want the opposite.
        if k == 0 || k == 2 {
            let mut start = 0;
            while start < v.len() {
                let mut end = start + 1;
                while end < v.len() && v[end].x == v[start].x {
                    end += 1;
                }
                v[start..end].reverse();
                start = end;
            }
        }
        v.dedup();
    }
    (chains, counter)
}

/// Closed vertex cycle in CCW order.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplePolygon<T> {
    pub vertices: Vec<Point<T>>,
}

/// Joins anchors and chains: leftmost, R1, bottommost, R2, rightmost, R3,
/// topmost, R4. Consecutive duplicates (coincident anchors) collapse.
pub fn assemble_polygon<T: Scalar>(
    chains: &Chains<T>,
    first: &EQuad<T>,
) -> Result<SimplePolygon<T>, HullError> {
    let total: usize = chains.iter().map(|c| c.vertices.len()).sum::<usize>() + 4;
    let mut out: Vec<Point<T>> = Vec::with_capacity(total);
    let mut push = |p: Point<T>| {
        if out.last() != Some(&p) {
            out.push(p);
        }
    };
    for (k, chain) in chains.iter().enumerate() {
        push(first.vertices[k]);
        for &v in &chain.vertices {
            push(v);
        }
    }
    while out.len() > 1 && out.last() == out.first() {
        out.pop();
    }
    if out.is_empty() {
        return Err(HullError::EmptyInput);
    }
    Ok(SimplePolygon { vertices: out })
}

/// O(m²) simplicity check: consecutive vertices distinct, adjacent edges
/// meet only at their shared vertex, non-adjacent edges do not touch.
pub fn is_simple_polygon<T: Scalar>(poly: &[Point<T>]) -> bool {
    use crate::geometry::{orient, within_box, Orientation};
    let m = poly.len();
    if m < 3 {
        return m < 2 || poly[0] != poly[1];
    }
    let seg = |i: usize| (poly[i], poly[(i + 1) % m]);
    let on_segment = |p: Point<T>, a: Point<T>, b: Point<T>| {
        orient(a, b, p) == Orientation::Collinear && within_box(p, a, b)
    };
    let intersects = |(a, b): (Point<T>, Point<T>), (c, d): (Point<T>, Point<T>)| {
        let (o1, o2) = (orient(a, b, c), orient(a, b, d));
        let (o3, o4) = (orient(c, d, a), orient(c, d, b));
        let proper = o1 != o2
            && o3 != o4
            && o1 != Orientation::Collinear
            && o2 != Orientation::Collinear
            && o3 != Orientation::Collinear
            && o4 != Orientation::Collinear;
        proper
            || on_segment(c, a, b)
            || on_segment(d, a, b)
            || on_segment(a, c, d)
            || on_segment(b, c, d)
    };
    for i in 0..m {
        let (a, b) = seg(i);
        if a == b {
            return false;
        }
        // Adjacent edge i+1 may only share vertex b.
        let (_, c) = seg((i + 1) % m);
        if orient(a, b, c) == Orientation::Collinear && !within_box(b, a, c) {
            return false;
        }
        for j in (i + 2)..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            if intersects(seg(i), seg(j)) {
                return false;
            }
        }
    }
    true
}
