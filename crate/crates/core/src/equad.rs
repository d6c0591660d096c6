//! Recursive peeling of extreme-point quadrilaterals (e-Quads).
//!
//! Each generation takes the leftmost, bottommost, rightmost and topmost
//! active points, skipping (and discarding) candidates that lie strictly
//! inside the previous generation's quad. Four cursors, two per sorted
//! list, persist across generations so the whole peel is linear in the
//! number of points.

use crate::geometry::{strictly_inside_quad, Point};
use crate::preprocess::{PointState, SortedPointSet};
use crate::scalar::Scalar;

/// Vertex slot of an e-Quad, in CCW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    XMin = 0,
    YMin = 1,
    XMax = 2,
    YMax = 3,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::XMin, Slot::YMin, Slot::XMax, Slot::YMax];
}

/// Quadrilateral of four directional extremes, possibly degenerate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EQuad<T> {
    /// Points in slot order `[xmin, ymin, xmax, ymax]`.
    pub vertices: [Point<T>; 4],
    /// Indices of the slot points in the owning point array.
    pub indices: [usize; 4],
    pub generation: usize,
    /// Candidates discarded while scanning for this quad's vertices.
    pub scan_discards: usize,
    cycle: [Point<T>; 4],
    cycle_len: u8,
}

impl<T: Scalar> EQuad<T> {
    pub fn new(vertices: [Point<T>; 4], indices: [usize; 4], generation: usize) -> Self {
        let mut cycle = [vertices[0]; 4];
        let mut len = 0usize;
        for v in vertices {
            if len == 0 || cycle[len - 1] != v {
                cycle[len] = v;
                len += 1;
            }
        }
        while len > 1 && cycle[len - 1] == cycle[0] {
            len -= 1;
        }
        EQuad {
            vertices,
            indices,
            generation,
            scan_discards: 0,
            cycle,
            cycle_len: len as u8,
        }
    }

    /// CCW cycle with consecutive duplicates removed (1 to 4 vertices).
    #[inline]
    pub fn distinct_cycle(&self) -> &[Point<T>] {
        &self.cycle[..self.cycle_len as usize]
    }

    #[inline]
    pub fn vertex(&self, slot: Slot) -> Point<T> {
        self.vertices[slot as usize]
    }

    #[inline]
    pub fn index(&self, slot: Slot) -> usize {
        self.indices[slot as usize]
    }
}

/// Stateful e-Quad generator over one [`SortedPointSet`].
pub struct EQuadBuilder<'a, T> {
    set: &'a mut SortedPointSet<T>,
    x_lo: usize,
    x_hi: usize,
    y_lo: usize,
    y_hi: usize,
    last: Option<EQuad<T>>,
    generation: usize,
    scan_discards: usize,
    x_steps: usize,
    y_steps: usize,
}

struct Cursor<'s, T> {
    order: &'s [usize],
    points: &'s [Point<T>],
    state: &'s mut [PointState],
    last: Option<&'s EQuad<T>>,
    discards: usize,
    steps: usize,
}

impl<T: Scalar> Cursor<'_, T> {
    /// Tests the active point at `order[pos]`; discards it when inside `last`.
    #[inline]
    fn accept(&mut self, pos: usize) -> bool {
        let i = self.order[pos];
        if self.state[i] != PointState::Active {
            return false;
        }
        match self.last {
            Some(q) if strictly_inside_quad(self.points[i], q) => {
                self.state[i] = PointState::DiscardedInterior;
                self.discards += 1;
                false
            }
            _ => true,
        }
    }

    fn front(&mut self, lo: &mut usize, hi: usize) -> Option<usize> {
        while *lo < hi {
            if self.accept(*lo) {
                return Some(self.order[*lo]);
            }
            *lo += 1;
            self.steps += 1;
        }
        None
    }

    fn back(&mut self, lo: usize, hi: &mut usize) -> Option<usize> {
        while *hi > lo {
            if self.accept(*hi - 1) {
                return Some(self.order[*hi - 1]);
            }
            *hi -= 1;
            self.steps += 1;
        }
        None
    }
}

impl<'a, T: Scalar> EQuadBuilder<'a, T> {
    pub fn new(set: &'a mut SortedPointSet<T>) -> Self {
        let n = set.len();
        EQuadBuilder {
            set,
            x_lo: 0,
            x_hi: n,
            y_lo: 0,
            y_hi: n,
            last: None,
            generation: 0,
            scan_discards: 0,
            x_steps: 0,
            y_steps: 0,
        }
    }

    /// Produces the next e-Quad, or `None` once no active point survives.
    ///
    /// Scan order within a generation is xmin, xmax, ymin, ymax; winners are
    /// tagged consumed only after all four have been found, so a lone
    /// remaining point fills every slot.
    pub fn next_equad(&mut self) -> Option<EQuad<T>> {
        let set = &mut *self.set;
        let mut xc = Cursor {
            order: &set.by_x,
            points: &set.points,
            state: &mut set.state,
            last: self.last.as_ref(),
            discards: 0,
            steps: 0,
        };
        let xmin = xc.front(&mut self.x_lo, self.x_hi);
        let xmax = xmin.and_then(|_| xc.back(self.x_lo, &mut self.x_hi));
        let (xd, xs) = (xc.discards, xc.steps);
        let mut yc = Cursor {
            order: &set.by_y,
            points: &set.points,
            state: &mut set.state,
            last: self.last.as_ref(),
            discards: 0,
            steps: 0,
        };
        let found = xmin.zip(xmax).and_then(|(xmin, xmax)| {
            let ymin = yc.front(&mut self.y_lo, self.y_hi)?;
            let ymax = yc.back(self.y_lo, &mut self.y_hi)?;
            Some([xmin, ymin, xmax, ymax])
        });
        let (yd, ys) = (yc.discards, yc.steps);
        self.x_steps += xs;
        self.y_steps += ys;
        self.scan_discards += xd + yd;

        let indices = match found {
            Some(ix) => ix,
            None => {
                self.last = None;
                return None;
            }
        };
        for &i in &indices {
            set.state[i] = PointState::ConsumedAsVertex;
        }
        let mut quad = EQuad::new(indices.map(|i| set.points[i]), indices, self.generation);
        quad.scan_discards = xd + yd;
        self.generation += 1;
        self.last = Some(quad);
        Some(quad)
    }

    /// Total candidates discarded as inside the previous quad.
    pub fn scan_discards(&self) -> usize {
        self.scan_discards
    }

    /// Cursor advancements over `(by_x, by_y)`.
    pub fn cursor_steps(&self) -> (usize, usize) {
        (self.x_steps, self.y_steps)
    }
}

impl<T: Scalar> Iterator for EQuadBuilder<'_, T> {
    type Item = EQuad<T>;

    fn next(&mut self) -> Option<EQuad<T>> {
        self.next_equad()
    }
}

/// All e-Quads of a set plus scan counters.
#[derive(Clone, Debug)]
pub struct EQuadSequence<T> {
    pub equads: Vec<EQuad<T>>,
    pub scan_discards: usize,
    pub cursor_steps: (usize, usize),
}

/// Peels e-Quads until no point is active.
pub fn build_all_equads<T: Scalar>(set: &mut SortedPointSet<T>) -> EQuadSequence<T> {
    let mut builder = EQuadBuilder::new(set);
    let equads: Vec<_> = builder.by_ref().collect();
    EQuadSequence {
        scan_discards: builder.scan_discards(),
        cursor_steps: builder.cursor_steps(),
        equads,
    }
}
