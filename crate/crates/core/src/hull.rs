use crate::geometry::{orient, Point};
use crate::scalar::Scalar;

/// Canonical convex hull: strictly convex, CCW, starting at the vertex that
/// is smallest in `(y, x)` order.
///
/// A single point is returned for coincident input and the two extreme
/// endpoints for collinear input.
#[derive(Clone, Debug, PartialEq)]
pub struct Hull<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> Hull<T> {
    /// Rotates a strictly convex CCW cycle to the canonical start.
    pub fn from_ccw(mut vertices: Vec<Point<T>>) -> Self {
        if let Some(start) = (0..vertices.len()).min_by(|&a, &b| vertices[a].cmp_yx(&vertices[b])) {
            vertices.rotate_left(start);
        }
        Hull { vertices }
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point<T>> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Every consecutive triple turns strictly left.
    pub fn is_strictly_convex(&self) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => true,
            2 => v[0] != v[1],
            m => (0..m).all(|i| orient(v[i], v[(i + 1) % m], v[(i + 2) % m]).is_ccw()),
        }
    }

    /// `true` iff `p` lies inside or on the hull.
    pub fn contains(&self, p: Point<T>) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => v[0] == p,
            2 => {
                !orient(v[0], v[1], p).is_ccw()
                    && !orient(v[0], v[1], p).is_cw()
                    && crate::geometry::within_box(p, v[0], v[1])
            }
            m => (0..m).all(|i| !orient(v[i], v[(i + 1) % m], p).is_cw()),
        }
    }

    /// Starts at the `(y, x)`-smallest vertex.
    pub fn is_canonical(&self) -> bool {
        let v = &self.vertices;
        v.iter().all(|p| v[0].cmp_yx(p) != std::cmp::Ordering::Greater)
    }
}
