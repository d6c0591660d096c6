//! Coordinate scalar types.
//!
//! Every algorithm in the crate is generic over [`Scalar`]. The trait bundles
//! the arithmetic needed by the hull code together with an exact orientation
//! sign, so each concrete type can pick its own exact evaluation strategy.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_traits::{Num, NumCast, ToPrimitive};

/// A coordinate type with an exact planar orientation predicate.
pub trait Scalar:
    Copy + PartialOrd + Num + NumCast + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Sign of `(bx-ax)(cy-ay) - (by-ay)(cx-ax)`, evaluated exactly.
    ///
    /// `Greater` means `c` lies to the left of the directed line `a -> b`.
    fn orient_sign(ax: Self, ay: Self, bx: Self, by: Self, cx: Self, cy: Self) -> Ordering;

    /// `false` for NaN and infinities. Integer types are always finite.
    fn is_finite(self) -> bool;

    /// Total comparison for values already known to be finite.
    #[inline]
    fn cmp_finite(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

#[inline]
fn sign_of_f64(det: f64) -> Ordering {
    det.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
}

impl Scalar for f64 {
    #[inline]
    fn orient_sign(ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> Ordering {
        // robust::orient2d is positive when (pa, pb, pc) turn counter-clockwise.
        let det = robust::orient2d(
            robust::Coord { x: ax, y: ay },
            robust::Coord { x: bx, y: by },
            robust::Coord { x: cx, y: cy },
        );
        sign_of_f64(det)
    }

    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl Scalar for f32 {
    #[inline]
    fn orient_sign(ax: f32, ay: f32, bx: f32, by: f32, cx: f32, cy: f32) -> Ordering {
        // Widening is exact, and the f64 predicate is exact on its inputs.
        f64::orient_sign(
            ax as f64, ay as f64, bx as f64, by as f64, cx as f64, cy as f64,
        )
    }

    #[inline]
    fn is_finite(self) -> bool {
        f32::is_finite(self)
    }
}

impl Scalar for i32 {
    #[inline]
    fn orient_sign(ax: i32, ay: i32, bx: i32, by: i32, cx: i32, cy: i32) -> Ordering {
        let (ax, ay, bx, by, cx, cy) = (
            ax as i128, ay as i128, bx as i128, by as i128, cx as i128, cy as i128,
        );
        ((bx - ax) * (cy - ay)).cmp(&((by - ay) * (cx - ax)))
    }

    #[inline]
    fn is_finite(self) -> bool {
        true
    }

    #[inline]
    fn cmp_finite(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

/// Signed 128-bit magnitude product of two differences of i64 values.
///
/// Each difference fits in 65 bits, so the product magnitude is below 2^128
/// and fits a `u128`; the sign is tracked separately.
#[inline]
fn signed_product(p: i128, q: i128) -> (bool, u128) {
    let negative = (p < 0) != (q < 0) && p != 0 && q != 0;
    (negative, p.unsigned_abs() * q.unsigned_abs())
}

#[inline]
fn cmp_signed(lhs: (bool, u128), rhs: (bool, u128)) -> Ordering {
    match (lhs.0, rhs.0) {
        (false, true) => {
            if lhs.1 == 0 && rhs.1 == 0 {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
        (true, false) => {
            if lhs.1 == 0 && rhs.1 == 0 {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
        (false, false) => lhs.1.cmp(&rhs.1),
        (true, true) => rhs.1.cmp(&lhs.1),
    }
}

impl Scalar for i64 {
    #[inline]
    fn orient_sign(ax: i64, ay: i64, bx: i64, by: i64, cx: i64, cy: i64) -> Ordering {
        let d = |p: i64, q: i64| p as i128 - q as i128;
        let lhs = signed_product(d(bx, ax), d(cy, ay));
        let rhs = signed_product(d(by, ay), d(cx, ax));
        cmp_signed(lhs, rhs)
    }

    #[inline]
    fn is_finite(self) -> bool {
        true
    }

    #[inline]
    fn cmp_finite(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}
