//! Planar convex hulls through nested extreme-point quadrilaterals.
//!
//! The main entry point is [`equad_convex_hull`]. Graham scan, monotone chain
//! and Jarvis march are provided for comparison, along with a brute-force
//! oracle, seeded point generators and a benchmark harness.
//!
//! Everything is generic over [`Scalar`]; the aliases below cover the common
//! coordinate types.

pub mod assemble;
pub mod bench;
pub mod equad;
pub mod error;
pub mod geometry;
pub mod hull;
pub mod melkman;
pub mod pipeline;
pub mod pointgen;
pub mod preprocess;
pub mod reference;
pub mod scalar;
pub mod validate;

pub use assemble::{
    assemble_polygon, build_chains, build_chains_indexed, is_simple_polygon, select_proper_vertices,
    EdgeChain, RegionRule, SimplePolygon, REGION_RULES,
};
pub use equad::{build_all_equads, EQuad, EQuadBuilder, Slot};
pub use error::{HullError, PointIoError};
pub use geometry::{compute_aabb, orient, strictly_inside_quad, Aabb, Orientation, Point};
pub use hull::Hull;
pub use melkman::{melkman_hull, MelkmanStats};
pub use pipeline::{equad_convex_hull, equad_run, EquadRun, EquadTrace, HullStats, RunOptions};
pub use preprocess::{
    classify_subregion, discard_interior, find_extremes, sort_dual, ExtremeQuadruple, PointState,
    SortedPointSet, SubRegion,
};
pub use reference::{graham_scan, jarvis_march, monotone_chain, oracle_hull};
pub use scalar::Scalar;

pub type PointF64 = Point<f64>;
pub type PointF32 = Point<f32>;
pub type PointI64 = Point<i64>;
pub type PointI32 = Point<i32>;
pub type HullF64 = Hull<f64>;
pub type HullF32 = Hull<f32>;
pub type HullI64 = Hull<i64>;
pub type EQuadF64 = EQuad<f64>;
