//! Seeded point generators and the plain-text point file format.
//!
//! Randomness comes from a splitmix64 stream defined here bit for bit, so a
//! given [`GenSpec`] yields identical coordinates on every platform. Disk
//! samples use rejection from the bounding square rather than a polar map,
//! which keeps transcendental functions out of the generator.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{HullError, PointIoError};
use crate::geometry::Point;
use crate::scalar::Scalar;

/// Draw cap per disk point.
pub const DISK_DRAW_CAP: u32 = 64;

/// splitmix64 finaliser.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based splitmix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random mantissa bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        // Multiply-shift; bias is below 2^-64 * bound, irrelevant here.
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// The two sampling regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distribution {
    Rect,
    Disk,
}

impl Distribution {
    pub const ALL: [Distribution; 2] = [Distribution::Rect, Distribution::Disk];

    pub fn token(self) -> &'static str {
        match self {
            Distribution::Rect => "rect",
            Distribution::Disk => "disk",
        }
    }
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rect" => Ok(Distribution::Rect),
            "disk" => Ok(Distribution::Disk),
            other => Err(format!("unknown distribution '{other}' (expected rect or disk)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    Rect { lo: Point<f64>, hi: Point<f64> },
    Disk { center: Point<f64>, radius: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoordMode {
    Real,
    /// Coordinates rounded to the nearest multiple of `step`.
    Snapped { step: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub region: Region,
    pub n: usize,
    pub seed: u64,
    pub mode: CoordMode,
}

impl GenSpec {
    /// Unit square `[0,1]^2`, or the disk inscribed in it.
    pub fn unit(dist: Distribution, n: usize, seed: u64) -> Self {
        let region = match dist {
            Distribution::Rect => Region::Rect {
                lo: Point::new(0.0, 0.0),
                hi: Point::new(1.0, 1.0),
            },
            Distribution::Disk => Region::Disk {
                center: Point::new(0.5, 0.5),
                radius: 0.5,
            },
        };
        GenSpec {
            region,
            n,
            seed,
            mode: CoordMode::Real,
        }
    }

    /// Integer coordinates in `[0, side]^2` (or the inscribed disk).
    pub fn integer_grid(dist: Distribution, n: usize, seed: u64, side: u32) -> Self {
        let s = side as f64;
        let region = match dist {
            Distribution::Rect => Region::Rect {
                lo: Point::new(0.0, 0.0),
                hi: Point::new(s, s),
            },
            Distribution::Disk => Region::Disk {
                center: Point::new(s / 2.0, s / 2.0),
                radius: s / 2.0,
            },
        };
        GenSpec {
            region,
            n,
            seed,
            mode: CoordMode::Snapped { step: 1.0 },
        }
    }

    pub fn validate(&self) -> Result<(), HullError> {
        let bad = |m: &str| Err(HullError::InvalidSpec(m.to_string()));
        match self.region {
            Region::Rect { lo, hi } => {
                if !(lo.is_finite() && hi.is_finite()) || !(lo.x < hi.x && lo.y < hi.y) {
                    return bad("rectangle bounds must be finite with lo < hi");
                }
            }
            Region::Disk { center, radius } => {
                if !center.is_finite() || !(radius.is_finite() && radius > 0.0) {
                    return bad("disk needs a finite center and positive radius");
                }
            }
        }
        if let CoordMode::Snapped { step } = self.mode {
            if !(step.is_finite() && step > 0.0) {
                return bad("grid step must be positive");
            }
        }
        Ok(())
    }
}

#[inline]
fn snap(v: f64, mode: CoordMode) -> f64 {
    match mode {
        CoordMode::Real => v,
        CoordMode::Snapped { step } => (v / step).round() * step,
    }
}

/// Test used both by the sampler and by callers checking its output.
#[inline]
pub fn in_disk(p: Point<f64>, center: Point<f64>, radius: f64) -> bool {
    let dx = p.x - center.x;
    let dy = p.y - center.y;
    dx * dx + dy * dy <= radius * radius
}

pub fn generate(spec: &GenSpec) -> Result<Vec<Point<f64>>, HullError> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let mut out = Vec::with_capacity(spec.n);
    match spec.region {
        Region::Rect { lo, hi } => {
            for _ in 0..spec.n {
                let x = lo.x + rng.next_f64() * (hi.x - lo.x);
                let y = lo.y + rng.next_f64() * (hi.y - lo.y);
                out.push(Point::new(snap(x, spec.mode), snap(y, spec.mode)));
            }
        }
        Region::Disk { center, radius } => {
            for index in 0..spec.n {
                let mut draws = 0;
                let p = loop {
                    if draws == DISK_DRAW_CAP {
                        return Err(HullError::RejectionCapExceeded {
                            cap: DISK_DRAW_CAP,
                            index,
                        });
                    }
                    draws += 1;
                    let dx = (2.0 * rng.next_f64() - 1.0) * radius;
                    let dy = (2.0 * rng.next_f64() - 1.0) * radius;
                    let c = Point::new(
                        snap(center.x + dx, spec.mode),
                        snap(center.y + dy, spec.mode),
                    );
                    if in_disk(c, center, radius) {
                        break c;
                    }
                };
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Writes one `x y` line per point.
pub fn write_points<T: Scalar, W: Write>(mut w: W, points: &[Point<T>]) -> io::Result<()> {
    for p in points {
        writeln!(w, "{} {}", p.x, p.y)?;
    }
    w.flush()
}

pub fn write_points_file<T: Scalar>(path: impl AsRef<Path>, points: &[Point<T>]) -> io::Result<()> {
    write_points(BufWriter::new(File::create(path)?), points)
}

/// Parses the point format: optional `#` comment lines, blank lines
/// ignored, otherwise exactly two numbers per line.
pub fn read_points<T: Scalar + FromStr, R: Read>(r: R) -> Result<Vec<Point<T>>, PointIoError> {
    let mut out = Vec::new();
    for (k, line) in BufReader::new(r).lines().enumerate() {
        let line = line?;
        let lineno = k + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |message: String| PointIoError::Parse {
            line: lineno,
            message,
        };
        let mut fields = body.split_whitespace();
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two numbers, got '{body}'")));
        };
        let parse = |s: &str| -> Result<T, PointIoError> {
            let v: T = s.parse().map_err(|_| err(format!("invalid number '{s}'")))?;
            if !v.is_finite() {
                return Err(err(format!("non-finite value '{s}'")));
            }
            Ok(v)
        };
        out.push(Point::new(parse(xs)?, parse(ys)?));
    }
    Ok(out)
}

pub fn read_points_file<T: Scalar + FromStr>(path: impl AsRef<Path>) -> Result<Vec<Point<T>>, PointIoError> {
    read_points(File::open(path)?)
}
