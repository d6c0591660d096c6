//! Static SVG rendering of pipeline stages.
//!
//! Element classes: `point` (filled dot), `discarded` (hollow dot),
//! `equad`, `chain`, `polygon` and `hull` (paths).

use std::fmt::Write as _;

use equad_hull::{EquadRun, PointF64};

use crate::Stage;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;

struct Frame {
    lo: PointF64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[PointF64]) -> Frame {
        let bb = equad_hull::compute_aabb(points).expect("non-empty input");
        let span = (bb.hi.x - bb.lo.x).max(bb.hi.y - bb.lo.y);
        let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
        Frame { lo: bb.lo, scale }
    }

    /// Screen coordinates with y pointing up.
    fn map(&self, p: PointF64) -> (f64, f64) {
        let x = MARGIN + (p.x - self.lo.x) * self.scale;
        let y = SIZE - MARGIN - (p.y - self.lo.y) * self.scale;
        (x, y)
    }

    fn path(&self, pts: &[PointF64], closed: bool) -> String {
        let mut d = String::new();
        for (k, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{x:.2} {y:.2}", if k == 0 { "M" } else { " L" });
        }
        if closed {
            d.push_str(" Z");
        }
        d
    }
}

fn dot(out: &mut String, f: &Frame, p: PointF64, hollow: bool) {
    let (x, y) = f.map(p);
    if hollow {
        let _ = writeln!(
            out,
            r##"<circle class="discarded" cx="{x:.2}" cy="{y:.2}" r="3" fill="none" stroke="#888" stroke-width="1"/>"##
        );
    } else {
        let _ = writeln!(out, r##"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="2.5" fill="#000"/>"##);
    }
}

fn path(out: &mut String, class: &str, d: &str, stroke: &str, width: f64) {
    let _ = writeln!(
        out,
        r##"<path class="{class}" d="{d}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"##
    );
}

pub fn render(points: &[PointF64], run: &EquadRun<f64>, stage: Stage) -> String {
    let f = Frame::fit(points);
    let trace = run.trace.as_ref().expect("run was traced");
    let n = points.len();
    let mut hollow = vec![false; n];
    match stage {
        Stage::Discard => {
            hollow.fill(true);
            for &i in &trace.survivors {
                hollow[i] = false;
            }
        }
        _ => {
            for i in trace.discarded_inputs(n) {
                hollow[i] = true;
            }
        }
    }

    let mut body = String::new();
    match stage {
        Stage::Discard => {}
        Stage::Equads => {
            for q in &trace.equads {
                let c = q.distinct_cycle();
                path(&mut body, "equad", &f.path(c, c.len() > 2), "#1f77b4", 1.0);
            }
        }
        Stage::Chains => {
            if let (Some(chains), Some(first)) = (&trace.chains, trace.equads.first()) {
                for (k, chain) in chains.iter().enumerate() {
                    let mut line = vec![first.vertices[k]];
                    line.extend_from_slice(&chain.vertices);
                    line.push(first.vertices[(k + 1) % 4]);
                    path(&mut body, "chain", &f.path(&line, false), "#2ca02c", 1.5);
                }
            }
        }
        Stage::Polygon => {
            let verts = match &trace.polygon {
                Some(poly) => poly.vertices.as_slice(),
                None => run.hull.vertices(),
            };
            path(&mut body, "polygon", &f.path(verts, true), "#ff7f0e", 1.5);
        }
        Stage::Hull => {
            path(&mut body, "hull", &f.path(run.hull.vertices(), true), "#d62728", 2.0);
        }
    }
    for (i, &p) in points.iter().enumerate() {
        dot(&mut body, &f, p, hollow[i]);
    }

    let mut out = String::new();
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#fff"/>"##);
    out.push_str(&body);
    out.push_str("</svg>\n");
    out
}
