//! Per-step timing of the e-Quad pipeline on one generated input.
//!
//! Usage: `cargo run --release --example stages -- [rect|disk] [n] [seed]`

use equad_hull::pointgen::{generate, Distribution, GenSpec};
use equad_hull::{equad_run, monotone_chain, RunOptions};
use std::time::Instant;

fn main() {
    let mut args = std::env::args().skip(1);
    let dist: Distribution = args.next().as_deref().unwrap_or("rect").parse().expect("rect or disk");
    let n: usize = args.next().map_or(1_000_000, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));
    let pts = generate(&GenSpec::unit(dist, n, seed)).expect("valid spec");

    let t = Instant::now();
    let mc = monotone_chain(&pts);
    println!("monotone  {:>10.3} ms  h={}", t.elapsed().as_secs_f64() * 1e3, mc.len());

    let t = Instant::now();
    let run = equad_run(&pts, RunOptions { trace: false, stage_timing: true }).expect("non-empty");
    println!("equad     {:>10.3} ms  h={}", t.elapsed().as_secs_f64() * 1e3, run.hull.len());
    for (k, d) in run.stats.stage_times.unwrap().iter().enumerate() {
        println!("  step {}  {:>10.3} ms", k + 1, d.as_secs_f64() * 1e3);
    }
    for (k, v) in run.stats.to_key_values() {
        if !k.ends_with("_ns") {
            println!("  {k}={v}");
        }
    }
}
