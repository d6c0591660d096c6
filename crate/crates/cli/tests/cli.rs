use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn equad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> Output {
    let out = equad(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, body).unwrap();
    p
}

fn count(hay: &str, needle: &str) -> usize {
    hay.matches(needle).count()
}

fn stat(stdout: &[u8], key: &str) -> usize {
    let text = String::from_utf8_lossy(stdout);
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .parse()
        .unwrap()
}

#[test]
fn gen_zero_points_gives_empty_file() {
    let d = TempDir::new().unwrap();
    let out = path(&d, "z.txt");
    let o = ok(&["gen", "--dist", "rect", "--n", "0", "--out", &out]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "0");
    assert_eq!(fs::read(&out).unwrap(), b"");
}

#[test]
fn gen_is_deterministic() {
    let d = TempDir::new().unwrap();
    let (a, b) = (path(&d, "a.txt"), path(&d, "b.txt"));
    ok(&["gen", "--dist", "disk", "--n", "100", "--seed", "7", "--out", &a]);
    ok(&["gen", "--dist", "disk", "--n", "100", "--seed", "7", "--out", &b]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), 100);
}

#[test]
fn gen_rect_sample_mean() {
    let d = TempDir::new().unwrap();
    let out = path(&d, "r.txt");
    ok(&["gen", "--dist", "rect", "--n", "50000", "--seed", "1", "--out", &out]);
    let pts: Vec<(f64, f64)> = fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(|l| {
            let mut f = l.split_whitespace().map(|v| v.parse::<f64>().unwrap());
            (f.next().unwrap(), f.next().unwrap())
        })
        .collect();
    assert_eq!(pts.len(), 50000);
    // Uniform on [0,1]: standard error of the mean is about 0.0013.
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / 50000.0;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / 50000.0;
    assert!((mx - 0.5).abs() < 0.01 && (my - 0.5).abs() < 0.01, "{mx} {my}");
    assert!(pts.iter().all(|p| (0.0..=1.0).contains(&p.0) && (0.0..=1.0).contains(&p.1)));
}

#[test]
fn gen_grid_gives_integers() {
    let d = TempDir::new().unwrap();
    let out = path(&d, "g.txt");
    ok(&["gen", "--dist", "disk", "--n", "300", "--seed", "3", "--grid", "100", "--out", &out]);
    for line in fs::read_to_string(&out).unwrap().lines() {
        for v in line.split_whitespace() {
            let v: f64 = v.parse().unwrap();
            assert!(v.fract() == 0.0 && (0.0..=100.0).contains(&v), "{line}");
        }
    }
}

#[test]
fn unwritable_output_exits_one() {
    let o = equad(&["gen", "--dist", "rect", "--n", "5", "--out", "/nonexistent-dir/x.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn square_hull_is_identical_for_every_algorithm() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "sq.txt", "# square\n0 0\n1 0\n1 1\n0 1\n0.5 0.5\n\n");
    let mut outputs = Vec::new();
    for algo in ["equad", "graham", "monotone", "jarvis"] {
        let out = path(&d, &format!("{algo}.txt"));
        ok(&["hull", "--algo", algo, "--in", &input, "--out", &out]);
        outputs.push(fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], b"0 0\n1 0\n1 1\n0 1\n");
    assert!(outputs.iter().all(|o| *o == outputs[0]));
}

#[test]
fn random_files_agree_byte_for_byte() {
    let d = TempDir::new().unwrap();
    for seed in 0..100u64 {
        let input = path(&d, "in.txt");
        let dist = if seed % 2 == 0 { "rect" } else { "disk" };
        let n = (20 + seed * 7).to_string();
        let s = seed.to_string();
        let mut args = vec!["gen", "--dist", dist, "--n", &n, "--seed", &s, "--out", &input];
        if seed % 3 == 0 {
            args.extend(["--grid", "50"]);
        }
        ok(&args);
        let mut first: Option<Vec<u8>> = None;
        for algo in ["equad", "graham", "monotone", "jarvis"] {
            let out = path(&d, &format!("{algo}.txt"));
            ok(&["hull", "--algo", algo, "--in", &input, "--out", &out]);
            let bytes = fs::read(&out).unwrap();
            match &first {
                None => first = Some(bytes),
                Some(f) => assert_eq!(*f, bytes, "seed {seed} algo {algo}"),
            }
        }
    }
}

#[test]
fn hull_stats_lines() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "sq.txt", "0 0\n1 0\n1 1\n0 1\n0.5 0.5\n");
    let out = path(&d, "h.txt");
    let o = ok(&["hull", "--in", &input, "--out", &out, "--stats"]);
    assert_eq!(stat(&o.stdout, "n"), 5);
    assert_eq!(stat(&o.stdout, "discarded_step1"), 1);
    assert_eq!(stat(&o.stdout, "equads"), 1);
    assert_eq!(stat(&o.stdout, "hull_size"), 4);
}

#[test]
fn hull_errors() {
    let d = TempDir::new().unwrap();
    let out = path(&d, "h.txt");
    let empty = write(&d, "e.txt", "# nothing\n");
    let o = equad(&["hull", "--in", &empty, "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no points"));

    let bad = write(&d, "bad.txt", "0 0\n1 x\n");
    let o = equad(&["hull", "--in", &bad, "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = equad(&["hull", "--in", &path(&d, "missing.txt"), "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(equad(&["hull", "--bogus"]).status.code(), Some(2));
    assert_eq!(equad(&["gen", "--dist", "triangle", "--n", "3", "--out", "x"]).status.code(), Some(2));
    assert_eq!(equad(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(equad(&["hull", "--algo", "quickhull", "--in", "a", "--out", "b"]).status.code(), Some(2));
}

#[test]
fn bench_single_row() {
    let d = TempDir::new().unwrap();
    let csv = path(&d, "b.csv");
    let o = ok(&[
        "bench", "--samples", "1", "--sizes", "1000", "--algos", "equad", "--dists", "rect", "--csv", &csv,
    ]);
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algorithm,distribution,n,sample,elapsed_ns,hull_size");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("equad,rect,1000,0,"));
    assert!(String::from_utf8_lossy(&o.stdout).contains("equad"));
}

#[test]
fn bench_timeouts_still_exit_zero() {
    let d = TempDir::new().unwrap();
    let csv = path(&d, "b.csv");
    ok(&[
        "bench", "--samples", "2", "--warmups", "0", "--sizes", "20000", "--algos", "jarvis,monotone",
        "--dists", "disk", "--jarvis-budget", "0.000001", "--csv", &csv,
    ]);
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 4);
    assert_eq!(count(&text, "jarvis,disk,20000"), 2);
    assert!(text.lines().filter(|l| l.starts_with("jarvis")).all(|l| l.ends_with(",TIMEOUT")));
}

#[test]
fn bench_rejects_bad_config() {
    let o = equad(&["bench", "--samples", "0", "--sizes", "10", "--csv", "/dev/null"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_passes_and_fails() {
    ok(&["validate", "--trials", "1", "--n-max", "4"]);
    ok(&["validate", "--trials", "200", "--n-max", "32", "--seed", "5"]);

    let d = TempDir::new().unwrap();
    let repro = path(&d, "repro.txt");
    let o = equad(&["validate", "--trials", "30", "--n-max", "20", "--inject-fault", "--repro", &repro]);
    assert_eq!(o.status.code(), Some(1));
    let text = fs::read_to_string(&repro).unwrap();
    assert!(text.starts_with("# algorithm=equad"));
    // The repro file is itself a valid point file.
    let out = path(&d, "h.txt");
    ok(&["hull", "--in", &repro, "--out", &out]);

    let o = equad(&["validate", "--trials", "1", "--n-max", "100000"]);
    assert_eq!(o.status.code(), Some(1));
}

fn trace(dir: &TempDir, input: &str, stage: &str) -> String {
    let svg = path(dir, &format!("{stage}.svg"));
    ok(&["trace", "--in", input, "--out-svg", &svg, "--stage", stage]);
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml") && text.trim_end().ends_with("</svg>"));
    text
}

fn stats_of(input: &str, dir: &TempDir) -> Output {
    ok(&["hull", "--in", input, "--out", &path(dir, "stats-hull.txt"), "--stats"])
}

#[test]
fn trace_square_hull() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "sq.txt", "0 0\n1 0\n1 1\n0 1\n");
    let svg = trace(&d, &input, "hull");
    assert_eq!(count(&svg, r#"class="hull""#), 1);
    let path_line = svg.lines().find(|l| l.contains(r#"class="hull""#)).unwrap();
    assert_eq!(count(path_line, "M") + count(path_line, " L"), 4);
    assert!(path_line.contains(" Z"));
    assert_eq!(count(&svg, r#"class="point""#), 4);
}

#[test]
fn trace_counts_match_stats() {
    let d = TempDir::new().unwrap();
    let twelve = "0 4\n2 0\n7 1\n9 5\n6 9\n2 8\n3 3\n5 2\n7 5\n4 7\n3 6\n5 5\n";
    let input = write(&d, "p12.txt", twelve);
    let stats = stats_of(&input, &d);
    let svg = trace(&d, &input, "equads");
    assert_eq!(count(&svg, r#"class="equad""#), stat(&stats.stdout, "equads"));
    let svg = trace(&d, &input, "discard");
    assert_eq!(count(&svg, r#"class="discarded""#), stat(&stats.stdout, "discarded_step1"));

    let big = path(&d, "big.txt");
    ok(&["gen", "--dist", "disk", "--n", "3000", "--seed", "11", "--out", &big]);
    let stats = stats_of(&big, &d);
    let svg = trace(&d, &big, "equads");
    assert_eq!(count(&svg, r#"class="equad""#), stat(&stats.stdout, "equads"));
    assert_eq!(
        count(&svg, r#"class="discarded""#),
        stat(&stats.stdout, "discarded_step1") + stat(&stats.stdout, "discarded_scans")
    );
    let svg = trace(&d, &big, "discard");
    assert_eq!(count(&svg, r#"class="discarded""#), stat(&stats.stdout, "discarded_step1"));
    assert_eq!(count(&trace(&d, &big, "chains"), r#"class="chain""#), 4);
    assert_eq!(count(&trace(&d, &big, "polygon"), r#"class="polygon""#), 1);
}

#[test]
fn trace_rejects_oversized_input() {
    let d = TempDir::new().unwrap();
    let big = path(&d, "big.txt");
    ok(&["gen", "--dist", "rect", "--n", "10001", "--out", &big]);
    let o = equad(&["trace", "--in", &big, "--out-svg", &path(&d, "x.svg"), "--stage", "hull"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!Path::new(&path(&d, "x.svg")).exists());
}
