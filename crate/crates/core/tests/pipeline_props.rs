use equad_hull::assemble::is_simple_polygon;
use equad_hull::pointgen::{generate, Distribution, GenSpec, SplitMix64};
use equad_hull::{equad_convex_hull, equad_run, oracle_hull, Hull, Point, PointF64, PointI64, RunOptions};
use proptest::prelude::*;

fn grid_points(max: i64, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<PointF64>> {
    prop::collection::vec((0..=max, 0..=max), len)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::new(x as f64, y as f64)).collect())
}

fn hull(points: &[PointF64]) -> Hull<f64> {
    equad_convex_hull(points).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn permutation_invariant(pts in grid_points(40, 1..60), seed in any::<u64>()) {
        let mut shuffled = pts.clone();
        let mut rng = SplitMix64::new(seed);
        for i in (1..shuffled.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            shuffled.swap(i, j);
        }
        prop_assert_eq!(hull(&pts), hull(&shuffled));
    }

    #[test]
    fn duplicates_do_not_matter(pts in grid_points(30, 1..50)) {
        let mut doubled = pts.clone();
        doubled.extend_from_slice(&pts);
        let mut dedup = pts.clone();
        dedup.sort_by(|a, b| a.cmp_xy(b));
        dedup.dedup();
        prop_assert_eq!(hull(&doubled), hull(&dedup));
    }

    #[test]
    fn integer_translation(pts in grid_points(1000, 1..60), dx in -5000i64..5000, dy in -5000i64..5000) {
        let (tx, ty) = (dx as f64, dy as f64);
        let moved: Vec<PointF64> = pts.iter().map(|p| p.translate(tx, ty)).collect();
        let expected: Vec<PointF64> = hull(&pts).vertices().iter().map(|p| p.translate(tx, ty)).collect();
        let got = hull(&moved);
        prop_assert_eq!(got.vertices(), expected.as_slice());
    }

    #[test]
    fn stats_account_for_every_point(pts in grid_points(50, 1..80)) {
        let (h, s) = equad_convex_hull(&pts).unwrap();
        prop_assert!(s.is_conserved(), "{:?}", s);
        prop_assert_eq!(s.n, pts.len());
        prop_assert_eq!(s.hull_size, h.len());
        prop_assert!(s.hull_size <= s.polygon_size);
        prop_assert!(s.polygon_size <= s.n);
        prop_assert!(s.slot_examinations.max_per_slot <= 2);
    }

    #[test]
    fn matches_oracle_on_small_grids(pts in grid_points(7, 1..40)) {
        prop_assert_eq!(hull(&pts), oracle_hull(&pts).unwrap());
    }

    #[test]
    fn scalar_types_agree(pts in grid_points(1 << 20, 1..60)) {
        let ints: Vec<PointI64> = pts.iter().map(|p| Point::new(p.x as i64, p.y as i64)).collect();
        let small: Vec<Point<i32>> = ints.iter().map(|p| Point::new(p.x as i32, p.y as i32)).collect();
        let floats32: Vec<Point<f32>> = pts.iter().map(|p| Point::new(p.x as f32, p.y as f32)).collect();
        let reference: Vec<(i64, i64)> = hull(&pts).vertices().iter().map(|p| (p.x as i64, p.y as i64)).collect();
        let h64: Vec<(i64, i64)> = equad_convex_hull(&ints).unwrap().0.vertices().iter().map(|p| (p.x, p.y)).collect();
        let h32: Vec<(i64, i64)> = equad_convex_hull(&small).unwrap().0.vertices().iter().map(|p| (p.x as i64, p.y as i64)).collect();
        let hf32: Vec<(i64, i64)> = equad_convex_hull(&floats32).unwrap().0.vertices().iter().map(|p| (p.x as i64, p.y as i64)).collect();
        prop_assert_eq!(&h64, &reference);
        prop_assert_eq!(&h32, &reference);
        prop_assert_eq!(&hf32, &reference);
    }
}

#[test]
fn polygon_is_simple_and_carries_the_hull() {
    for seed in 0..40 {
        let dist = if seed % 2 == 0 { Distribution::Rect } else { Distribution::Disk };
        let pts = generate(&GenSpec::integer_grid(dist, 1500, seed, 1 << 16)).unwrap();
        let run = equad_run(&pts, RunOptions { trace: true, stage_timing: false }).unwrap();
        let poly = run.trace.unwrap().polygon.expect("non-degenerate input");
        assert!(is_simple_polygon(&poly.vertices), "seed {seed}");
        for v in run.hull.vertices() {
            assert!(poly.vertices.contains(v), "seed {seed}: hull vertex {v} missing from polygon");
        }
    }
}

#[test]
fn large_extreme_coordinates() {
    let big = (1i64 << 52) as f64;
    let pts = [
        Point::new(-big, -big),
        Point::new(big, -big + 1.0),
        Point::new(big - 1.0, big),
        Point::new(-big + 1.0, big - 1.0),
        Point::new(0.0, 0.0),
        Point::new(big - 2.0, -big + 2.0),
    ];
    assert_eq!(hull(&pts), oracle_hull(&pts).unwrap());
}

#[test]
fn near_collinear_reals_match_oracle() {
    // Points a few ulps off a long diagonal stress the exact predicate.
    let mut pts = Vec::new();
    let mut rng = SplitMix64::new(77);
    for _ in 0..300 {
        let t = rng.next_f64();
        let wobble = (rng.below(5) as f64 - 2.0) * f64::EPSILON;
        pts.push(Point::new(0.1 + t * 0.7, 0.2 + t * 0.7 + wobble));
    }
    assert_eq!(hull(&pts), oracle_hull(&pts).unwrap());
}
