use proptest::prelude::*;
use voidmie::datagen::{gen_single_circle, EnsembleSpec};
use voidmie::engine::{run_to_convergence, InitialScope, SweepConfig};
use voidmie::geom::{
    circumcircle, convex_hull, orient, point_in_polygon, point_segment_distance, polygon_area,
    Location, Orientation, Point2, PointCloud, Polygon, Segment,
};
use voidmie::locator::{
    best_segment, dv_point, enumerate_hull_segments, interior_points, mds_score, LocatorConfig,
    StartPolicy,
};
use voidmie::triangulation::ClearanceField;
use voidmie::IdSet;

type P = Point2<f64>;

fn pt() -> impl Strategy<Value = P> {
    (-100.0..100.0f64, -100.0..100.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

fn cloud(min: usize, max: usize) -> impl Strategy<Value = PointCloud<f64>> {
    prop::collection::vec(pt(), min..max).prop_map(|v| PointCloud::new(v).unwrap())
}

fn rigid(p: P, theta: f64, t: (f64, f64)) -> P {
    let (s, c) = theta.sin_cos();
    Point2::new(c * p.x - s * p.y + t.0, s * p.x + c * p.y + t.1)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_is_convex_and_contains_cloud(c in cloud(3, 80)) {
        let Ok(hull) = convex_hull(&c) else { return Ok(()); };
        let h = hull.len();
        for i in 0..h {
            let (a, b, d) = (c.point(hull[i]), c.point(hull[(i + 1) % h]), c.point(hull[(i + 2) % h]));
            prop_assert_eq!(orient(a, b, d), Orientation::CounterClockwise);
        }
        let poly = Polygon::new(hull.iter().map(|&i| c.point(i)).collect()).unwrap();
        for &p in c.points() {
            prop_assert_ne!(point_in_polygon(p, &poly), Location::Outside);
        }
    }

    #[test]
    fn segment_distance_vanishes_on_segment(a in pt(), b in pt(), t in 0.0..=1.0f64, off in 1e-3..10.0f64) {
        prop_assume!(a.distance(b) > 1e-3);
        let s = Segment::new(a, b).unwrap();
        let on = a.lerp(b, t);
        prop_assert!(point_segment_distance(on, &s) <= 1e-12 * (1.0 + a.norm_sq().max(b.norm_sq()).sqrt()));
        let d = b.sub(a);
        let len = a.distance(b);
        let away = Point2::new(on.x - d.y / len * off, on.y + d.x / len * off);
        prop_assert!(point_segment_distance(away, &s) > 0.0);
    }

    #[test]
    fn polygon_area_rigid_and_rotation_invariant(
        verts in prop::collection::vec(pt(), 3..20),
        shift in 0usize..20,
        theta in 0.0..std::f64::consts::TAU,
        tx in -50.0..50.0f64,
        ty in -50.0..50.0f64,
    ) {
        let Ok(poly) = Polygon::new(verts.clone()) else { return Ok(()); };
        let area = polygon_area(&poly);
        prop_assume!(area.abs() > 1e-6);
        let mut rotated = verts.clone();
        rotated.rotate_left(shift % verts.len());
        prop_assert!(rel(polygon_area(&Polygon::new(rotated).unwrap()), area) <= 1e-10);
        let moved = Polygon::new(verts.iter().map(|&p| rigid(p, theta, (tx, ty))).collect()).unwrap();
        prop_assert!(rel(polygon_area(&moved), area) <= 1e-10);
    }

    #[test]
    fn circumcircle_is_equidistant(a in pt(), b in pt(), c in pt()) {
        let Ok((center, r)) = circumcircle(a, b, c) else { return Ok(()); };
        for p in [a, b, c] {
            prop_assert!(rel(center.distance(p), r) <= 1e-10);
        }
    }

    #[test]
    fn nearest_points_agree_with_clearance(c in cloud(3, 60), q in prop::collection::vec(pt(), 1..20)) {
        let Ok(field) = ClearanceField::new(&c) else { return Ok(()); };
        let none = IdSet::new(c.len());
        for p in q {
            let hit = field.nearest_points(p, &none, 0.0).unwrap();
            prop_assert_eq!(hit.distance, field.clearance(p));
        }
    }

    #[test]
    fn mds_invariant_under_rigid_motion_and_scaling(
        c in cloud(6, 50),
        theta in 0.0..std::f64::consts::TAU,
        tx in -50.0..50.0f64,
        lambda in 0.01..100.0f64,
    ) {
        let Ok(hull) = convex_hull(&c) else { return Ok(()); };
        let Ok(interior) = interior_points(&c, &hull) else { return Ok(()); };
        let cfg = LocatorConfig::default();
        let scored = enumerate_hull_segments(&hull, &c, &cfg).unwrap();
        let best = best_segment(&scored).unwrap();
        // skip configurations with a near tie for the minimum
        prop_assume!(scored.len() < 2 || rel(scored[1].mds, best.mds) > 1e-6);

        let moved = PointCloud::new(c.points().iter().map(|&p| rigid(p, theta, (tx, -tx))).collect()).unwrap();
        let scaled = PointCloud::new(c.points().iter().map(|&p| Point2::new(p.x * lambda, p.y * lambda)).collect()).unwrap();
        for s in &scored {
            let m = mds_score(&Segment::new(moved.point(s.i), moved.point(s.j)).unwrap(), &interior, &moved).unwrap();
            prop_assert!(rel(m, s.mds) <= 1e-10);
            let l = mds_score(&Segment::new(scaled.point(s.i), scaled.point(s.j)).unwrap(), &interior, &scaled).unwrap();
            prop_assert!(rel(l, lambda * s.mds) <= 1e-10);
        }
        let scaled_hull = convex_hull(&scaled).unwrap();
        let scaled_best = *best_segment(&enumerate_hull_segments(&scaled_hull, &scaled, &cfg).unwrap()).unwrap();
        prop_assert_eq!((scaled_best.i, scaled_best.j), (best.i, best.j));
    }

    #[test]
    fn enumeration_counts_match_policy(c in cloud(5, 60), seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let Ok(hull) = convex_hull(&c) else { return Ok(()); };
        if interior_points(&c, &hull).is_err() { return Ok(()); }
        let h = hull.len();
        let count = |p| enumerate_hull_segments(&hull, &c, &LocatorConfig::new(p, 1).unwrap()).unwrap().len();
        prop_assert_eq!(count(StartPolicy::AllPairs), h * (h - 1) / 2);
        prop_assert_eq!(count(StartPolicy::SingleStart(hull[pick.index(h)])), h - 1);
        prop_assert_eq!(count(StartPolicy::RandomStart(seed)), h - 1);
    }

    #[test]
    fn dv_point_maximizes_sampled_clearance(c in cloud(6, 60), k in 3usize..40) {
        let Ok(hull) = convex_hull(&c) else { return Ok(()); };
        let Ok(scored) = enumerate_hull_segments(&hull, &c, &LocatorConfig::default()) else { return Ok(()); };
        let field = ClearanceField::new(&c).unwrap();
        let best = best_segment(&scored).unwrap();
        let dv = dv_point(best, &field, k).unwrap();
        for s in 0..=k {
            let p = best.segment.sample(s, k);
            prop_assert!(dv.clearance >= c.points().iter().map(|q| q.distance(p)).fold(f64::INFINITY, f64::min));
        }
    }

    #[test]
    fn envelope_growth_is_monotone_and_exclusive(seed in any::<u64>(), n in 20usize..120, k in 3usize..20) {
        let c = gen_single_circle::<f64>(&EnsembleSpec::single_circle(n, seed)).unwrap();
        let hull = convex_hull(&c).unwrap();
        let scored = enumerate_hull_segments(&hull, &c, &LocatorConfig::default()).unwrap();
        let field = ClearanceField::new(&c).unwrap();
        let dv = dv_point(best_segment(&scored).unwrap(), &field, k).unwrap();
        let cfg = SweepConfig::with_k(k).unwrap();
        let v = run_to_convergence(&scored, &dv, &field, &cfg, InitialScope::default()).unwrap();
        prop_assert_eq!(v.history.len(), v.orders_used);
        prop_assert!(v.orders_used <= n);
        prop_assert!(v.history.windows(2).all(|w| w[0].members <= w[1].members));
        let mut seen = IdSet::new(n);
        prop_assert!(v.members.iter().all(|&id| seen.insert(id)));
        prop_assert!(v.vertex_ids.iter().all(|&id| seen.contains(id)));
    }

    #[test]
    fn single_circle_leaves_disk_empty(seed in any::<u64>(), n in 3usize..400, jitter in 0.0..0.5f64) {
        let spec = EnsembleSpec { jitter, ..EnsembleSpec::single_circle(n, seed) };
        let c = gen_single_circle::<f64>(&spec).unwrap();
        prop_assert!(c.points().iter().all(|p| p.x.hypot(p.y) >= spec.radius - spec.jitter - 1e-12));
    }
}
