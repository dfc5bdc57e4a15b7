//! End-to-end behaviour on the hand-built fixtures.

use orthowatch_core::{
    brute_force_min_bends, coverage_check, fixtures, orthoconvex_kernel, route_metrics, sees, solve, solve_monotone,
    split_pieces, vertical_decomposition, weakly_visible_axis, MinBends, PlanElement, Point, PolygonClass, RatPoint,
    SolveError, Step, TrimMode,
};

#[test]
fn classes() {
    let class = |p| vertical_decomposition(&p).class();
    assert_eq!(class(fixtures::rectangle()), PolygonClass::Monotone);
    assert_eq!(class(fixtures::l_shape()), PolygonClass::Monotone);
    assert_eq!(class(fixtures::upright_u()), PolygonClass::Monotone);
    assert_eq!(class(fixtures::sideways_u()), PolygonClass::PathPolygon);
    assert_eq!(class(fixtures::tight_spiral()), PolygonClass::PathPolygon);
    assert_eq!(class(fixtures::comb()), PolygonClass::Other);
}

#[test]
fn safe_routes_cover_every_supported_fixture() {
    for (name, p) in [
        ("rectangle", fixtures::rectangle()),
        ("l_shape", fixtures::l_shape()),
        ("plus_sign", fixtures::plus_sign()),
        ("sideways_u", fixtures::sideways_u()),
        ("upright_u", fixtures::upright_u()),
        ("tight_spiral", fixtures::tight_spiral()),
        ("two_corridors", fixtures::two_corridors()),
        ("three_corridors", fixtures::three_corridors()),
        ("end_group_pocket", fixtures::end_group_pocket()),
    ] {
        let route = solve(&p, TrimMode::Safe).unwrap().route().clone();
        let report = coverage_check(&p, &route, Step::HALF).unwrap();
        assert!(report.is_full(), "{name}: {:?}", report.uncovered);
    }
}

#[test]
fn comb_is_rejected() {
    assert_eq!(solve(&fixtures::comb(), TrimMode::Safe).unwrap_err(), SolveError::DualGraphNotPath);
}

#[test]
fn three_corridors_bends() {
    let p = fixtures::three_corridors();
    assert_eq!(route_metrics(&solve_monotone(&p, TrimMode::Off).unwrap()).bends, 4);
}

#[test]
fn kernel_points_see_the_boundary() {
    for p in [fixtures::rectangle(), fixtures::l_shape(), fixtures::plus_sign()] {
        let k = orthoconvex_kernel(&p).unwrap();
        let boundary: Vec<RatPoint> = p
            .edges()
            .flat_map(|e| {
                let steps = 2 * e.length();
                (0..steps).map(move |t| {
                    RatPoint::new(2 * e.start.x + (e.end.x - e.start.x).signum() * t, 2 * e.start.y + (e.end.y - e.start.y).signum() * t, 2)
                })
            })
            .collect();
        for c in k.corners() {
            for &b in &boundary {
                assert!(sees(&p, c, b), "{c} misses {b:?}");
            }
        }
    }
}

#[test]
fn sideways_u_plan() {
    let d = vertical_decomposition(&fixtures::sideways_u());
    let plan = split_pieces(&d).unwrap();
    let reflex: Vec<_> = plan.elements.iter().filter(|e| matches!(e, PlanElement::ReflexRect { .. })).collect();
    assert_eq!(reflex.len(), 1);
}

#[test]
fn weak_visibility_of_corridor_aligns() {
    let p = fixtures::two_corridors();
    let s1 = (Point::new(0, 1), Point::new(3, 1));
    let s2 = (Point::new(0, 2), Point::new(3, 2));
    assert_eq!(weakly_visible_axis(&p, s1, s2), Ok(true));
}

#[test]
fn brute_force_small_fixtures() {
    assert_eq!(brute_force_min_bends(&fixtures::rectangle(), 2), Ok(MinBends::Exact(0)));
    assert_eq!(brute_force_min_bends(&fixtures::l_shape(), 2), Ok(MinBends::Exact(0)));
    // One bend beats the two of the stitched route; see the bend-optimality
    // criterion.
    assert_eq!(brute_force_min_bends(&fixtures::two_corridors(), 2), Ok(MinBends::Exact(1)));
}
