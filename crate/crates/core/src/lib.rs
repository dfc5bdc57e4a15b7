//! Watchman routes for x-monotone and path-shaped orthogonal polygons.
//!
//! The pipeline cuts the polygon into vertical slabs, groups consecutive
//! slabs that share a horizontal corridor, lays one horizontal align per
//! group, joins the aligns with vertical connectors and trims both ends.
//! Everything runs on exact integer coordinates.

pub mod balanced;
pub mod construct;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod kernel;
pub mod oracle;
pub mod path;
pub mod polygen;
pub mod polygon;
pub mod route;

pub use balanced::{balanced_groups, decompose_balanced, group_corridor, BalancedGroup};
pub use construct::{polygon_from_profile, polygon_from_rects, Rect};
pub use decomposition::{classify, dual_path_order, vertical_decomposition, Decomposition, PolygonClass, Side, Slab};
pub use error::{GenError, OracleError, PolygonError, SolveError};
pub use kernel::{orthoconvex_kernel, KernelRect};
pub use oracle::{
    brute_force_min_bends, brute_force_route, coverage_check, point_in_polygon, sees, segment_inside, weakly_visible_axis, CoverageReport,
    MinBends, RatPoint, Step, BRUTE_FORCE_SLAB_LIMIT,
};
pub use path::{
    find_reflex_rectangles, piece_polygon, solve, solve_path_polygon, solve_path_polygon_detailed, split_pieces,
    PathSolution, PiecePlan, PlanElement, Solution,
};
pub use polygen::{generate, GenKind, GenParams};
pub use polygon::{Edge, OrthoPolygon, Point, COORD_LIMIT};
pub use route::{
    aligns_and_connectors, connector_length, normalize, route_metrics, select_align_levels, solve_monotone,
    solve_monotone_detailed, stitch_route, trim_interval, trim_route, Align, Connector, MonotoneSolution, Route,
    RouteMetrics, TrimMode,
};
