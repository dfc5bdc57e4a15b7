//! Subcommand bodies. Each returns the text to write so that it can be
//! tested without a process boundary.

use orthowatch_core::{
    balanced_groups, coverage_check, generate, orthoconvex_kernel, route_metrics, segment_inside,
    vertical_decomposition, BalancedGroup, CoverageReport, GenParams, OrthoPolygon, PolygonClass, Route, Slab, Solution,
    SolveError, Step, TrimMode,
};

use crate::error::{CliError, Result};
use crate::io::{to_json, DecompositionFile, PolygonFile, RouteFile};
use crate::render::{render_svg, RenderOptions, Scene};

pub fn cmd_gen(params: &GenParams) -> Result<String> {
    let p = generate(params)?;
    to_json(&PolygonFile::from_polygon(&p))
}

/// Balanced groups of a monotone polygon, or of every monotone piece of a
/// path polygon.
fn groups_of(sol: &Solution) -> Vec<BalancedGroup> {
    match sol {
        Solution::Monotone(m) => m.groups.clone(),
        Solution::Path(ps) => ps
            .plan
            .pieces()
            .flat_map(|ids| {
                let slabs: Vec<Slab> = ids.iter().map(|&id| ps.decomposition.slabs()[id - 1]).collect();
                balanced_groups(&slabs)
            })
            .collect(),
    }
}

pub fn cmd_decompose(p: &OrthoPolygon) -> Result<String> {
    let d = vertical_decomposition(p);
    let file = match d.class() {
        PolygonClass::Other => DecompositionFile::new(&d, &[], None),
        _ => {
            let sol = orthowatch_core::solve(p, TrimMode::Off)?;
            DecompositionFile::new(&d, &groups_of(&sol), sol.plan().cloned())
        }
    };
    to_json(&file)
}

pub fn route_file(p: &OrthoPolygon, trim: TrimMode) -> Result<RouteFile> {
    let sol = orthowatch_core::solve(p, trim)?;
    let route = sol.route();
    check_contained(p, route).map_err(|e| CliError::Internal(format!("pipeline route {e}")))?;
    Ok(RouteFile::new(route, &route_metrics(route), sol.plan().cloned()))
}

pub fn cmd_route(p: &OrthoPolygon, trim: TrimMode) -> Result<String> {
    to_json(&route_file(p, trim)?)
}

fn check_contained(p: &OrthoPolygon, route: &Route) -> std::result::Result<(), String> {
    if route.points.is_empty() {
        return Err("is empty".into());
    }
    for (a, b) in route.segments() {
        if a.x != b.x && a.y != b.y {
            return Err(format!("segment {a} to {b} is not axis-parallel"));
        }
    }
    let inside = if route.is_point() {
        segment_inside(p, route.points[0], route.points[0])
    } else {
        route.segments().all(|(a, b)| segment_inside(p, a, b))
    };
    if inside {
        Ok(())
    } else {
        Err("leaves the polygon".into())
    }
}

/// Coverage of `route`, or of the pipeline route when none is given. The
/// boolean is true iff every sample is covered.
pub fn cmd_check(p: &OrthoPolygon, route: Option<Route>, trim: TrimMode, step: Step) -> Result<(String, bool)> {
    let route = match route {
        Some(r) => r,
        None => orthowatch_core::solve_path_polygon(p, trim)?,
    };
    check_contained(p, &route).map_err(|e| CliError::Coverage(format!("route {e}")))?;
    let report: CoverageReport = coverage_check(p, &route, step)?;
    let full = report.is_full();
    Ok((to_json(&report)?, full))
}

pub fn cmd_render(p: &OrthoPolygon, route: Option<Route>, trim: TrimMode, opts: &RenderOptions) -> Result<String> {
    let d = vertical_decomposition(p);
    let sol = match orthowatch_core::solve(p, trim) {
        Ok(s) => Some(s),
        Err(SolveError::DualGraphNotPath) => None,
        Err(e) => return Err(e.into()),
    };
    let groups = sol.as_ref().map(groups_of).unwrap_or_default();
    let route = route.or_else(|| sol.as_ref().map(|s| s.route().clone()));
    let kernel = if p.is_orthoconvex() { orthoconvex_kernel(p).ok() } else { None };
    let scene = Scene { slabs: d.slabs(), groups: &groups, route: route.as_ref(), kernel };
    render_svg(p, &scene, opts)
}
